#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linewl/graph.hpp"
#include "linewl/line_graph.hpp"

namespace linewl {

// Joint tuple budget for one refinement run; state is Theta(n^k).
inline constexpr std::int64_t kDefaultWlBudget = std::int64_t(1) << 25;

struct WlOptions {
    // Rounds cap; -1 means the theoretical stability bound max(n1,n2)^k + 1.
    std::int64_t max_rounds = -1;
    std::int64_t budget_tuples = kDefaultWlBudget;
};

// Per-round color histograms of the two graphs, as (color, count) pairs in
// ascending color order. Colors come from a dictionary shared by both graphs
// within a round, so equal vectors mean equal color multisets.
struct RoundHistogram {
    std::vector<std::pair<std::uint32_t, std::int64_t>> first;
    std::vector<std::pair<std::uint32_t, std::int64_t>> second;
};

// Refinement trace. Tuple ids: graph 1 occupies 0..n1^k-1, graph 2 follows;
// within a graph the id is the mixed-radix value of the tuple with the first
// position most significant. Color ids are assigned per round by sorting the
// (previous color, per-position replacement multisets) signatures, so they
// are canonical: relabeling an input never changes a histogram.
struct ColorPartition {
    int k = 1;
    std::array<std::int64_t, 2> tuple_counts{0, 0};
    std::vector<RoundHistogram> rounds;  // index = round, 0 = initial coloring
    // Smallest r with partition(r) == partition(r+1); when the run stopped
    // early (first differing histogram, or the rounds cap) this is the number
    // of refinement rounds executed instead.
    int rounds_to_stability = 0;
    std::vector<std::uint32_t> stable_colors;  // tuple id -> final color
};

struct WlVerdict {
    bool distinguished = false;
    // First round whose histograms differ; empty for undistinguished pairs
    // and for count-mismatch shortcuts that skip refinement entirely.
    std::optional<int> decided_at_round;
    int k = 1;
};

// Initial color seed of an ordered tuple: encodes, for every position pair
// (i, j) with i < j, whether u_i = u_j, u_i ~ u_j, or neither. Two tuples
// get equal seeds iff u_i -> v_i is an isomorphism of the induced ordered
// configurations.
std::uint64_t atomic_type(const Graph& g, std::span<const int> tuple);

// Oblivious k-WL run jointly on both graphs with a shared color dictionary.
// k = 1 degenerates to classic color refinement over neighbor multisets.
// Iteration stops at stability, at the first differing histogram, or at the
// rounds cap. Throws std::invalid_argument for k = 0 and budget_error when
// the joint tuple space exceeds the budget.
std::pair<ColorPartition, WlVerdict> wl_refine(const Graph& g1, const Graph& g2,
                                               int k, const WlOptions& opts = {});

// Everything bench needs from one (pair, k, depth) evaluation.
struct PairRunDetail {
    WlVerdict verdict;
    int rounds = 0;
    bool count_shortcut = false;  // node/edge counts differed after transform
    std::int64_t nodes_after_first = 0;
    std::int64_t nodes_after_second = 0;
    double refine_seconds = 0.0;  // wall time of the refinement call only
};

PairRunDetail run_pair_detailed(const Graph& g1, const Graph& g2, int k,
                                int depth, const WlOptions& opts = {},
                                std::int64_t node_budget = kDefaultNodeBudget);

// Applies the line transform at the given depth to both graphs, then decides
// distinguishability; differing node or edge counts short-circuit to
// distinguished without refinement.
WlVerdict wl_distinguishes_pair(const Graph& g1, const Graph& g2, int k,
                                int depth, const WlOptions& opts = {},
                                std::int64_t node_budget = kDefaultNodeBudget);

}  // namespace linewl
