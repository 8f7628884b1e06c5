#pragma once

#include <optional>
#include <vector>

#include "linewl/graph.hpp"

namespace linewl {

// Parameters of a strongly regular graph srg(v, k, lambda, mu).
struct SrgParams {
    int v;
    int k;
    int lambda;
    int mu;

    bool operator==(const SrgParams&) const = default;
};

// The common degree if all degrees are equal, else nullopt. The empty graph
// counts as 0-regular.
std::optional<int> is_regular(const Graph& g);

// Strict mode: requires v >= 2, regularity, a constant common-neighbor count
// over adjacent pairs (lambda) and over non-adjacent pairs (mu). Complete
// graphs report mu = 0. Returned parameters always satisfy
// (v-k-1)*mu == k*(k-lambda-1).
std::optional<SrgParams> srg_params(const Graph& g);

// Permissive mode additionally admits the k <= 1 degenerate cases (the
// one-node graph in particular); used by the low-degree classification.
std::optional<SrgParams> srg_params_permissive(const Graph& g);

// t = 1 is regularity, t = 2 is strong regularity; other t rejected.
bool is_isoregular(const Graph& g, int t);

struct InducedMatch {
    std::vector<int> mapping;  // pattern node -> host node, injective
};

// First induced occurrence of pattern in host (adjacency and non-adjacency
// both preserved), in a deterministic search order; nullopt when absent.
// Guarded at patterns of more than 10 nodes.
std::optional<InducedMatch> find_induced(const Graph& host, const Graph& pattern);

// Equivalent to find_induced(g, K_{1,3}).has_value(); scans each
// neighborhood for an independent triple, O(sum of degree^3).
bool contains_claw(const Graph& g);

// The nine minimal forbidden induced subgraphs whose absence characterizes
// line graphs.
const std::vector<Graph>& beineke_graphs();

// True iff no forbidden graph occurs as an induced subgraph.
bool is_line_graph(const Graph& g);

}  // namespace linewl
