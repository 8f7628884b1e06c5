#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linewl/graph.hpp"

namespace linewl {

struct TheoremReport {
    std::string id;
    std::string universe;
    std::int64_t cases = 0;
    std::vector<std::string> counterexamples;  // graph6, sorted
    double seconds = 0.0;

    bool passed() const { return counterexamples.empty(); }
};

// Connected graphs up to n_max nodes: G iso H iff L(G) iso L(H), with the
// single exception pair {C_3, K_{1,3}}, which must be hit exactly once.
TheoremReport check_whitney(int n_max);

// Every X_k gadget with k >= 3 (and every CFI pair member built over a
// 3-regular base) contains an induced claw and so is not a line graph.
TheoremReport check_cfi_exclusion(std::span<const int> ks);

// Exhaustive over connected graphs up to n_max: every graph other than C_3,
// C_4, C_5 loses strong regularity within two transforms (some t <= 2 has
// L^t not strongly regular); the three cycles stay fixed.
TheoremReport check_srg_break(int n_max,
                              std::int64_t node_budget = 1'000'000);

// Generated strongly regular instances that contain a triangle and are not
// complete have a non-strongly-regular line graph.
TheoremReport check_srg_instance_break();

// Connected strongly regular graphs with degree k <= 2 among all connected
// graphs up to n_max nodes (permissive mode) are exactly the one-node graph,
// K_2, C_3, C_4 and C_5.
TheoremReport check_srg_low_degree(int n_max);

// Disjoint unions of equal complete graphs: copies of C_3 are fixed by the
// transform; for larger cliques strong regularity is lost within two steps.
TheoremReport check_srg_disconnected();

// d-regular inputs have (2d-2)-regular line graphs.
TheoremReport check_regularity_preserved();

// Iterated sizes over a window classify as shrinking (paths), eventually
// constant (cycles and the claw) or eventually strictly growing (every other
// connected sample).
TheoremReport check_growth(int window = 4);

struct TheoremSuiteOptions {
    int whitney_n_max = 7;
    int srg_break_n_max = 8;
    int low_degree_n_max = 6;
    int growth_window = 4;
};

std::vector<TheoremReport> run_all_theorems(const TheoremSuiteOptions& opts = {});

}  // namespace linewl
