#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "linewl/graph.hpp"

namespace linewl {

struct IsoWitness {
    bool isomorphic = false;
    // When isomorphic: node bijection g1 -> g2 preserving adjacency and
    // non-adjacency, re-verified before being returned.
    std::optional<std::vector<int>> mapping;
};

struct IsoOptions {
    // Backtracking is exact but intended for small graphs; raise with care.
    int max_nodes = 32;
};

// Exact isomorphism decision by backtracking with degree and color-refinement
// pruning. Throws guard_error above max_nodes (use WL screening instead).
IsoWitness are_isomorphic(const Graph& g1, const Graph& g2,
                          const IsoOptions& opts = {});

// Streams exactly one representative per isomorphism class of graphs on
// exactly n nodes, in a deterministic order. Guarded at n <= 9.
void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace linewl
