#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "linewl/graph.hpp"

namespace linewl {

struct budget_error : std::runtime_error {
    std::int64_t required;
    std::int64_t allowed;
    budget_error(const std::string& what, std::int64_t req, std::int64_t allow)
        : std::runtime_error(what + ": needs " + std::to_string(req) +
                             ", budget " + std::to_string(allow)),
          required(req),
          allowed(allow) {}
};

// Default cap on intermediate node counts for iterated transforms; dense
// inputs grow superlinearly and the guard turns runaway memory into an error.
inline constexpr std::int64_t kDefaultNodeBudget = 1'000'000;

// Line transform result with the edge -> node correspondence. Result node x
// represents source edge edge_of[x] (u < v); result nodes are ordered by the
// lexicographic order of their source edges.
struct EdgeNodeMap {
    Graph source;
    Graph result;
    std::vector<Edge> edge_of;
};

EdgeNodeMap line_graph(const Graph& g);

// L^(n)(g); n = 0 returns g unchanged. Throws budget_error when an
// intermediate graph would exceed node_budget nodes.
Graph iterated_line_graph(const Graph& g, int depth,
                          std::int64_t node_budget = kDefaultNodeBudget);

// True iff every result node w_e with edge_of(w_e) = (u,v) has degree
// d(u) + d(v) - 2 in the result.
bool line_degree_check(const Graph& g, const EdgeNodeMap& map);

}  // namespace linewl
