#include "linewl/line_graph.hpp"

#include <algorithm>

namespace linewl {

EdgeNodeMap line_graph(const Graph& g) {
    std::vector<Edge> edges = g.edges();  // lexicographic
    const int m = static_cast<int>(edges.size());

    // Edges incident to one source node form a clique in the result; two
    // distinct edges of a simple graph share at most one endpoint, so every
    // adjacent result pair is produced by exactly one source node.
    std::vector<std::vector<int>> incident(g.node_count());
    for (int e = 0; e < m; ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }

    std::vector<std::vector<int>> adj(m);
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = edges[e];
        adj[e].reserve(g.degree(u) + g.degree(v) - 2);
    }
    for (int u = 0; u < g.node_count(); ++u) {
        const auto& inc = incident[u];
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                adj[inc[i]].push_back(inc[j]);
                adj[inc[j]].push_back(inc[i]);
            }
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());

    EdgeNodeMap out;
    out.source = g;
    out.result = Graph::from_sorted_adjacency(std::move(adj));
    out.edge_of = std::move(edges);
    return out;
}

Graph iterated_line_graph(const Graph& g, int depth, std::int64_t node_budget) {
    if (depth < 0) throw std::invalid_argument("negative transform depth");
    Graph cur = g;
    for (int step = 0; step < depth; ++step) {
        if (cur.edge_count() > node_budget)
            throw budget_error("line transform at depth " +
                                   std::to_string(step + 1) +
                                   " exceeds node budget",
                               cur.edge_count(), node_budget);
        cur = line_graph(cur).result;
    }
    return cur;
}

bool line_degree_check(const Graph& g, const EdgeNodeMap& map) {
    if (!(map.source == g)) return false;
    if (static_cast<std::int64_t>(map.edge_of.size()) != g.edge_count()) return false;
    for (int e = 0; e < map.result.node_count(); ++e) {
        const auto [u, v] = map.edge_of[e];
        if (map.result.degree(e) != g.degree(u) + g.degree(v) - 2) return false;
    }
    return true;
}

}  // namespace linewl
