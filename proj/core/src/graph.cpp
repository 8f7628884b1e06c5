#include "linewl/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace linewl {

void Graph::check_node(int u) const {
    if (u < 0 || u >= node_count())
        throw std::out_of_range("node id " + std::to_string(u) +
                                " out of range for graph with " +
                                std::to_string(node_count()) + " nodes");
}

int Graph::degree(int u) const {
    check_node(u);
    return static_cast<int>(adj_[u].size());
}

bool Graph::adjacent(int u, int v) const {
    check_node(u);
    check_node(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int u) const {
    check_node(u);
    return adj_[u];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
    const int n = node_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match node count");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) {
        adj[perm[u]].reserve(adj_[u].size());
        for (int v : adj_[u]) adj[perm[u]].push_back(perm[v]);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return from_sorted_adjacency(std::move(adj), name_);
}

Graph Graph::complement() const {
    const int n = node_count();
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) {
        auto it = adj_[u].begin();
        for (int v = 0; v < n; ++v) {
            while (it != adj_[u].end() && *it < v) ++it;
            bool adj_uv = (it != adj_[u].end() && *it == v);
            if (v != u && !adj_uv) adj[u].push_back(v);
        }
    }
    return from_sorted_adjacency(std::move(adj));
}

Graph Graph::induced(std::span<const int> nodes) const {
    const int k = static_cast<int>(nodes.size());
    std::vector<int> local(node_count(), -1);
    for (int i = 0; i < k; ++i) {
        check_node(nodes[i]);
        if (local[nodes[i]] != -1)
            throw std::invalid_argument("duplicate node in induced selection");
        local[nodes[i]] = i;
    }
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int v : adj_[nodes[i]])
            if (local[v] != -1) adj[i].push_back(local[v]);
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return from_sorted_adjacency(std::move(adj));
}

Graph Graph::from_sorted_adjacency(std::vector<std::vector<int>> adj,
                                   std::string name) {
    Graph g;
    std::int64_t total = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
        assert(std::is_sorted(adj[u].begin(), adj[u].end()));
        assert(std::adjacent_find(adj[u].begin(), adj[u].end()) == adj[u].end());
        assert(!std::binary_search(adj[u].begin(), adj[u].end(),
                                   static_cast<int>(u)));
        total += static_cast<std::int64_t>(adj[u].size());
    }
    assert(total % 2 == 0);
    g.adj_ = std::move(adj);
    g.edge_count_ = total / 2;
    g.name_ = std::move(name);
    return g;
}

Graph build_graph(int node_count, std::span<const Edge> edges,
                  std::string name) {
    if (node_count < 0)
        throw std::invalid_argument("negative node count");
    std::vector<std::vector<int>> adj(node_count);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count)
            throw std::out_of_range("edge endpoint out of range: (" +
                                    std::to_string(u) + "," +
                                    std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected at node " +
                                        std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return Graph::from_sorted_adjacency(std::move(adj), std::move(name));
}

Graph build_graph(int node_count, std::initializer_list<Edge> edges,
                  std::string name) {
    return build_graph(node_count, std::span<const Edge>(edges.begin(), edges.size()),
                       std::move(name));
}

ComponentDecomposition connected_components(const Graph& g) {
    const int n = g.node_count();
    ComponentDecomposition out;
    out.membership.assign(n, {-1, -1});
    std::vector<int> order;
    for (int s = 0; s < n; ++s) {
        if (out.membership[s].first != -1) continue;
        const int comp = static_cast<int>(out.components.size());
        order.clear();
        order.push_back(s);
        out.membership[s] = {comp, 0};
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (int v : g.neighbors(order[head])) {
                if (out.membership[v].first != -1) continue;
                out.membership[v] = {comp, static_cast<int>(order.size())};
                order.push_back(v);
            }
        }
        // BFS order visits nodes in increasing distance; relabel locally by
        // ascending original id so the result is independent of queue order.
        std::vector<int> sorted_nodes = order;
        std::sort(sorted_nodes.begin(), sorted_nodes.end());
        for (int i = 0; i < static_cast<int>(sorted_nodes.size()); ++i)
            out.membership[sorted_nodes[i]] = {comp, i};
        out.components.push_back(g.induced(sorted_nodes));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    return connected_components(g).components.size() == 1;
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::vector<std::vector<int>> adj;
    int offset = 0;
    for (const Graph& g : parts) {
        for (int u = 0; u < g.node_count(); ++u) {
            std::vector<int> row;
            row.reserve(g.neighbors(u).size());
            for (int v : g.neighbors(u)) row.push_back(v + offset);
            adj.push_back(std::move(row));
        }
        offset += g.node_count();
    }
    return Graph::from_sorted_adjacency(std::move(adj));
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
    return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

}  // namespace linewl
