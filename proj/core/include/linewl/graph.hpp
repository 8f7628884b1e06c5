#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linewl {

// Thrown when an operation is asked to exceed its configured size guard.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge as an unordered node pair; stored and reported with first < second.
using Edge = std::pair<int, int>;

// Immutable undirected simple graph on nodes 0..n-1. Neighbor lists are
// sorted, symmetric and free of self-loops; all transforms return new graphs.
class Graph {
public:
    Graph() = default;

    int node_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    int degree(int u) const;
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int u) const;

    // All edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::string& name() const { return name_; }
    Graph renamed(std::string name) const;

    // New graph with node u mapped to perm[u]; perm must be a permutation.
    Graph permuted(std::span<const int> perm) const;
    Graph complement() const;
    // Subgraph induced on the given nodes, relabeled 0..k-1 in the given order.
    Graph induced(std::span<const int> nodes) const;

    // Structural equality: same node count and identical adjacency.
    bool operator==(const Graph& other) const {
        return adj_ == other.adj_;
    }

    static Graph from_sorted_adjacency(std::vector<std::vector<int>> adj,
                                       std::string name = "");

private:
    std::vector<std::vector<int>> adj_;
    std::int64_t edge_count_ = 0;
    std::string name_;

    void check_node(int u) const;
};

// Builds a graph from an edge list. Duplicate edges and (u,v)/(v,u) repeats
// collapse to a single edge. Throws std::invalid_argument on a self-loop and
// std::out_of_range on a node id outside 0..n-1.
Graph build_graph(int node_count, std::span<const Edge> edges,
                  std::string name = "");
Graph build_graph(int node_count, std::initializer_list<Edge> edges,
                  std::string name = "");

struct ComponentDecomposition {
    std::vector<Graph> components;                // each relabeled 0..m-1
    std::vector<std::pair<int, int>> membership;  // node -> (component, local id)
};

// BFS decomposition; components ordered by their smallest original node id.
ComponentDecomposition connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Disjoint union with node ids offset by cumulative node counts.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);

}  // namespace linewl
