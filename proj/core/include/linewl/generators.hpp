#pragma once

#include <random>
#include <string>
#include <vector>

#include "linewl/graph.hpp"
#include "linewl/pair_file.hpp"

namespace linewl {

Graph path(int n);                      // n >= 1 nodes
Graph cycle(int n);                     // n >= 3
Graph star(int leaves);                 // K_{1,leaves}, node 0 is the center
Graph complete(int n);                  // n >= 1
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph prism();                          // triangular prism, 3-regular on 6 nodes
Graph circulant(int n, std::span<const int> offsets);

Graph rook_graph(int n);                // n x n rook's graph
Graph shrikhande();                     // Cayley graph on Z4 x Z4, S = {±(1,0), ±(0,1), ±(1,1)}
Graph paley(int q);                     // q a prime or prime square, q % 4 == 1
Graph triangular(int m);                // T(m) = L(K_m)
std::vector<Graph> chang_graphs();      // the three Seidel switchings of T(8)

// Parity gadget with ports a_1..a_k, b_1..b_k and middles m_S over the
// even-cardinality subsets S of the port indices; m_S is joined to a_i for
// i in S and to b_i otherwise. m_nodes are ordered by ascending subset
// bitmask.
struct CfiGadget {
    int arity = 0;
    Graph graph;
    std::vector<int> a_nodes;
    std::vector<int> b_nodes;
    std::vector<int> m_nodes;
};

CfiGadget cfi_gadget(int k);  // k >= 1

// Non-isomorphic pair built by placing an X_{d(v)} gadget at every base node
// and joining ports across base edges; the twisted member crosses the a/b
// ports on exactly one base edge.
struct CfiPair {
    Graph base;
    Graph untwisted;
    Graph twisted;
    int twist_edge = 0;  // index into base.edges()
};

// Base must be connected with minimum degree 2. Port indices at a node follow
// its incident edges sorted by neighbor id.
CfiPair cfi_pair(const Graph& base, int twist_edge = 0);

// Named strongly regular instances, all constructed from first principles.
std::vector<std::pair<std::string, Graph>> srg_instances();

// Benchmark suites (see the pair-file tags).
std::vector<GraphPair> srg_pair_suite();
std::vector<GraphPair> cfi_pair_suite();
std::vector<GraphPair> regular_pair_suite();

// G(n, p) with a portable threshold test on the raw generator output.
Graph random_graph(int n, double p, std::mt19937_64& rng);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace linewl
