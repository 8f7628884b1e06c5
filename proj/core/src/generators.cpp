#include "linewl/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "linewl/line_graph.hpp"

namespace linewl {

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges, "P" + std::to_string(n));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges, "C" + std::to_string(n));
}

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return build_graph(leaves + 1, edges, "K1," + std::to_string(leaves));
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(n, edges, "K" + std::to_string(n));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite needs a, b >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return build_graph(a + b, edges,
                       "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return build_graph(10, edges, "Petersen");
}

Graph prism() {
    std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4},
                               {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    return build_graph(6, edges, "Prism");
}

Graph circulant(int n, std::span<const int> offsets) {
    if (n < 1) throw std::invalid_argument("circulant needs n >= 1");
    std::vector<Edge> edges;
    for (int off : offsets) {
        if (off <= 0 || off >= n)
            throw std::invalid_argument("circulant offset out of range");
        for (int i = 0; i < n; ++i) {
            int j = (i + off) % n;
            if (i != j) edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::string name = "Circ" + std::to_string(n) + "(";
    for (std::size_t i = 0; i < offsets.size(); ++i)
        name += (i ? "," : "") + std::to_string(offsets[i]);
    name += ")";
    return build_graph(n, edges, name);
}

Graph rook_graph(int n) {
    if (n < 1) throw std::invalid_argument("rook graph needs n >= 1");
    std::vector<Edge> edges;
    auto id = [n](int r, int c) { return r * n + c; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            for (int c2 = c + 1; c2 < n; ++c2)
                edges.emplace_back(id(r, c), id(r, c2));
            for (int r2 = r + 1; r2 < n; ++r2)
                edges.emplace_back(id(r, c), id(r2, c));
        }
    return build_graph(n * n, edges,
                       "Rook" + std::to_string(n) + "x" + std::to_string(n));
}

Graph shrikhande() {
    std::vector<Edge> edges;
    auto id = [](int x, int y) { return ((x % 4 + 4) % 4) * 4 + ((y % 4 + 4) % 4); };
    const int conn[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (const auto& c : conn) {
                int u = id(x, y), v = id(x + c[0], y + c[1]);
                edges.emplace_back(std::min(u, v), std::max(u, v));
            }
    return build_graph(16, edges, "Shrikhande");
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Graph paley(int q) {
    if (q % 4 != 1) throw std::invalid_argument("Paley graph needs q = 1 mod 4");
    int p = 0, e = 0;
    if (is_prime(q)) {
        p = q;
        e = 1;
    } else {
        for (int r = 2; r * r <= q; ++r)
            if (r * r == q && is_prime(r)) {
                p = r;
                e = 2;
            }
        if (e == 0)
            throw std::invalid_argument(
                "Paley graph supports primes and prime squares only");
    }

    // Field elements are a + b*alpha with alpha^2 = nr, nr the smallest
    // quadratic non-residue mod p; for e = 1 the b component is unused.
    int nr = 0;
    if (e == 2) {
        std::vector<bool> residue(p, false);
        for (int z = 1; z < p; ++z) residue[z * z % p] = true;
        for (int r = 2; r < p; ++r)
            if (!residue[r]) {
                nr = r;
                break;
            }
    }
    auto mul = [&](int x, int y) {
        if (e == 1) return static_cast<int>((static_cast<long long>(x) * y) % q);
        int a1 = x % p, b1 = x / p, a2 = y % p, b2 = y / p;
        int a = (a1 * a2 + nr * b1 * b2) % p;
        int b = (a1 * b2 + a2 * b1) % p;
        return a + b * p;
    };
    auto sub = [&](int x, int y) {
        if (e == 1) return (x - y + q) % q;
        int a = ((x % p) - (y % p) + p) % p;
        int b = ((x / p) - (y / p) + p) % p;
        return a + b * p;
    };

    std::vector<bool> square(q, false);
    for (int z = 1; z < q; ++z) square[mul(z, z)] = true;

    std::vector<Edge> edges;
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v)
            if (square[sub(u, v)]) edges.emplace_back(u, v);
    return build_graph(q, edges, "Paley" + std::to_string(q));
}

Graph triangular(int m) {
    if (m < 2) throw std::invalid_argument("triangular graph needs m >= 2");
    return line_graph(complete(m)).result.renamed("T" + std::to_string(m));
}

namespace {

Graph seidel_switch(const Graph& g, const std::vector<int>& set) {
    std::vector<bool> in_set(g.node_count(), false);
    for (int v : set) in_set[v] = true;
    std::vector<Edge> edges;
    for (int u = 0; u < g.node_count(); ++u)
        for (int v = u + 1; v < g.node_count(); ++v) {
            bool adj = g.adjacent(u, v);
            if (in_set[u] != in_set[v]) adj = !adj;
            if (adj) edges.emplace_back(u, v);
        }
    return build_graph(g.node_count(), edges);
}

}  // namespace

std::vector<Graph> chang_graphs() {
    const EdgeNodeMap t8 = line_graph(complete(8));
    std::map<Edge, int> node_of;
    for (int x = 0; x < t8.result.node_count(); ++x) node_of[t8.edge_of[x]] = x;
    auto nodes_of = [&](std::vector<Edge> es) {
        std::vector<int> out;
        for (auto [u, v] : es) out.push_back(node_of.at({std::min(u, v), std::max(u, v)}));
        return out;
    };
    // Switching sets: a perfect matching of K_8, an 8-cycle, and a disjoint
    // 3-cycle plus 5-cycle.
    std::vector<std::vector<int>> sets = {
        nodes_of({{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
        nodes_of({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}}),
        nodes_of({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}}),
    };
    std::vector<Graph> out;
    for (std::size_t i = 0; i < sets.size(); ++i)
        out.push_back(seidel_switch(t8.result, sets[i])
                          .renamed("Chang" + std::to_string(i + 1)));
    return out;
}

CfiGadget cfi_gadget(int k) {
    if (k < 1) throw std::invalid_argument("gadget arity must be >= 1");
    CfiGadget g;
    g.arity = k;
    for (int i = 0; i < k; ++i) g.a_nodes.push_back(i);
    for (int i = 0; i < k; ++i) g.b_nodes.push_back(k + i);
    std::vector<Edge> edges;
    int next = 2 * k;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        g.m_nodes.push_back(next);
        for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1)
                edges.emplace_back(next, g.a_nodes[i]);
            else
                edges.emplace_back(next, g.b_nodes[i]);
        }
        ++next;
    }
    g.graph = build_graph(next, edges, "X" + std::to_string(k));
    return g;
}

CfiPair cfi_pair(const Graph& base, int twist_edge) {
    if (!is_connected(base) || base.node_count() == 0)
        throw std::invalid_argument("CFI base must be connected");
    for (int u = 0; u < base.node_count(); ++u)
        if (base.degree(u) < 2)
            throw std::invalid_argument("CFI base needs minimum degree 2");
    const std::vector<Edge> base_edges = base.edges();
    if (twist_edge < 0 || twist_edge >= static_cast<int>(base_edges.size()))
        throw std::invalid_argument("twist edge index out of range");

    // Gadget layout and port assignment; incident edges sorted by neighbor id
    // give the port index at each endpoint.
    std::vector<CfiGadget> gadgets;
    std::vector<int> offset(base.node_count(), 0);
    int total = 0;
    for (int v = 0; v < base.node_count(); ++v) {
        gadgets.push_back(cfi_gadget(base.degree(v)));
        offset[v] = total;
        total += gadgets[v].graph.node_count();
    }
    auto port_index = [&](int v, int neighbor) {
        const auto& nb = base.neighbors(v);
        return static_cast<int>(
            std::lower_bound(nb.begin(), nb.end(), neighbor) - nb.begin());
    };

    auto build_member = [&](bool twisted) {
        std::vector<Edge> edges;
        for (int v = 0; v < base.node_count(); ++v)
            for (auto [x, y] : gadgets[v].graph.edges())
                edges.emplace_back(offset[v] + x, offset[v] + y);
        for (int e = 0; e < static_cast<int>(base_edges.size()); ++e) {
            const auto [u, v] = base_edges[e];
            const int i = port_index(u, v);
            const int j = port_index(v, u);
            const int au = offset[u] + gadgets[u].a_nodes[i];
            const int bu = offset[u] + gadgets[u].b_nodes[i];
            const int av = offset[v] + gadgets[v].a_nodes[j];
            const int bv = offset[v] + gadgets[v].b_nodes[j];
            if (twisted && e == twist_edge) {
                edges.emplace_back(au, bv);
                edges.emplace_back(bu, av);
            } else {
                edges.emplace_back(au, av);
                edges.emplace_back(bu, bv);
            }
        }
        return build_graph(total, edges);
    };

    CfiPair out;
    out.base = base;
    out.twist_edge = twist_edge;
    out.untwisted = build_member(false).renamed("CFI(" + base.name() + ")");
    out.twisted = build_member(true).renamed("CFI~(" + base.name() + ")");
    return out;
}

std::vector<std::pair<std::string, Graph>> srg_instances() {
    std::vector<std::pair<std::string, Graph>> out;
    auto add = [&](const Graph& g) { out.emplace_back(g.name(), g); };
    add(rook_graph(4));
    add(shrikhande());
    add(rook_graph(4).complement().renamed("Rook4x4-complement"));
    add(shrikhande().complement().renamed("Shrikhande-complement"));
    add(paley(5));
    add(paley(9));
    add(paley(13));
    add(paley(17));
    add(paley(25));
    add(triangular(5));
    add(triangular(6));
    add(triangular(7));
    add(triangular(8));
    for (const Graph& g : chang_graphs()) add(g);
    add(petersen());
    add(complete(5));
    return out;
}

std::vector<GraphPair> srg_pair_suite() {
    std::vector<GraphPair> out;
    const Graph rook = rook_graph(4);
    const Graph shri = shrikhande();
    const Graph t8 = triangular(8);
    const std::vector<Graph> chang = chang_graphs();
    auto add = [&](const Graph& a, const Graph& b) {
        out.push_back({a, b, PairCategory::strongly_regular});
    };
    add(rook, shri);
    add(rook.complement(), shri.complement());
    add(t8, chang[0]);
    add(t8, chang[1]);
    add(t8, chang[2]);
    add(chang[0], chang[1]);
    return out;
}

std::vector<GraphPair> cfi_pair_suite() {
    std::vector<GraphPair> out;
    for (const Graph& base :
         {complete(4), complete_bipartite(3, 3), prism(), petersen()}) {
        CfiPair pair = cfi_pair(base, 0);
        out.push_back({pair.untwisted, pair.twisted, PairCategory::cfi});
    }
    return out;
}

std::vector<GraphPair> regular_pair_suite() {
    std::vector<GraphPair> out;
    auto add = [&](const Graph& a, const Graph& b) {
        out.push_back({a, b, PairCategory::simple_regular});
    };
    add(cycle(6), disjoint_union({cycle(3), cycle(3)}));
    add(cycle(8), disjoint_union({cycle(3), cycle(5)}));
    add(prism(), complete_bipartite(3, 3));
    {
        const int off1[] = {1, 2}, off2[] = {1, 3};
        add(circulant(8, off1), circulant(8, off2));
    }
    {
        const int off1[] = {1, 2}, off2[] = {2, 3};
        add(circulant(10, off1), circulant(10, off2));
    }
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 0) throw std::invalid_argument("negative node count");
    p = std::clamp(p, 0.0, 1.0);
    // Compare the top 53 bits of the generator output against a fixed
    // threshold; avoids distribution implementations that vary by platform.
    const std::uint64_t bound =
        static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) < bound) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace linewl
