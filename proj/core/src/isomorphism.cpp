#include "linewl/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "linewl/graph6.hpp"

namespace linewl {

namespace {

// Joint classic color refinement; returns stable colors from a shared
// dictionary so classes are comparable across the two graphs.
struct JointColors {
    std::vector<int> first;
    std::vector<int> second;
    bool same_histogram = true;
};

JointColors joint_refinement(const Graph& g1, const Graph& g2) {
    const int n1 = g1.node_count(), n2 = g2.node_count();
    const int n = n1 + n2;
    auto neighbors = [&](int x) -> const std::vector<int>& {
        return x < n1 ? g1.neighbors(x) : g2.neighbors(x - n1);
    };
    std::vector<int> color(n, 0);
    int classes = 1;
    for (int round = 0; round < n + 1; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int x = 0; x < n; ++x) {
            std::vector<int> s;
            s.push_back(color[x]);
            for (int y : neighbors(x)) s.push_back(x < n1 ? color[y] : color[y + n1]);
            std::sort(s.begin() + 1, s.end());
            sig[x] = {std::move(s), x};
        }
        std::vector<int> order(n);
        for (int x = 0; x < n; ++x) order[x] = x;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a].first < sig[b].first; });
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
            next[order[i]] = c;
        }
        const int next_classes = c + 1;
        if (next_classes == classes) break;
        classes = next_classes;
        color = std::move(next);
    }
    JointColors out;
    out.first.assign(color.begin(), color.begin() + n1);
    out.second.assign(color.begin() + n1, color.end());
    std::vector<int> h1(classes, 0), h2(classes, 0);
    for (int c : out.first) ++h1[c];
    for (int c : out.second) ++h2[c];
    out.same_histogram = (h1 == h2);
    return out;
}

using Mask = std::uint64_t;

std::vector<Mask> bit_rows(const Graph& g) {
    std::vector<Mask> rows(g.node_count(), 0);
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.neighbors(u)) rows[u] |= Mask(1) << v;
    return rows;
}

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    std::vector<Mask> rows1, rows2;
    std::vector<int> order;            // g1 nodes in assignment order
    std::vector<std::vector<int>> cands;  // candidates per order position
    std::vector<int> map1to2;
    Mask used2 = 0;

    bool search(std::size_t pos) {
        if (pos == order.size()) return true;
        const int u = order[pos];
        Mask req = 0;
        for (int w : g1.neighbors(u))
            if (map1to2[w] >= 0) req |= Mask(1) << map1to2[w];
        for (int v : cands[pos]) {
            if (used2 & (Mask(1) << v)) continue;
            if ((rows2[v] & used2) != req) continue;
            map1to2[u] = v;
            used2 |= Mask(1) << v;
            if (search(pos + 1)) return true;
            used2 &= ~(Mask(1) << v);
            map1to2[u] = -1;
        }
        return false;
    }
};

bool verify_mapping(const Graph& g1, const Graph& g2,
                    const std::vector<int>& map) {
    if (g1.node_count() != g2.node_count()) return false;
    std::vector<Mask> rows2 = bit_rows(g2);
    for (int u = 0; u < g1.node_count(); ++u) {
        Mask image = 0;
        for (int v : g1.neighbors(u)) image |= Mask(1) << map[v];
        if (rows2[map[u]] != image) return false;
    }
    return true;
}

}  // namespace

IsoWitness are_isomorphic(const Graph& g1, const Graph& g2,
                          const IsoOptions& opts) {
    const int n = g1.node_count();
    if (std::max(n, g2.node_count()) > opts.max_nodes)
        throw guard_error(
            "isomorphism oracle guarded at " + std::to_string(opts.max_nodes) +
            " nodes; use WL screening for larger graphs");
    if (opts.max_nodes > 64)
        throw guard_error("isomorphism oracle supports at most 64 nodes");

    if (n != g2.node_count() || g1.edge_count() != g2.edge_count()) return {};
    if (n == 0) return {true, std::vector<int>{}};

    auto degseq = [](const Graph& g) {
        std::vector<int> d(g.node_count());
        for (int u = 0; u < g.node_count(); ++u) d[u] = g.degree(u);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degseq(g1) != degseq(g2)) return {};

    JointColors colors = joint_refinement(g1, g2);
    if (!colors.same_histogram) return {};

    std::vector<int> class_size(n + 1, 0);
    for (int c : colors.first) ++class_size[c];

    // Assignment order: rarest color first, then prefer nodes with the most
    // already-placed neighbors so consistency pruning bites early.
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    auto pick_seed = [&]() {
        int best = -1;
        for (int u = 0; u < n; ++u) {
            if (placed[u]) continue;
            if (best == -1 ||
                std::make_tuple(class_size[colors.first[u]], -g1.degree(u), u) <
                    std::make_tuple(class_size[colors.first[best]],
                                    -g1.degree(best), best))
                best = u;
        }
        return best;
    };
    std::vector<int> placed_neighbors(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        for (int u = 0; u < n; ++u) {
            if (placed[u] || placed_neighbors[u] == 0) continue;
            if (best == -1 ||
                std::make_tuple(-placed_neighbors[u], class_size[colors.first[u]],
                                -g1.degree(u), u) <
                    std::make_tuple(-placed_neighbors[best],
                                    class_size[colors.first[best]],
                                    -g1.degree(best), best))
                best = u;
        }
        if (best == -1) best = pick_seed();
        placed[best] = true;
        order.push_back(best);
        for (int v : g1.neighbors(best)) ++placed_neighbors[v];
    }

    IsoSearch search{g1, g2, bit_rows(g1), bit_rows(g2), order, {}, {}, 0};
    search.cands.resize(n);
    for (int pos = 0; pos < n; ++pos) {
        const int u = order[pos];
        for (int v = 0; v < n; ++v)
            if (colors.second[v] == colors.first[u] && g2.degree(v) == g1.degree(u))
                search.cands[pos].push_back(v);
        if (search.cands[pos].empty()) return {};
    }
    search.map1to2.assign(n, -1);
    if (!search.search(0)) return {};

    if (!verify_mapping(g1, g2, search.map1to2))
        throw std::logic_error("isomorphism mapping failed re-verification");
    return {true, search.map1to2};
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration up to isomorphism, by vertex augmentation with
// invariant buckets and pairwise oracle dedup inside each bucket.

namespace {

constexpr int kEnumGuard = 9;

struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, kEnumGuard> rows{};

    bool adjacent(int u, int v) const { return (rows[u] >> v) & 1; }
    int degree(int u) const { return std::popcount(rows[u]); }
};

std::vector<std::uint32_t> invariant_key(const SmallGraph& g) {
    const int n = g.n;
    std::array<int, kEnumGuard> deg{}, tri{};
    int edges = 0;
    for (int u = 0; u < n; ++u) {
        deg[u] = g.degree(u);
        edges += deg[u];
        int t = 0;
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v))
                t += std::popcount(std::uint16_t(g.rows[u] & g.rows[v]));
        tri[u] = t / 2;
    }
    std::vector<std::uint32_t> key;
    key.reserve(2 + n);
    key.push_back(static_cast<std::uint32_t>(n));
    key.push_back(static_cast<std::uint32_t>(edges / 2));
    std::array<std::uint32_t, kEnumGuard> per{};
    for (int u = 0; u < n; ++u) {
        int nd = 0, nt = 0;
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) {
                nd += deg[v];
                nt += tri[v];
            }
        per[u] = (static_cast<std::uint32_t>(deg[u]) << 24) |
                 (static_cast<std::uint32_t>(tri[u]) << 16) |
                 (static_cast<std::uint32_t>(nd) << 8) |
                 static_cast<std::uint32_t>(nt);
    }
    std::sort(per.begin(), per.begin() + n);
    key.insert(key.end(), per.begin(), per.begin() + n);
    return key;
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t v : key) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Permutation backtracking on bitmask rows; callers pre-filter by invariant
// key so this only runs on structurally similar graphs.
bool small_iso(const SmallGraph& a, const SmallGraph& b) {
    const int n = a.n;
    std::array<int, kEnumGuard> map{};
    std::uint16_t used = 0;
    std::array<int, kEnumGuard> dega{}, degb{};
    for (int u = 0; u < n; ++u) {
        dega[u] = a.degree(u);
        degb[u] = b.degree(u);
    }
    std::function<bool(int)> go = [&](int u) -> bool {
        if (u == n) return true;
        std::uint16_t req = 0;
        for (int w = 0; w < u; ++w)
            if (a.adjacent(u, w)) req |= std::uint16_t(1) << map[w];
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (degb[v] != dega[u]) continue;
            if (std::uint16_t(b.rows[v] & used) != req) continue;
            map[u] = v;
            used |= std::uint16_t(1) << v;
            if (go(u + 1)) return true;
            used &= ~(std::uint16_t(1) << v);
        }
        return false;
    };
    return go(0);
}

bool small_connected(const SmallGraph& g) {
    if (g.n == 0) return true;
    std::uint16_t seen = 1;
    std::uint16_t frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (int u = 0; u < g.n; ++u)
            if ((frontier >> u) & 1) next |= g.rows[u];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == std::uint16_t((1u << g.n) - 1);
}

Graph to_graph(const SmallGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.adjacent(u, v)) adj[u].push_back(v);
    return Graph::from_sorted_adjacency(std::move(adj));
}

std::vector<SmallGraph> enumerate_small(int n) {
    std::vector<SmallGraph> reps;
    reps.push_back(SmallGraph{1, {}});
    for (int m = 2; m <= n; ++m) {
        std::vector<SmallGraph> next;
        std::unordered_map<std::vector<std::uint32_t>, std::vector<std::size_t>,
                           KeyHash>
            buckets;
        for (const SmallGraph& parent : reps) {
            for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                SmallGraph cand;
                cand.n = m;
                cand.rows = parent.rows;
                cand.rows[m - 1] = static_cast<std::uint16_t>(mask);
                for (int v = 0; v < m - 1; ++v)
                    if ((mask >> v) & 1)
                        cand.rows[v] |= std::uint16_t(1) << (m - 1);
                auto key = invariant_key(cand);
                auto& bucket = buckets[key];
                bool dup = false;
                for (std::size_t idx : bucket)
                    if (small_iso(cand, next[idx])) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    bucket.push_back(next.size());
                    next.push_back(cand);
                }
            }
        }
        reps = std::move(next);
    }
    return reps;
}

}  // namespace

void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > kEnumGuard)
        throw guard_error("graph enumeration guarded at n <= " +
                          std::to_string(kEnumGuard));
    std::vector<SmallGraph> reps = enumerate_small(n);
    std::vector<std::pair<std::string, std::size_t>> ordered;
    ordered.reserve(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (connected_only && !small_connected(reps[i])) continue;
        ordered.emplace_back(emit_graph6(to_graph(reps[i])), i);
    }
    std::sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
        const SmallGraph& x = reps[a.second];
        const SmallGraph& y = reps[b.second];
        int ex = 0, ey = 0;
        for (int u = 0; u < x.n; ++u) ex += x.degree(u);
        for (int u = 0; u < y.n; ++u) ey += y.degree(u);
        return std::tie(ex, a.first) < std::tie(ey, b.first);
    });
    for (const auto& [g6, idx] : ordered) fn(to_graph(reps[idx]));
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    std::vector<Graph> out;
    enumerate_graphs(n, connected_only,
                     [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace linewl
