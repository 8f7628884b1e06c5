#include "linewl/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "linewl/analysis.hpp"
#include "linewl/generators.hpp"
#include "linewl/graph6.hpp"
#include "linewl/isomorphism.hpp"
#include "linewl/line_graph.hpp"

namespace linewl {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::vector<Graph> connected_up_to(int n_max) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n)
        for (Graph& g : enumerate_graphs(n, true)) out.push_back(std::move(g));
    return out;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.node_count());
    for (int u = 0; u < g.node_count(); ++u) d[u] = g.degree(u);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<int> triangle_profile(const Graph& g) {
    std::vector<int> t(g.node_count(), 0);
    for (int u = 0; u < g.node_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            for (int w : g.neighbors(v)) {
                if (w <= v) continue;
                if (g.adjacent(u, w)) {
                    ++t[u];
                    ++t[v];
                    ++t[w];
                }
            }
        }
    std::sort(t.begin(), t.end());
    return t;
}

void finish(TheoremReport& r, const Timer& timer) {
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    r.counterexamples.erase(
        std::unique(r.counterexamples.begin(), r.counterexamples.end()),
        r.counterexamples.end());
    r.seconds = timer.seconds();
}

}  // namespace

TheoremReport check_whitney(int n_max) {
    if (n_max > 7) throw guard_error("whitney check guarded at n <= 7");
    Timer timer;
    TheoremReport report;
    report.id = "whitney";
    report.universe = "connected graphs, n <= " + std::to_string(n_max);

    const std::vector<Graph> graphs = connected_up_to(n_max);
    struct Entry {
        const Graph* g;
        Graph line;
        std::vector<int> line_degseq;
        std::vector<int> line_tri;
    };
    std::map<std::int64_t, std::vector<Entry>> by_edges;
    for (const Graph& g : graphs) {
        Entry e{&g, line_graph(g).result, {}, {}};
        e.line_degseq = degree_sequence(e.line);
        e.line_tri = triangle_profile(e.line);
        by_edges[g.edge_count()].push_back(std::move(e));
    }

    const Graph c3 = cycle(3);
    const Graph claw = star(3);
    int exceptions = 0;
    for (auto& [edge_count, bucket] : by_edges) {
        for (std::size_t i = 0; i < bucket.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                ++report.cases;
                const Entry& a = bucket[i];
                const Entry& b = bucket[j];
                // Distinct representatives are non-isomorphic by
                // construction, so line graphs must differ too.
                if (a.line_degseq != b.line_degseq || a.line_tri != b.line_tri)
                    continue;
                if (!are_isomorphic(a.line, b.line).isomorphic) continue;
                const bool is_exception =
                    (are_isomorphic(*a.g, c3).isomorphic &&
                     are_isomorphic(*b.g, claw).isomorphic) ||
                    (are_isomorphic(*a.g, claw).isomorphic &&
                     are_isomorphic(*b.g, c3).isomorphic);
                if (is_exception)
                    ++exceptions;
                else
                    report.counterexamples.push_back(emit_graph6(*a.g) + "|" +
                                                     emit_graph6(*b.g));
            }
    }
    if (n_max >= 4 && exceptions != 1)
        report.counterexamples.push_back("exception pair hit " +
                                         std::to_string(exceptions) +
                                         " times, expected 1");
    finish(report, timer);
    return report;
}

TheoremReport check_cfi_exclusion(std::span<const int> ks) {
    Timer timer;
    TheoremReport report;
    report.id = "cfi-not-line-graph";
    report.universe = "X_k gadgets and CFI pair members, k >= 3";
    for (int k : ks) {
        if (k < 3 || k > 6)
            throw std::invalid_argument("gadget arity must be in 3..6");
        const CfiGadget gadget = cfi_gadget(k);
        ++report.cases;
        if (is_line_graph(gadget.graph))
            report.counterexamples.push_back(emit_graph6(gadget.graph));
    }
    for (const Graph& base :
         {complete(4), complete_bipartite(3, 3), prism()}) {
        const CfiPair pair = cfi_pair(base, 0);
        for (const Graph* member : {&pair.untwisted, &pair.twisted}) {
            ++report.cases;
            if (is_line_graph(*member))
                report.counterexamples.push_back(emit_graph6(*member));
        }
    }
    finish(report, timer);
    return report;
}

TheoremReport check_srg_break(int n_max, std::int64_t node_budget) {
    if (n_max > 8) throw guard_error("srg break check guarded at n <= 8");
    Timer timer;
    TheoremReport report;
    report.id = "srg-two-step-break";
    report.universe = "connected graphs, n <= " + std::to_string(n_max);

    const Graph exceptions[] = {cycle(3), cycle(4), cycle(5)};
    for (const Graph& g : connected_up_to(n_max)) {
        bool is_exception = false;
        for (const Graph& c : exceptions)
            if (g.node_count() == c.node_count() &&
                are_isomorphic(g, c).isomorphic)
                is_exception = true;
        if (is_exception) {
            // Fixed points: the transform preserves the graph and its
            // parameters at every depth.
            Graph cur = g;
            for (int t = 0; t < 3; ++t) {
                if (!srg_params(cur) || !are_isomorphic(cur, g).isomorphic)
                    report.counterexamples.push_back(emit_graph6(g));
                cur = line_graph(cur).result;
            }
            ++report.cases;
            continue;
        }
        ++report.cases;
        bool broke = false;
        Graph cur = g;
        for (int t = 0; t <= 2 && !broke; ++t) {
            if (!srg_params(cur)) broke = true;
            if (t < 2) cur = iterated_line_graph(cur, 1, node_budget);
        }
        if (!broke) report.counterexamples.push_back(emit_graph6(g));
    }
    finish(report, timer);
    return report;
}

TheoremReport check_srg_instance_break() {
    Timer timer;
    TheoremReport report;
    report.id = "srg-instance-break";
    report.universe = "triangle-containing non-complete srg instances";
    for (const auto& [name, g] : srg_instances()) {
        const auto params = srg_params(g);
        if (!params) continue;
        const bool complete_graph = params->k == params->v - 1;
        const bool triangle_containing = params->lambda > 0;
        if (complete_graph || !triangle_containing) continue;
        ++report.cases;
        if (srg_params(line_graph(g).result))
            report.counterexamples.push_back(emit_graph6(g));
    }
    finish(report, timer);
    return report;
}

TheoremReport check_srg_low_degree(int n_max) {
    if (n_max > 6) throw guard_error("low-degree srg check guarded at n <= 6");
    Timer timer;
    TheoremReport report;
    report.id = "srg-low-degree";
    report.universe =
        "connected graphs, n <= " + std::to_string(n_max) + ", permissive mode";

    std::vector<Graph> expected = {path(1), path(2), cycle(3), cycle(4), cycle(5)};
    std::vector<bool> seen(expected.size(), false);
    for (const Graph& g : connected_up_to(n_max)) {
        ++report.cases;
        const auto params = srg_params_permissive(g);
        const bool low_degree_srg = params && params->k <= 2;
        int match = -1;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (g.node_count() == expected[i].node_count() &&
                are_isomorphic(g, expected[i]).isomorphic)
                match = static_cast<int>(i);
        if (low_degree_srg != (match >= 0))
            report.counterexamples.push_back(emit_graph6(g));
        if (low_degree_srg && match >= 0) seen[match] = true;
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (!seen[i])
            report.counterexamples.push_back("missing " +
                                             emit_graph6(expected[i]));
    finish(report, timer);
    return report;
}

TheoremReport check_srg_disconnected() {
    Timer timer;
    TheoremReport report;
    report.id = "srg-disconnected";
    report.universe = "disjoint unions of equal complete graphs";

    for (int copies : {2, 3}) {
        std::vector<Graph> parts(copies, cycle(3));
        const Graph g = disjoint_union(parts);
        ++report.cases;
        Graph cur = g;
        bool ok = true;
        for (int t = 0; t < 3; ++t) {
            cur = line_graph(cur).result;
            if (!are_isomorphic(cur, g).isomorphic) ok = false;
        }
        if (!ok) report.counterexamples.push_back(emit_graph6(g));
    }
    for (int copies : {2, 3})
        for (int n : {4, 5}) {
            std::vector<Graph> parts(copies, complete(n));
            const Graph g = disjoint_union(parts);
            ++report.cases;
            bool broke = false;
            Graph cur = g;
            for (int t = 0; t <= 2 && !broke; ++t) {
                if (!srg_params(cur)) broke = true;
                if (t < 2) cur = line_graph(cur).result;
            }
            if (!broke) report.counterexamples.push_back(emit_graph6(g));
        }
    finish(report, timer);
    return report;
}

TheoremReport check_regularity_preserved() {
    Timer timer;
    TheoremReport report;
    report.id = "regular-preserved";
    report.universe = "regular sample families";

    std::vector<Graph> samples = {petersen(), cycle(5), cycle(8), complete(4),
                                  complete(6), complete_bipartite(3, 3),
                                  prism(), rook_graph(4), shrikhande()};
    {
        const int off[] = {1, 2};
        samples.push_back(circulant(9, off));
    }
    for (const Graph& g : samples) {
        ++report.cases;
        const auto d = is_regular(g);
        const auto ld = is_regular(line_graph(g).result);
        if (!d || !ld || *ld != 2 * *d - 2)
            report.counterexamples.push_back(emit_graph6(g));
    }
    finish(report, timer);
    return report;
}

TheoremReport check_growth(int window) {
    if (window > 5) throw guard_error("growth check guarded at window <= 5");
    Timer timer;
    TheoremReport report;
    report.id = "growth-dichotomy";
    report.universe = "named samples, window " + std::to_string(window);

    enum class Kind { shrinking, eventually_constant, growing, unclassified };
    auto classify = [&](const Graph& g) {
        std::vector<std::int64_t> sizes;
        Graph cur = g;
        sizes.push_back(cur.node_count());
        for (int t = 0; t < window; ++t) {
            cur = line_graph(cur).result;
            sizes.push_back(cur.node_count());
        }
        bool strictly_decreasing = true;
        for (std::size_t i = 1; i < sizes.size(); ++i)
            if (sizes[i] >= sizes[i - 1] && sizes[i - 1] > 0)
                strictly_decreasing = false;
        if (strictly_decreasing) return Kind::shrinking;
        // Eventually constant: a nonzero fixed point reached within the window.
        for (std::size_t t = 0; t + 1 < sizes.size(); ++t) {
            if (sizes[t] == 0) break;
            bool constant = true;
            for (std::size_t i = t + 1; i < sizes.size(); ++i)
                if (sizes[i] != sizes[t]) constant = false;
            if (constant && sizes[t] > 0) return Kind::eventually_constant;
        }
        // Growing: the tail is strictly increasing past the sequence minimum.
        // Trees dip once (|E| < |V|) before unbounded growth takes over.
        std::size_t tail = sizes.size() - 1;
        while (tail > 0 && sizes[tail] > sizes[tail - 1]) --tail;
        if (tail + 1 < sizes.size() &&
            sizes.back() > *std::min_element(sizes.begin(), sizes.end()))
            return Kind::growing;
        return Kind::unclassified;
    };

    auto expect = [&](const Graph& g, Kind kind) {
        ++report.cases;
        if (classify(g) != kind) report.counterexamples.push_back(emit_graph6(g));
    };
    for (int n : {4, 5, 6, 7}) expect(path(n), Kind::shrinking);
    for (int n : {3, 5, 8}) expect(cycle(n), Kind::eventually_constant);
    expect(star(3), Kind::eventually_constant);
    expect(complete(4), Kind::growing);
    expect(petersen(), Kind::growing);
    expect(star(4), Kind::growing);
    expect(prism(), Kind::growing);
    // Chair: P_4 plus a pendant; its first transform shrinks before growth.
    expect(build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}), Kind::growing);
    // Double star: two adjacent centers with two leaves each.
    expect(build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}), Kind::growing);
    finish(report, timer);
    return report;
}

std::vector<TheoremReport> run_all_theorems(const TheoremSuiteOptions& opts) {
    std::vector<TheoremReport> out;
    out.push_back(check_whitney(opts.whitney_n_max));
    const int ks[] = {3, 4, 5, 6};
    out.push_back(check_cfi_exclusion(ks));
    out.push_back(check_srg_break(opts.srg_break_n_max));
    out.push_back(check_srg_instance_break());
    out.push_back(check_srg_low_degree(opts.low_degree_n_max));
    out.push_back(check_srg_disconnected());
    out.push_back(check_regularity_preserved());
    out.push_back(check_growth(opts.growth_window));
    return out;
}

}  // namespace linewl
