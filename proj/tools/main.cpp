// Command-line front end: generators, transforms, WL tests, the isomorphism
// oracle, structural analysis, theorem verification and the benchmark
// harness. Exit codes: 0 success, 1 usage error, 2 input error, 3 budget
// exhaustion outside bench mode.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "linewl/analysis.hpp"
#include "linewl/bench.hpp"
#include "linewl/generators.hpp"
#include "linewl/graph6.hpp"
#include "linewl/isomorphism.hpp"
#include "linewl/line_graph.hpp"
#include "linewl/pair_file.hpp"
#include "linewl/report.hpp"
#include "linewl/theorems.hpp"
#include "linewl/wl.hpp"

namespace {

using namespace linewl;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerifyFailed = 4;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    int workers = 4;
    std::int64_t budget = kDefaultWlBudget;
    std::int64_t node_budget = kDefaultNodeBudget;
    std::uint64_t seed = 0;
    std::string format = "csv";
};

Graph parse_record(const std::string& text) {
    try {
        return parse_graph6(text);
    } catch (const graph6_error& e) {
        throw input_error(std::string("bad graph6 record '") + text +
                          "': " + e.what());
    }
}

std::vector<Graph> read_graphs(const std::vector<std::string>& records,
                               const std::string& in_file) {
    std::vector<Graph> graphs;
    for (const std::string& r : records) graphs.push_back(parse_record(r));
    if (!in_file.empty()) {
        std::ifstream in(in_file);
        if (!in) throw input_error("cannot open input file: " + in_file);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            std::string token;
            while (ss >> token) graphs.push_back(parse_record(token));
        }
    }
    return graphs;
}

std::vector<GraphPair> load_pairs(const std::string& pairs_file,
                                  const std::string& suite) {
    if (!pairs_file.empty() && !suite.empty())
        throw input_error("give either a pair file or a suite, not both");
    if (!pairs_file.empty()) {
        try {
            return read_pair_file(pairs_file).pairs;
        } catch (const pair_file_error& e) {
            throw input_error(std::string(e.what()) + " in " + pairs_file);
        } catch (const std::runtime_error& e) {
            throw input_error(e.what());
        }
    }
    if (suite == "srg") return srg_pair_suite();
    if (suite == "cfi") return cfi_pair_suite();
    if (suite == "regular") return regular_pair_suite();
    throw input_error("unknown suite '" + suite + "' (srg|cfi|regular)");
}

// ---------------------------------------------------------------------- gen

int cmd_gen(const GlobalOptions& global, const std::string& family, int n,
            int m, double p, int count, int twist, const std::string& base,
            const std::vector<int>& offsets, const std::string& out_file) {
    std::vector<std::string> lines;
    auto emit = [&](const Graph& g) { lines.push_back(emit_graph6(g)); };

    auto base_graph = [&](const std::string& name) -> Graph {
        if (name == "k4") return complete(4);
        if (name == "k33") return complete_bipartite(3, 3);
        if (name == "prism") return prism();
        if (name == "petersen") return petersen();
        if (name.rfind("cycle:", 0) == 0)
            return cycle(std::stoi(name.substr(6)));
        throw input_error("unknown CFI base '" + name +
                          "' (k4|k33|prism|petersen|cycle:N)");
    };

    std::vector<GraphPair> pairs;
    if (family == "path") emit(path(n));
    else if (family == "cycle") emit(cycle(n));
    else if (family == "star") emit(star(n));
    else if (family == "complete") emit(complete(n));
    else if (family == "complete-bipartite") emit(complete_bipartite(n, m));
    else if (family == "petersen") emit(petersen());
    else if (family == "prism") emit(prism());
    else if (family == "circulant") emit(circulant(n, offsets));
    else if (family == "rook") emit(rook_graph(n));
    else if (family == "shrikhande") emit(shrikhande());
    else if (family == "paley") emit(paley(n));
    else if (family == "triangular") emit(triangular(n));
    else if (family == "chang") {
        if (n < 1 || n > 3) throw input_error("chang index must be 1..3");
        emit(chang_graphs()[n - 1]);
    } else if (family == "gadget") emit(cfi_gadget(n).graph);
    else if (family == "cfi") {
        CfiPair pair = cfi_pair(base_graph(base), twist);
        emit(pair.untwisted);
        emit(pair.twisted);
    } else if (family == "random") {
        std::mt19937_64 rng(global.seed);
        for (int i = 0; i < count; ++i) emit(random_graph(n, p, rng));
    } else if (family == "srg-suite") pairs = srg_pair_suite();
    else if (family == "cfi-suite") pairs = cfi_pair_suite();
    else if (family == "regular-suite") pairs = regular_pair_suite();
    else throw input_error("unknown family '" + family + "'");

    if (!pairs.empty()) {
        if (out_file.empty())
            for (const GraphPair& pr : pairs)
                lines.push_back(emit_graph6(pr.first) + " " +
                                emit_graph6(pr.second) + " " +
                                std::string(to_string(pr.category)));
        else
            write_pair_file(out_file, pairs);
    }
    if (out_file.empty()) {
        for (const std::string& l : lines) std::cout << l << '\n';
    } else if (pairs.empty()) {
        std::ofstream out(out_file);
        if (!out) throw input_error("cannot open output file: " + out_file);
        for (const std::string& l : lines) out << l << '\n';
    }
    return kExitOk;
}

// ----------------------------------------------------------------- transform

int cmd_transform(const GlobalOptions& global,
                  const std::vector<std::string>& records,
                  const std::string& in_file, int depth) {
    for (const Graph& g : read_graphs(records, in_file))
        std::cout << emit_graph6(iterated_line_graph(g, depth, global.node_budget))
                  << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------------ wl

int cmd_wl(const GlobalOptions& global, const std::vector<std::string>& records,
           const std::string& pairs_file, int k, int depth,
           std::int64_t max_rounds) {
    std::vector<GraphPair> pairs;
    if (!pairs_file.empty()) {
        pairs = load_pairs(pairs_file, "");
    } else {
        if (records.size() != 2)
            throw input_error("wl needs two graph6 records or --pairs");
        pairs.push_back({parse_record(records[0]), parse_record(records[1]),
                         PairCategory::other});
    }
    WlOptions opts;
    opts.budget_tuples = global.budget;
    opts.max_rounds = max_rounds;
    const bool json = global.format == "json";
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        PairRunDetail detail =
            run_pair_detailed(pairs[i].first, pairs[i].second, k, depth, opts,
                              global.node_budget);
        if (json) {
            nlohmann::json row;
            row["pair_id"] = i;
            row["k"] = k;
            row["depth"] = depth;
            row["distinguished"] = detail.verdict.distinguished;
            if (detail.verdict.decided_at_round)
                row["decided_at_round"] = *detail.verdict.decided_at_round;
            row["count_shortcut"] = detail.count_shortcut;
            row["rounds"] = detail.rounds;
            row["seconds"] = detail.refine_seconds;
            rows.push_back(std::move(row));
        } else {
            std::cout << "pair " << i << ": "
                      << (detail.verdict.distinguished ? "distinguished"
                                                       : "not distinguished");
            if (detail.count_shortcut)
                std::cout << " (size mismatch, no refinement)";
            else if (detail.verdict.decided_at_round)
                std::cout << " at round " << *detail.verdict.decided_at_round;
            else
                std::cout << " (stable after " << detail.rounds << " rounds)";
            std::cout << '\n';
        }
    }
    if (json) std::cout << rows.dump(2) << '\n';
    return kExitOk;
}

// ----------------------------------------------------------------------- iso

int cmd_iso(const std::vector<std::string>& records, bool show_mapping,
            int max_nodes) {
    if (records.size() != 2) throw input_error("iso needs two graph6 records");
    IsoOptions opts;
    opts.max_nodes = max_nodes;
    IsoWitness w =
        are_isomorphic(parse_record(records[0]), parse_record(records[1]), opts);
    std::cout << (w.isomorphic ? "isomorphic" : "non-isomorphic") << '\n';
    if (w.isomorphic && show_mapping) {
        for (std::size_t u = 0; u < w.mapping->size(); ++u)
            std::cout << u << " -> " << (*w.mapping)[u] << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------------- analyze

int cmd_analyze(const std::vector<std::string>& records,
                const std::string& in_file) {
    nlohmann::json out = nlohmann::json::array();
    for (const Graph& g : read_graphs(records, in_file)) {
        nlohmann::json j;
        j["graph6"] = emit_graph6(g);
        j["nodes"] = g.node_count();
        j["edges"] = g.edge_count();
        auto reg = is_regular(g);
        j["regular"] = reg ? nlohmann::json(*reg) : nlohmann::json(nullptr);
        auto srg = srg_params(g);
        if (srg)
            j["srg"] = {{"v", srg->v},
                        {"k", srg->k},
                        {"lambda", srg->lambda},
                        {"mu", srg->mu}};
        else
            j["srg"] = nullptr;
        j["claw_free"] = !contains_claw(g);
        j["line_graph"] = is_line_graph(g);
        j["isoregular"] = {{"1", is_isoregular(g, 1)}, {"2", is_isoregular(g, 2)}};
        out.push_back(std::move(j));
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

// -------------------------------------------------------------------- verify

int cmd_verify(const std::string& theorem, int n_max, bool json_out) {
    TheoremSuiteOptions opts;
    if (n_max > 0) {
        opts.whitney_n_max = std::min(n_max, 7);
        opts.srg_break_n_max = std::min(n_max, 8);
        opts.low_degree_n_max = std::min(n_max, 6);
    }
    std::vector<TheoremReport> reports;
    const int ks[] = {3, 4, 5, 6};
    if (theorem == "whitney") reports.push_back(check_whitney(opts.whitney_n_max));
    else if (theorem == "cfi") reports.push_back(check_cfi_exclusion(ks));
    else if (theorem == "srg") {
        reports.push_back(check_srg_break(opts.srg_break_n_max));
        reports.push_back(check_srg_instance_break());
        reports.push_back(check_srg_low_degree(opts.low_degree_n_max));
        reports.push_back(check_srg_disconnected());
    } else if (theorem == "regular")
        reports.push_back(check_regularity_preserved());
    else if (theorem == "growth")
        reports.push_back(check_growth(opts.growth_window));
    else if (theorem == "all")
        reports = run_all_theorems(opts);
    else
        throw input_error("unknown theorem '" + theorem +
                          "' (whitney|cfi|srg|regular|growth|all)");

    bool all_passed = true;
    if (json_out) {
        nlohmann::json out = nlohmann::json::array();
        for (const TheoremReport& r : reports) {
            nlohmann::json j;
            j["id"] = r.id;
            j["universe"] = r.universe;
            j["cases"] = r.cases;
            j["counterexamples"] = r.counterexamples;
            j["seconds"] = r.seconds;
            j["passed"] = r.passed();
            out.push_back(std::move(j));
            all_passed = all_passed && r.passed();
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const TheoremReport& r : reports) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
            std::cout << (r.passed() ? "PASS" : "FAIL") << ' ' << r.id << " ["
                      << r.universe << "] cases=" << r.cases << " (" << buf
                      << ")\n";
            for (const std::string& c : r.counterexamples)
                std::cout << "  counterexample: " << c << '\n';
            all_passed = all_passed && r.passed();
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

// --------------------------------------------------------------- bench/timing

BenchConfig make_config(const GlobalOptions& global, std::vector<int> ks,
                        std::vector<int> depths, std::int64_t max_rounds,
                        bool allow_heavy, bool controls) {
    BenchConfig config;
    if (!ks.empty()) config.ks = std::move(ks);
    if (!depths.empty()) config.depths = std::move(depths);
    config.wl_budget = global.budget;
    config.node_budget = global.node_budget;
    config.max_rounds = max_rounds;
    config.workers = global.workers;
    config.allow_k4_transformed = allow_heavy;
    config.controls = controls;
    config.seed = global.seed;
    return config;
}

int cmd_bench(const GlobalOptions& global, const std::string& pairs_file,
              const std::string& suite, std::vector<int> ks,
              std::vector<int> depths, std::int64_t max_rounds,
              bool allow_heavy, bool controls, const std::string& out_prefix) {
    const std::vector<GraphPair> pairs = load_pairs(pairs_file, suite);
    BenchConfig config = make_config(global, std::move(ks), std::move(depths),
                                     max_rounds, allow_heavy, controls);
    BenchResult result = run_bench(config, pairs);

    if (out_prefix.empty()) {
        std::cout << report_to_csv(result.verdicts);
        for (const AccuracyRow& row : aggregate_accuracy(result.verdicts)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * row.accuracy());
            std::cout << "# accuracy " << to_string(row.category) << " k=" << row.k
                      << " depth=" << row.depth << ": " << row.distinguished << "/"
                      << row.total << " = " << buf << '\n';
        }
    } else {
        write_report(result.verdicts, ReportFormat::csv, out_prefix + ".csv");
        nlohmann::json j = nlohmann::json::parse(
            report_to_json(result.verdicts, config.to_json()));
        if (config.controls) {
            nlohmann::json controls_json = nlohmann::json::parse(
                report_to_json(result.control_verdicts, ""));
            j["controls"] = controls_json["verdicts"];
        }
        std::ofstream out(out_prefix + ".json");
        if (!out) throw input_error("cannot open report: " + out_prefix + ".json");
        out << j.dump(2) << '\n';
        std::cout << "wrote " << out_prefix << ".csv and " << out_prefix
                  << ".json\n";
    }
    return kExitOk;
}

int cmd_timing(const GlobalOptions& global, const std::string& pairs_file,
               const std::string& suite, std::vector<int> ks,
               std::vector<int> depths, std::int64_t max_rounds,
               const std::string& out_prefix) {
    const std::vector<GraphPair> pairs = load_pairs(pairs_file, suite);
    BenchConfig config = make_config(global, std::move(ks), std::move(depths),
                                     max_rounds, false, false);
    TimingReport report = run_timing(config, pairs);
    if (out_prefix.empty()) {
        std::cout << timing_to_csv(report);
        for (const TimingFit& fit : report.fits)
            std::cout << "# slope " << to_string(fit.category) << " k=" << fit.k
                      << ": " << fit.slope << " (" << fit.points << " points)\n";
    } else {
        {
            std::ofstream out(out_prefix + ".timing.csv");
            if (!out)
                throw input_error("cannot open report: " + out_prefix +
                                  ".timing.csv");
            out << timing_to_csv(report);
        }
        {
            std::ofstream out(out_prefix + ".timing.json");
            if (!out)
                throw input_error("cannot open report: " + out_prefix +
                                  ".timing.json");
            out << timing_to_json(report, config.to_json()) << '\n';
        }
        std::cout << "wrote " << out_prefix << ".timing.csv and " << out_prefix
                  << ".timing.json\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"line-graph transforms, k-WL tests and hard-instance benchmarks"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--workers", global.workers, "worker threads for bench runs");
    app.add_option("--budget", global.budget, "WL joint tuple budget");
    app.add_option("--node-budget", global.node_budget,
                   "node budget for iterated transforms");
    app.add_option("--seed", global.seed, "seed for random families");
    app.add_option("--format", global.format, "output format (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}));

    // gen
    auto* gen = app.add_subcommand("gen", "generate graphs and pair files");
    std::string family, base = "k4", out_file;
    int n = 5, m = 3, twist = 0, count = 1;
    double p = 0.5;
    std::vector<int> offsets;
    gen->add_option("--family", family, "family name")->required();
    gen->add_option("-n", n, "primary size parameter");
    gen->add_option("-m", m, "secondary size parameter");
    gen->add_option("-p", p, "edge probability (random)");
    gen->add_option("--count", count, "number of random graphs");
    gen->add_option("--base", base, "CFI base (k4|k33|prism|petersen|cycle:N)");
    gen->add_option("--twist", twist, "CFI twist edge index");
    gen->add_option("--offsets", offsets, "circulant offsets");
    gen->add_option("--out", out_file, "output file (pair files need this)");

    // transform
    auto* transform = app.add_subcommand("transform", "emit graph6 of L^(n)");
    std::vector<std::string> transform_records;
    std::string transform_in;
    int depth = 1;
    transform->add_option("graphs", transform_records, "graph6 records");
    transform->add_option("--in", transform_in, "file with graph6 records");
    transform->add_option("--depth", depth, "transform depth");

    // wl
    auto* wl = app.add_subcommand("wl", "k-WL distinguishability of a pair");
    std::vector<std::string> wl_records;
    std::string wl_pairs;
    int wl_k = 3, wl_depth = 0;
    std::int64_t wl_max_rounds = -1;
    wl->add_option("graphs", wl_records, "two graph6 records");
    wl->add_option("--pairs", wl_pairs, "pair file");
    wl->add_option("--k", wl_k, "WL dimension");
    wl->add_option("--depth", wl_depth, "line transform depth");
    wl->add_option("--max-rounds", wl_max_rounds, "refinement rounds cap");

    // iso
    auto* iso = app.add_subcommand("iso", "exact isomorphism oracle");
    std::vector<std::string> iso_records;
    bool iso_mapping = false;
    int iso_guard = 32;
    iso->add_option("graphs", iso_records, "two graph6 records");
    iso->add_flag("--mapping", iso_mapping, "print a witness mapping");
    iso->add_option("--max-nodes", iso_guard, "oracle size guard");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "structural report as JSON");
    std::vector<std::string> analyze_records;
    std::string analyze_in;
    analyze->add_option("graphs", analyze_records, "graph6 records");
    analyze->add_option("--in", analyze_in, "file with graph6 records");

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem checks");
    std::string theorem = "all";
    int verify_n_max = 0;
    bool verify_json = false;
    verify->add_option("--theorem", theorem,
                       "whitney|cfi|srg|regular|growth|all");
    verify->add_option("--n-max", verify_n_max, "exhaustive size cap");
    verify->add_flag("--json", verify_json, "JSON output");

    // bench
    auto* bench = app.add_subcommand("bench", "accuracy benchmark over pairs");
    std::string bench_pairs, bench_suite, bench_out;
    std::vector<int> bench_ks, bench_depths;
    std::int64_t bench_max_rounds = -1;
    bool bench_allow_heavy = false, bench_controls = false;
    bench->add_option("--pairs", bench_pairs, "pair file");
    bench->add_option("--suite", bench_suite, "generated suite (srg|cfi|regular)");
    bench->add_option("--k", bench_ks, "WL dimensions");
    bench->add_option("--depth", bench_depths, "transform depths");
    bench->add_option("--max-rounds", bench_max_rounds, "refinement rounds cap");
    bench->add_flag("--allow-heavy", bench_allow_heavy,
                    "run k>=4 on transformed graphs");
    bench->add_flag("--controls", bench_controls,
                    "inject relabeled-isomorphic soundness controls");
    bench->add_option("--out", bench_out, "report prefix (.csv/.json)");

    // timing
    auto* timing = app.add_subcommand("timing", "refinement wall-time report");
    std::string timing_pairs, timing_suite, timing_out;
    std::vector<int> timing_ks, timing_depths;
    std::int64_t timing_max_rounds = -1;
    timing->add_option("--pairs", timing_pairs, "pair file");
    timing->add_option("--suite", timing_suite,
                       "generated suite (srg|cfi|regular)");
    timing->add_option("--k", timing_ks, "WL dimensions");
    timing->add_option("--depth", timing_depths, "transform depths");
    timing->add_option("--max-rounds", timing_max_rounds, "rounds cap");
    timing->add_option("--out", timing_out, "report prefix (.timing.csv/.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen)
            return cmd_gen(global, family, n, m, p, count, twist, base, offsets,
                           out_file);
        if (*transform)
            return cmd_transform(global, transform_records, transform_in, depth);
        if (*wl)
            return cmd_wl(global, wl_records, wl_pairs, wl_k, wl_depth,
                          wl_max_rounds);
        if (*iso) return cmd_iso(iso_records, iso_mapping, iso_guard);
        if (*analyze) return cmd_analyze(analyze_records, analyze_in);
        if (*verify) return cmd_verify(theorem, verify_n_max, verify_json);
        if (*bench)
            return cmd_bench(global, bench_pairs, bench_suite, bench_ks,
                             bench_depths, bench_max_rounds, bench_allow_heavy,
                             bench_controls, bench_out);
        if (*timing)
            return cmd_timing(global, timing_pairs, timing_suite, timing_ks,
                              timing_depths, timing_max_rounds, timing_out);
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const guard_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}
