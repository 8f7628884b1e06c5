#include "linewl/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "linewl/generators.hpp"
#include "json.hpp"

namespace linewl {

void BenchConfig::validate() const {
    if (ks.empty() || depths.empty())
        throw std::invalid_argument("bench config needs at least one k and depth");
    for (int k : ks)
        if (k < 1 || k > 6)
            throw std::invalid_argument("bench k must be in 1..6");
    for (int d : depths)
        if (d < 0) throw std::invalid_argument("bench depth must be >= 0");
    if (workers < 1 || workers > 256)
        throw std::invalid_argument("bench workers must be in 1..256");
    if (wl_budget < 1 || node_budget < 1)
        throw std::invalid_argument("bench budgets must be positive");
}

std::string BenchConfig::to_json() const {
    nlohmann::json j;
    j["k"] = ks;
    j["depth"] = depths;
    j["wl_budget"] = wl_budget;
    j["node_budget"] = node_budget;
    j["max_rounds"] = max_rounds;
    j["workers"] = workers;
    j["allow_k4_transformed"] = allow_k4_transformed;
    j["controls"] = controls;
    j["seed"] = seed;
    return j.dump();
}

namespace {

struct Task {
    const GraphPair* pair;
    int pair_id;
    int k;
    int depth;
    bool control;
};

// Fixed-size pool over an atomic task index; each slot is written by exactly
// one worker, so the output order is the task order regardless of scheduling.
void run_tasks(int workers, std::size_t count,
               const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int spawn = std::min<std::size_t>(workers, count);
    for (int w = 0; w < spawn; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

PairVerdict evaluate(const Task& task, const BenchConfig& config) {
    PairVerdict v;
    v.pair_id = task.pair_id;
    v.category = task.pair->category;
    v.k = task.k;
    v.depth = task.depth;
    v.nodes_before_first = task.pair->first.node_count();
    v.nodes_before_second = task.pair->second.node_count();
    WlOptions opts;
    opts.budget_tuples = config.wl_budget;
    opts.max_rounds = config.max_rounds;
    try {
        PairRunDetail detail =
            run_pair_detailed(task.pair->first, task.pair->second, task.k,
                              task.depth, opts, config.node_budget);
        v.distinguished = detail.verdict.distinguished;
        v.rounds = detail.rounds;
        v.seconds = detail.refine_seconds;
        v.nodes_after_first = detail.nodes_after_first;
        v.nodes_after_second = detail.nodes_after_second;
    } catch (const budget_error&) {
        v.skipped_budget = true;
    }
    return v;
}

std::vector<Task> make_tasks(const BenchConfig& config,
                             std::span<const GraphPair> pairs,
                             const std::vector<GraphPair>& controls) {
    std::vector<Task> tasks;
    for (int pair_id = 0; pair_id < static_cast<int>(pairs.size()); ++pair_id)
        for (int k : config.ks)
            for (int depth : config.depths) {
                if (k >= 4 && depth >= 1 && !config.allow_k4_transformed)
                    continue;
                tasks.push_back({&pairs[pair_id], pair_id, k, depth, false});
            }
    for (int i = 0; i < static_cast<int>(controls.size()); ++i)
        for (int k : config.ks)
            for (int depth : config.depths) {
                if (k >= 4 && depth >= 1 && !config.allow_k4_transformed)
                    continue;
                tasks.push_back({&controls[i], i, k, depth, true});
            }
    return tasks;
}

}  // namespace

BenchResult run_bench(const BenchConfig& config,
                      std::span<const GraphPair> pairs) {
    config.validate();

    std::vector<GraphPair> controls;
    if (config.controls) {
        std::mt19937_64 rng(config.seed);
        for (const GraphPair& p : pairs) {
            const std::vector<int> perm =
                random_permutation(p.first.node_count(), rng);
            controls.push_back({p.first, p.first.permuted(perm), p.category});
        }
    }

    const std::vector<Task> tasks = make_tasks(config, pairs, controls);
    std::vector<PairVerdict> slots(tasks.size());
    run_tasks(config.workers, tasks.size(),
              [&](std::size_t i) { slots[i] = evaluate(tasks[i], config); });

    BenchResult out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].control)
            out.control_verdicts.push_back(slots[i]);
        else
            out.verdicts.push_back(slots[i]);
    }
    auto order = [](const PairVerdict& a, const PairVerdict& b) {
        return std::tie(a.pair_id, a.k, a.depth) < std::tie(b.pair_id, b.k, b.depth);
    };
    std::sort(out.verdicts.begin(), out.verdicts.end(), order);
    std::sort(out.control_verdicts.begin(), out.control_verdicts.end(), order);
    return out;
}

TimingReport run_timing(const BenchConfig& config,
                        std::span<const GraphPair> pairs) {
    BenchResult bench = run_bench(config, pairs);
    TimingReport out;
    for (const PairVerdict& v : bench.verdicts) {
        TimingRow row;
        row.pair_id = v.pair_id;
        row.category = v.category;
        row.k = v.k;
        row.depth = v.depth;
        row.nodes = std::max(v.nodes_after_first, v.nodes_after_second);
        row.seconds = v.seconds;
        row.skipped_budget = v.skipped_budget;
        out.rows.push_back(row);
    }

    std::map<std::pair<int, int>, std::vector<std::pair<double, double>>> points;
    for (const TimingRow& row : out.rows) {
        if (row.skipped_budget || row.nodes <= 0 || row.seconds <= 0) continue;
        points[{static_cast<int>(row.category), row.k}].emplace_back(
            std::log(static_cast<double>(row.nodes)), std::log(row.seconds));
    }
    for (const auto& [key, pts] : points) {
        if (pts.size() < 2) continue;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : pts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(pts.size());
        const double denom = n * sxx - sx * sx;
        if (std::abs(denom) < 1e-12) continue;
        TimingFit fit;
        fit.category = static_cast<PairCategory>(key.first);
        fit.k = key.second;
        fit.slope = (n * sxy - sx * sy) / denom;
        fit.points = static_cast<int>(pts.size());
        out.fits.push_back(fit);
    }
    return out;
}

std::string timing_to_csv(const TimingReport& report) {
    std::string out = "pair_id,category,k,depth,nodes,seconds\n";
    for (const TimingRow& row : report.rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d,%s,%d,%d,%lld,%.6f\n", row.pair_id,
                      std::string(to_string(row.category)).c_str(), row.k,
                      row.depth,
                      static_cast<long long>(row.skipped_budget ? -1 : row.nodes),
                      row.skipped_budget ? 0.0 : row.seconds);
        out += buf;
    }
    return out;
}

std::string timing_to_json(const TimingReport& report,
                           const std::string& config_json) {
    nlohmann::json j;
    if (!config_json.empty()) j["config"] = nlohmann::json::parse(config_json);
    j["rows"] = nlohmann::json::array();
    for (const TimingRow& row : report.rows) {
        nlohmann::json r;
        r["pair_id"] = row.pair_id;
        r["category"] = std::string(to_string(row.category));
        r["k"] = row.k;
        r["depth"] = row.depth;
        r["nodes"] = row.nodes;
        r["seconds"] = row.seconds;
        r["status"] = row.skipped_budget ? "skipped-budget" : "done";
        j["rows"].push_back(std::move(r));
    }
    j["fits"] = nlohmann::json::array();
    for (const TimingFit& fit : report.fits) {
        nlohmann::json f;
        f["category"] = std::string(to_string(fit.category));
        f["k"] = fit.k;
        f["log_time_vs_log_nodes_slope"] = fit.slope;
        f["points"] = fit.points;
        j["fits"].push_back(std::move(f));
    }
    return j.dump(2);
}

}  // namespace linewl
