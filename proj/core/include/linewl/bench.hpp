#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linewl/line_graph.hpp"
#include "linewl/pair_file.hpp"
#include "linewl/report.hpp"
#include "linewl/wl.hpp"

namespace linewl {

struct BenchConfig {
    std::vector<int> ks = {3};
    std::vector<int> depths = {0, 1};
    std::int64_t wl_budget = kDefaultWlBudget;
    std::int64_t node_budget = kDefaultNodeBudget;
    std::int64_t max_rounds = -1;  // -1: stability bound
    int workers = 4;
    // k = 4 on transformed graphs is excluded unless explicitly enabled; the
    // state is n^4 on enlarged graphs.
    bool allow_k4_transformed = false;
    // Inject one relabeled-isomorphic control per pair; controls are reported
    // separately and never enter accuracy aggregates.
    bool controls = false;
    std::uint64_t seed = 0;

    void validate() const;
    std::string to_json() const;  // echoed into JSON reports
};

struct BenchResult {
    std::vector<PairVerdict> verdicts;           // sorted by (pair, k, depth)
    std::vector<PairVerdict> control_verdicts;   // soundness monitors
};

BenchResult run_bench(const BenchConfig& config,
                      std::span<const GraphPair> pairs);

struct TimingRow {
    int pair_id;
    PairCategory category;
    int k;
    int depth;
    std::int64_t nodes;  // larger member after the transform
    double seconds;      // refinement wall time only
    bool skipped_budget;
};

struct TimingFit {
    PairCategory category;
    int k;
    double slope;      // least-squares slope of log(seconds) vs log(nodes)
    int points;
};

struct TimingReport {
    std::vector<TimingRow> rows;
    std::vector<TimingFit> fits;
};

TimingReport run_timing(const BenchConfig& config,
                        std::span<const GraphPair> pairs);

std::string timing_to_csv(const TimingReport& report);
std::string timing_to_json(const TimingReport& report,
                           const std::string& config_json);

}  // namespace linewl
