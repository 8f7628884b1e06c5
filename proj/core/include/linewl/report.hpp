#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "linewl/pair_file.hpp"

namespace linewl {

enum class ReportFormat { csv, json };

// Outcome of testing one pair at one (k, transform depth) setting.
struct PairVerdict {
    int pair_id = 0;
    PairCategory category = PairCategory::other;
    int k = 1;
    int depth = 0;
    bool skipped_budget = false;  // budget overrun; excluded from accuracy
    bool distinguished = false;
    int rounds = 0;
    double seconds = 0.0;
    std::int64_t nodes_before_first = 0;
    std::int64_t nodes_before_second = 0;
    std::int64_t nodes_after_first = 0;
    std::int64_t nodes_after_second = 0;
};

struct AccuracyRow {
    PairCategory category;
    int k;
    int depth;
    std::int64_t distinguished;
    std::int64_t total;  // pairs completed (budget-skipped excluded)
    double accuracy() const {
        return total == 0 ? 0.0 : static_cast<double>(distinguished) / total;
    }
};

// Accuracy per (category, k, depth), sorted; a pure function of the verdicts.
std::vector<AccuracyRow> aggregate_accuracy(std::span<const PairVerdict> verdicts);

// CSV columns are fixed: pair_id,category,k,depth,distinguished,seconds
// with distinguished in {true,false,skipped}. JSON carries the full verdict
// rows, the accuracy table and an optional config echo (see README for the
// schema).
void write_report(std::span<const PairVerdict> verdicts, ReportFormat format,
                  const std::filesystem::path& path,
                  const std::string& config_json = "");

std::string report_to_csv(std::span<const PairVerdict> verdicts);
std::string report_to_json(std::span<const PairVerdict> verdicts,
                           const std::string& config_json = "");

}  // namespace linewl
