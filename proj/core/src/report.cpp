#include "linewl/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace linewl {

std::vector<AccuracyRow> aggregate_accuracy(std::span<const PairVerdict> verdicts) {
    std::map<std::tuple<int, int, int>, AccuracyRow> acc;
    for (const PairVerdict& v : verdicts) {
        if (v.skipped_budget) continue;
        auto key = std::make_tuple(static_cast<int>(v.category), v.k, v.depth);
        auto it = acc.find(key);
        if (it == acc.end()) {
            it = acc.emplace(key, AccuracyRow{v.category, v.k, v.depth, 0, 0})
                     .first;
        }
        it->second.total += 1;
        if (v.distinguished) it->second.distinguished += 1;
    }
    std::vector<AccuracyRow> out;
    out.reserve(acc.size());
    for (auto& [key, row] : acc) out.push_back(row);
    return out;
}

std::string report_to_csv(std::span<const PairVerdict> verdicts) {
    std::ostringstream out;
    out << "pair_id,category,k,depth,distinguished,seconds\n";
    for (const PairVerdict& v : verdicts) {
        out << v.pair_id << ',' << to_string(v.category) << ',' << v.k << ','
            << v.depth << ','
            << (v.skipped_budget ? "skipped" : (v.distinguished ? "true" : "false"))
            << ',';
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v.seconds);
        out << buf << '\n';
    }
    return out.str();
}

std::string report_to_json(std::span<const PairVerdict> verdicts,
                           const std::string& config_json) {
    nlohmann::json j;
    if (!config_json.empty()) j["config"] = nlohmann::json::parse(config_json);
    j["verdicts"] = nlohmann::json::array();
    for (const PairVerdict& v : verdicts) {
        nlohmann::json row;
        row["pair_id"] = v.pair_id;
        row["category"] = std::string(to_string(v.category));
        row["k"] = v.k;
        row["depth"] = v.depth;
        row["status"] = v.skipped_budget ? "skipped-budget" : "done";
        row["distinguished"] = v.distinguished;
        row["rounds"] = v.rounds;
        row["seconds"] = v.seconds;
        row["nodes_before"] = {v.nodes_before_first, v.nodes_before_second};
        row["nodes_after"] = {v.nodes_after_first, v.nodes_after_second};
        j["verdicts"].push_back(std::move(row));
    }
    j["accuracy"] = nlohmann::json::array();
    for (const AccuracyRow& row : aggregate_accuracy(verdicts)) {
        nlohmann::json a;
        a["category"] = std::string(to_string(row.category));
        a["k"] = row.k;
        a["depth"] = row.depth;
        a["distinguished"] = row.distinguished;
        a["total"] = row.total;
        a["accuracy"] = row.accuracy();
        j["accuracy"].push_back(std::move(a));
    }
    return j.dump(2);
}

void write_report(std::span<const PairVerdict> verdicts, ReportFormat format,
                  const std::filesystem::path& path,
                  const std::string& config_json) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open report file for writing: " +
                                 path.string());
    if (format == ReportFormat::csv)
        out << report_to_csv(verdicts);
    else
        out << report_to_json(verdicts, config_json) << '\n';
    if (!out)
        throw std::runtime_error("write failure on report file: " + path.string());
}

}  // namespace linewl
