#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linewl/graph.hpp"

namespace linewl {

enum class PairCategory { simple_regular, strongly_regular, cfi, other };

std::string_view to_string(PairCategory c);
std::optional<PairCategory> parse_category(std::string_view token);

struct GraphPair {
    Graph first;
    Graph second;
    PairCategory category = PairCategory::other;
};

struct PairFile {
    std::vector<GraphPair> pairs;
};

struct pair_file_error : std::runtime_error {
    std::size_t line;  // 1-based line number
    pair_file_error(const std::string& what, std::size_t line_no)
        : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"),
          line(line_no) {}
};

// One pair per line: `<graph6> <graph6> [tag]`, tag one of
// simple-regular | strongly-regular | cfi | other. Blank lines are skipped.
PairFile read_pair_file(const std::filesystem::path& path);
void write_pair_file(const std::filesystem::path& path,
                     std::span<const GraphPair> pairs);

}  // namespace linewl
