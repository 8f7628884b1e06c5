#include "linewl/pair_file.hpp"

#include <fstream>
#include <sstream>

#include "linewl/graph6.hpp"

namespace linewl {

std::string_view to_string(PairCategory c) {
    switch (c) {
        case PairCategory::simple_regular: return "simple-regular";
        case PairCategory::strongly_regular: return "strongly-regular";
        case PairCategory::cfi: return "cfi";
        case PairCategory::other: return "other";
    }
    return "other";
}

std::optional<PairCategory> parse_category(std::string_view token) {
    if (token == "simple-regular") return PairCategory::simple_regular;
    if (token == "strongly-regular") return PairCategory::strongly_regular;
    if (token == "cfi") return PairCategory::cfi;
    if (token == "other") return PairCategory::other;
    return std::nullopt;
}

PairFile read_pair_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open pair file: " + path.string());
    PairFile out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string a, b, tag;
        if (!(ss >> a)) continue;  // blank line
        if (!(ss >> b))
            throw pair_file_error("expected two graph6 records", line_no);
        GraphPair pair;
        try {
            pair.first = parse_graph6(a);
            pair.second = parse_graph6(b);
        } catch (const graph6_error& e) {
            throw pair_file_error(std::string("bad graph6 record: ") + e.what(),
                                  line_no);
        }
        if (ss >> tag) {
            auto cat = parse_category(tag);
            if (!cat)
                throw pair_file_error("unknown category tag '" + tag + "'",
                                      line_no);
            pair.category = *cat;
        }
        std::string extra;
        if (ss >> extra)
            throw pair_file_error("unexpected trailing token '" + extra + "'",
                                  line_no);
        out.pairs.push_back(std::move(pair));
    }
    return out;
}

void write_pair_file(const std::filesystem::path& path,
                     std::span<const GraphPair> pairs) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open pair file for writing: " +
                                 path.string());
    for (const GraphPair& p : pairs) {
        out << emit_graph6(p.first) << ' ' << emit_graph6(p.second) << ' '
            << to_string(p.category) << '\n';
    }
    if (!out)
        throw std::runtime_error("write failure on pair file: " + path.string());
}

}  // namespace linewl
