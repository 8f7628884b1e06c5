#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "linewl/graph.hpp"

namespace linewl {

struct graph6_error : std::runtime_error {
    std::size_t offset;  // byte offset of the offending position
    graph6_error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte offset " + std::to_string(off) + ")"),
          offset(off) {}
};

// Parses one graph6 record: N(n) header then ceil(n(n-1)/2 / 6) data bytes,
// each in 63..126, upper-triangle bits in column order (0,1),(0,2),(1,2),...
// Rejects out-of-range bytes (with offset), truncated or overlong records,
// non-canonical headers and nonzero padding bits.
Graph parse_graph6(std::string_view record);

// Canonical graph6 record: shortest N(n) form, zero-padded final byte.
std::string emit_graph6(const Graph& g);

}  // namespace linewl
