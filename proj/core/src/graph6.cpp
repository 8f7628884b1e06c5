#include "linewl/graph6.hpp"

#include <algorithm>
#include <cstdint>

namespace linewl {

namespace {

constexpr int kBias = 63;
constexpr unsigned char kMaxByte = 126;

int data_byte(std::string_view s, std::size_t pos) {
    if (pos >= s.size())
        throw graph6_error("truncated graph6 record", s.size());
    unsigned char b = static_cast<unsigned char>(s[pos]);
    if (b < kBias || b > kMaxByte)
        throw graph6_error("graph6 byte out of range 63..126", pos);
    return b - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
    if (record.empty()) throw graph6_error("empty graph6 record", 0);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    int first = data_byte(record, 0);
    if (first != kMaxByte - kBias) {
        n = static_cast<std::uint64_t>(first);
        pos = 1;
    } else {
        int second = data_byte(record, 1);
        if (second != kMaxByte - kBias) {
            n = static_cast<std::uint64_t>(second);
            n = (n << 6) | static_cast<std::uint64_t>(data_byte(record, 2));
            n = (n << 6) | static_cast<std::uint64_t>(data_byte(record, 3));
            pos = 4;
            if (n <= 62)
                throw graph6_error("non-canonical node count encoding", 0);
        } else {
            n = 0;
            for (std::size_t i = 2; i < 8; ++i)
                n = (n << 6) | static_cast<std::uint64_t>(data_byte(record, i));
            pos = 8;
            if (n <= 258047)
                throw graph6_error("non-canonical node count encoding", 0);
        }
    }

    // Bits required for the upper triangle; checked against the remaining
    // record length before allocating anything.
    const std::uint64_t avail_bits = 6 * (record.size() - pos);
    const unsigned __int128 bits_needed =
        static_cast<unsigned __int128>(n) * (n - (n ? 1 : 0)) / 2;
    if (bits_needed > avail_bits)
        throw graph6_error("truncated graph6 record", record.size());
    const std::uint64_t nbits = static_cast<std::uint64_t>(bits_needed);
    const std::size_t data_bytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (record.size() != pos + data_bytes)
        throw graph6_error("trailing bytes after graph6 record", pos + data_bytes);

    const int ni = static_cast<int>(n);
    std::vector<std::vector<int>> adj(ni);
    std::uint64_t bit = 0;
    int cur = 0, cur_bits = 0;
    std::size_t cur_pos = pos;
    int col = 1, row = 0;
    while (bit < nbits) {
        if (cur_bits == 0) {
            cur = data_byte(record, cur_pos);
            ++cur_pos;
            cur_bits = 6;
        }
        const int b = (cur >> (cur_bits - 1)) & 1;
        --cur_bits;
        if (b) {
            adj[row].push_back(col);
            adj[col].push_back(row);
        }
        ++bit;
        if (++row == col) {
            row = 0;
            ++col;
        }
    }
    if (cur_bits > 0 && (cur & ((1 << cur_bits) - 1)) != 0)
        throw graph6_error("nonzero padding bits", cur_pos - 1);

    for (auto& r : adj) std::sort(r.begin(), r.end());
    return Graph::from_sorted_adjacency(std::move(adj));
}

std::string emit_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.node_count());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }

    int cur = 0, cur_bits = 0;
    const int ni = static_cast<int>(n);
    for (int col = 1; col < ni; ++col) {
        for (int row = 0; row < col; ++row) {
            cur = (cur << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++cur_bits == 6) {
                out.push_back(static_cast<char>(cur + kBias));
                cur = 0;
                cur_bits = 0;
            }
        }
    }
    if (cur_bits > 0)
        out.push_back(static_cast<char>((cur << (6 - cur_bits)) + kBias));
    return out;
}

}  // namespace linewl
