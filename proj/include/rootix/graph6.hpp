#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rootix/error.hpp"
#include "rootix/graph.hpp"

namespace rootix {

// graph6: N(n) followed by the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// (column by column) packed six bits per byte, most significant first, each
// byte offset by 63. Header-less, one graph per line.

namespace detail {

inline void append_graph6_order(std::string& out, int n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3f)));
    } else {
        throw InputError("graph6 writer supports at most 258047 vertices");
    }
}

/// Packs a column-major upper-triangle bit stream.
template <class BitFn>
std::string pack_graph6(int n, BitFn&& bit)
{
    std::string out;
    append_graph6_order(out, n);
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (bit(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

} // namespace detail

inline std::string write_graph6(const Graph& g)
{
    return detail::pack_graph6(g.order(), [&](int i, int j) { return g.adjacent(i, j); });
}

inline Graph parse_graph6(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    for (char ch : s) {
        auto u = static_cast<unsigned char>(ch);
        if (u < 63 || u > 126)
            throw InputError("graph6: invalid byte " + std::to_string(u));
    }
    if (s.empty())
        throw InputError("graph6: empty record");

    std::size_t pos = 0;
    int n = static_cast<unsigned char>(s[pos++]) - 63;
    if (n == 63) {
        if (s.size() < 4)
            throw InputError("graph6: truncated order field");
        n = 0;
        for (int k = 0; k < 3; ++k)
            n = (n << 6) | (static_cast<unsigned char>(s[pos++]) - 63);
        if (n <= 62)
            throw InputError("graph6: non-canonical long order field");
    }
    if (n < 1)
        throw InputError("graph6: graph must have at least one vertex");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (s.size() - pos < bytes)
        throw InputError("graph6: truncated bit vector");
    if (s.size() - pos > bytes)
        throw InputError("graph6: trailing bytes after bit vector");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(s[pos + k / 6]) - 63;
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1)
                edges.emplace_back(i, j);
        }
    }
    for (; k < bytes * 6; ++k) {
        const int byte = static_cast<unsigned char>(s[pos + k / 6]) - 63;
        if ((byte >> (5 - static_cast<int>(k % 6))) & 1)
            throw InputError("graph6: nonzero padding bits");
    }
    return Graph::from_edge_list(n, edges);
}

} // namespace rootix
