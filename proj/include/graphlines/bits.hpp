#pragma once

#include <bit>
#include <cstdint>

namespace graphlines {

/// Vertex subset as a bit mask; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

/// All vertices {0, ..., n-1}.
constexpr VertexSet full_set(int n)
{
    return n >= kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr int count(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls f(v) for every member of s in increasing order.
template <typename F>
constexpr void for_each_vertex(VertexSet s, F &&f)
{
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

} // namespace graphlines
