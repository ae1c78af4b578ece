#pragma once

#include <compare>
#include <vector>

#include "graphlines/graph.hpp"
#include "graphlines/metric.hpp"

namespace graphlines {

/// The line through a pair of vertices, as a vertex set.
struct Line {
    VertexSet members = 0;

    friend auto operator<=>(const Line &, const Line &) = default;
};

/// Distinct lines of a graph and the class of every unordered pair.
struct LinePartition {
    int n = 0;
    /// Distinct lines, ordered by first occurrence over pairs (0,1), (0,2), ...
    std::vector<Line> classes;
    /// n*n table; entry (x,y) for x != y is the index into classes, -1 on the diagonal.
    std::vector<int> pair_class;

    auto class_of(int x, int y) const -> int { return pair_class[static_cast<std::size_t>(x) * n + y]; }
    auto line_of(int x, int y) const -> const Line & { return classes[class_of(x, y)]; }
};

/// {x,y} plus every u with [uxy], [xuy] or [xyu]. Pairs in different
/// components give {x,y}. Throws std::domain_error if x == y.
auto line_of_pair(const Graph &g, const DistanceMatrix &d, int x, int y) -> Line;
auto line_of_pair(const Graph &g, int x, int y) -> Line;

/// Throws std::domain_error for n < 2.
auto line_partition(const Graph &g) -> LinePartition;
auto line_partition(const Graph &g, const DistanceMatrix &d) -> LinePartition;

/// Number of distinct lines.
auto ell(const Graph &g) -> int;

auto is_universal_line(const Line &l, const Graph &g) -> bool;

/// Number of unordered pairs whose line is the whole vertex set.
auto ul(const Graph &g) -> int;
auto ul(const Graph &g, const LinePartition &lines) -> int;

} // namespace graphlines
