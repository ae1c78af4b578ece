#include "graphlines/metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphlines {

auto DistanceMatrix::sphere(int v, int k) const -> VertexSet
{
    VertexSet s = 0;
    for (int w = 0; w < n_; ++w)
        if ((*this)(v, w) == k)
            s |= bit(w);
    return s;
}

auto apsp(const Graph &g) -> DistanceMatrix
{
    const int n = g.order();
    DistanceMatrix d(n);
    for (int s = 0; s < n; ++s) {
        VertexSet seen = bit(s), frontier = bit(s);
        for (int level = 0; frontier; ++level) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) {
                d.set(s, v, level);
                next |= g.neighbours(v);
            });
            frontier = next & ~seen;
            seen |= frontier;
        }
    }
    return d;
}

auto between(const DistanceMatrix &d, int a, int b, int c) -> bool
{
    const int n = d.order();
    if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
        throw std::domain_error("between: vertex out of range");
    if (a == b || b == c || a == c)
        throw std::domain_error("between: vertices must be distinct");
    const int ab = d(a, b), bc = d(b, c), ac = d(a, c);
    if (ab == kUnreachable || bc == kUnreachable || ac == kUnreachable)
        return false;
    return ab + bc == ac;
}

auto diameter(const DistanceMatrix &d) -> int
{
    int best = 0;
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            best = std::max(best, d(u, v));
    return best;
}

} // namespace graphlines
