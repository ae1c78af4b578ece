#include "graphlines/lines.hpp"

#include <stdexcept>

namespace graphlines {

namespace {

/// spheres[v][k] = vertices at distance k from v.
struct Spheres {
    int n = 0;
    std::vector<std::vector<VertexSet>> of;

    explicit Spheres(const DistanceMatrix &d) : n(d.order()), of(static_cast<std::size_t>(d.order()))
    {
        for (int v = 0; v < n; ++v) {
            of[v].assign(static_cast<std::size_t>(n), 0);
            for (int w = 0; w < n; ++w)
                if (d(v, w) != kUnreachable)
                    of[v][d(v, w)] |= bit(w);
        }
    }

    auto at(int v, int k) const -> VertexSet
    {
        return k >= 0 && k < n ? of[v][k] : 0;
    }
};

auto line_with_spheres(const Spheres &s, const DistanceMatrix &d, int x, int y) -> Line
{
    const int dxy = d(x, y);
    VertexSet members = bit(x) | bit(y);
    if (dxy == kUnreachable)
        return {members};
    const int n = d.order();
    for (int k = 0; k < n; ++k) {
        const VertexSet sx = s.at(x, k);
        if (!sx)
            continue;
        members |= sx & s.at(y, k + dxy);  // [u x y]
        members |= sx & s.at(y, k - dxy);  // [x y u]
        members |= sx & s.at(y, dxy - k);  // [x u y]
    }
    return {members};
}

} // namespace

auto line_of_pair(const Graph &g, const DistanceMatrix &d, int x, int y) -> Line
{
    const int n = g.order();
    if (x < 0 || y < 0 || x >= n || y >= n)
        throw std::domain_error("line_of_pair: vertex out of range");
    if (x == y)
        throw std::domain_error("line_of_pair: a line needs two distinct vertices");
    return line_with_spheres(Spheres(d), d, x, y);
}

auto line_of_pair(const Graph &g, int x, int y) -> Line
{
    return line_of_pair(g, apsp(g), x, y);
}

auto line_partition(const Graph &g, const DistanceMatrix &d) -> LinePartition
{
    const int n = g.order();
    if (n < 2)
        throw std::domain_error("line_partition: lines need at least two vertices");
    const Spheres spheres(d);
    LinePartition p;
    p.n = n;
    p.pair_class.assign(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const Line l = line_with_spheres(spheres, d, x, y);
            int id = -1;
            for (std::size_t c = 0; c < p.classes.size(); ++c)
                if (p.classes[c] == l) {
                    id = static_cast<int>(c);
                    break;
                }
            if (id < 0) {
                id = static_cast<int>(p.classes.size());
                p.classes.push_back(l);
            }
            p.pair_class[static_cast<std::size_t>(x) * n + y] = id;
            p.pair_class[static_cast<std::size_t>(y) * n + x] = id;
        }
    return p;
}

auto line_partition(const Graph &g) -> LinePartition
{
    return line_partition(g, apsp(g));
}

auto ell(const Graph &g) -> int
{
    return static_cast<int>(line_partition(g).classes.size());
}

auto is_universal_line(const Line &l, const Graph &g) -> bool
{
    return l.members == g.vertices();
}

auto ul(const Graph &g, const LinePartition &lines) -> int
{
    int total = 0;
    for (int x = 0; x < lines.n; ++x)
        for (int y = x + 1; y < lines.n; ++y)
            total += is_universal_line(lines.line_of(x, y), g);
    return total;
}

auto ul(const Graph &g) -> int
{
    return ul(g, line_partition(g));
}

} // namespace graphlines
