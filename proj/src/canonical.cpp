#include "graphlines/canonical.hpp"

#include <algorithm>
#include <array>

#include "graphlines/graph6.hpp"

namespace graphlines {

namespace {

using Cells = std::vector<VertexSet>;
using Rows = std::array<VertexSet, kMaxVertices>;

/// Splits cells until every cell is equitable w.r.t. every other cell.
/// Sub-cells are ordered by neighbour count, so the result depends only on
/// the structure of g and the order of the input cells.
void refine(const Graph &g, Cells &cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            const VertexSet splitter = cells[s];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (count(cells[c]) == 1)
                    continue;
                std::array<VertexSet, kMaxVertices + 1> by_count{};
                int distinct = 0;
                for_each_vertex(cells[c], [&](int v) {
                    auto &slot = by_count[count(g.neighbours(v) & splitter)];
                    distinct += slot == 0;
                    slot |= bit(v);
                });
                if (distinct == 1)
                    continue;
                Cells split;
                for (VertexSet part : by_count)
                    if (part)
                        split.push_back(part);
                cells.erase(cells.begin() + static_cast<long>(c));
                cells.insert(cells.begin() + static_cast<long>(c), split.begin(), split.end());
                changed = true;
                break;
            }
        }
    }
}

auto are_twins(const Graph &g, int a, int b) -> bool
{
    return (g.neighbours(a) & ~bit(b)) == (g.neighbours(b) & ~bit(a));
}

struct Search {
    const Graph &g;
    Rows best{};
    std::vector<int> best_order;

    void leaf(const Cells &cells)
    {
        const int n = g.order();
        std::array<int, kMaxVertices> position{};
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            order[i] = lowest(cells[i]);
            position[order[i]] = i;
        }
        Rows rows{};
        for (int i = 0; i < n; ++i)
            for_each_vertex(g.neighbours(order[i]), [&](int w) { rows[i] |= bit(position[w]); });
        if (best_order.empty() || std::lexicographical_compare(best.begin(), best.begin() + n, rows.begin(), rows.begin() + n)) {
            best = rows;
            best_order = std::move(order);
        }
    }

    void descend(Cells cells)
    {
        refine(g, cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return count(c) > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const auto index = target - cells.begin();
        const VertexSet cell = *target;
        std::vector<int> tried;
        for_each_vertex(cell, [&](int v) {
            for (int t : tried)
                if (are_twins(g, t, v))
                    return;
            tried.push_back(v);
            Cells next = cells;
            next[index] = bit(v);
            next.insert(next.begin() + index + 1, cell & ~bit(v));
            descend(std::move(next));
        });
    }
};

} // namespace

auto canonical_labelling(const Graph &g) -> std::vector<int>
{
    const int n = g.order();
    if (n == 0)
        return {};
    std::array<VertexSet, kMaxVertices> by_degree{};
    for (int v = 0; v < n; ++v)
        by_degree[g.degree(v)] |= bit(v);
    Cells cells;
    for (VertexSet c : by_degree)
        if (c)
            cells.push_back(c);

    Search search{g, {}, {}};
    search.descend(std::move(cells));
    std::vector<int> labelling(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labelling[search.best_order[i]] = i;
    return labelling;
}

auto canonical_graph(const Graph &g) -> Graph
{
    auto labelling = canonical_labelling(g);
    return permute(g, labelling);
}

auto canonical_form(const Graph &g) -> std::string
{
    return to_graph6(canonical_graph(g));
}

namespace {

struct Matcher {
    const Graph &g;
    const Graph &h;
    std::vector<int> order;
    std::array<int, kMaxVertices> map{};
    VertexSet used = 0;

    auto extend(std::size_t depth) -> bool
    {
        if (depth == order.size())
            return true;
        const int v = order[depth];
        for (int w = 0; w < h.order(); ++w) {
            if (contains(used, w) || g.degree(v) != h.degree(w))
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k)
                ok = g.adjacent(v, order[k]) == h.adjacent(w, map[order[k]]);
            if (!ok)
                continue;
            map[v] = w;
            used |= bit(w);
            if (extend(depth + 1))
                return true;
            used &= ~bit(w);
        }
        return false;
    }
};

auto degree_profile(const Graph &g) -> std::vector<std::pair<int, std::vector<int>>>
{
    std::vector<std::pair<int, std::vector<int>>> profile;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> nd;
        for_each_vertex(g.neighbours(v), [&](int w) { nd.push_back(g.degree(w)); });
        std::sort(nd.begin(), nd.end());
        profile.emplace_back(g.degree(v), std::move(nd));
    }
    std::sort(profile.begin(), profile.end());
    return profile;
}

} // namespace

auto is_isomorphic(const Graph &g, const Graph &h) -> bool
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    if (degree_profile(g) != degree_profile(h))
        return false;
    // Visit vertices in BFS order so each new vertex is constrained by
    // already-mapped neighbours.
    Matcher m{g, h, {}, {}, 0};
    VertexSet seen = 0;
    for (int root = 0; root < g.order(); ++root) {
        if (contains(seen, root))
            continue;
        std::vector<int> queue{root};
        seen |= bit(root);
        for (std::size_t i = 0; i < queue.size(); ++i)
            for_each_vertex(g.neighbours(queue[i]) & ~seen, [&](int w) {
                seen |= bit(w);
                queue.push_back(w);
            });
        m.order.insert(m.order.end(), queue.begin(), queue.end());
    }
    return m.extend(0);
}

} // namespace graphlines
