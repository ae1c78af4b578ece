#include "graphlines/structure.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "graphlines/canonical.hpp"
#include "graphlines/catalog.hpp"
#include "graphlines/errors.hpp"

namespace graphlines {

namespace {

/// Tarjan low-link over every component.
struct LowLink {
    const Graph &g;
    std::array<int, kMaxVertices> discovered{};
    std::array<int, kMaxVertices> low{};
    int clock = 0;
    std::vector<Edge> bridges;
    VertexSet cut = 0;

    explicit LowLink(const Graph &graph) : g(graph)
    {
        discovered.fill(-1);
        for (int v = 0; v < g.order(); ++v)
            if (discovered[v] < 0)
                visit(v, -1);
        std::sort(bridges.begin(), bridges.end());
    }

    void visit(int v, int parent)
    {
        discovered[v] = low[v] = clock++;
        int children = 0;
        for_each_vertex(g.neighbours(v), [&](int w) {
            if (w == parent)
                return;
            if (discovered[w] >= 0) {
                low[v] = std::min(low[v], discovered[w]);
                return;
            }
            ++children;
            visit(w, v);
            low[v] = std::min(low[v], low[w]);
            if (low[w] > discovered[v])
                bridges.emplace_back(v, w);
            if (parent >= 0 && low[w] >= discovered[v])
                cut |= bit(v);
        });
        if (parent < 0 && children > 1)
            cut |= bit(v);
    }
};

auto is_clique(const Graph &g, VertexSet s) -> bool
{
    bool ok = true;
    for_each_vertex(s, [&](int v) { ok = ok && (g.neighbours(v) & s) == (s & ~bit(v)); });
    return ok;
}

/// Vertex lists compared lexicographically.
auto lex_less(VertexSet a, VertexSet b) -> bool
{
    while (a && b) {
        int x = lowest(a), y = lowest(b);
        if (x != y)
            return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

/// Shortest path from a to b using only vertices in `allowed`, or empty.
auto shortest_path(const Graph &g, int a, int b, VertexSet allowed) -> std::vector<int>
{
    std::array<int, kMaxVertices> parent{};
    VertexSet seen = bit(a);
    std::vector<int> queue{a};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const int v = queue[i];
        if (v == b)
            break;
        for_each_vertex(g.neighbours(v) & allowed & ~seen, [&](int w) {
            seen |= bit(w);
            parent[w] = v;
            queue.push_back(w);
        });
    }
    if (!contains(seen, b))
        return {};
    std::vector<int> path{b};
    while (path.back() != a)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

/// For every vertex v and non-adjacent neighbours a, b: a shortest a-b path
/// avoiding N[v] - {a, b} closes an induced cycle through v. The minimum over
/// all choices is a shortest induced cycle of length >= 4.
auto shortest_induced_long_cycle(const Graph &g) -> std::vector<int>
{
    std::vector<int> best;
    for (int v = 0; v < g.order(); ++v) {
        const VertexSet nv = g.neighbours(v);
        for_each_vertex(nv, [&](int a) {
            for_each_vertex(nv & ~g.neighbours(a) & ~full_set(a + 1), [&](int b) {
                const VertexSet allowed = (g.vertices() & ~(nv | bit(v))) | bit(a) | bit(b);
                auto path = shortest_path(g, a, b, allowed);
                if (path.empty() || (!best.empty() && path.size() + 1 >= best.size()))
                    return;
                best.assign(1, v);
                best.insert(best.end(), path.begin(), path.end());
            });
        });
    }
    return best;
}

} // namespace

auto bridges(const Graph &g) -> std::vector<Edge>
{
    return LowLink(g).bridges;
}

auto bridge_count(const Graph &g) -> int
{
    return static_cast<int>(bridges(g).size());
}

auto cut_vertices(const Graph &g) -> VertexSet
{
    return LowLink(g).cut;
}

auto is_two_connected(const Graph &g) -> bool
{
    return g.order() >= 3 && is_connected(g) && cut_vertices(g) == 0;
}

auto pendant_edges(const Graph &g) -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (auto e : g.edges())
        if (g.degree(e.u) == 1 || g.degree(e.v) == 1)
            result.push_back(e);
    return result;
}

auto simplicial_vertices(const Graph &g) -> VertexSet
{
    VertexSet result = 0;
    for (int v = 0; v < g.order(); ++v)
        if (is_clique(g, g.neighbours(v)))
            result |= bit(v);
    return result;
}

auto chordality(const Graph &g) -> ChordalityResult
{
    const int n = g.order();
    // Maximum cardinality search numbers vertices from n-1 down to 0; the
    // reverse visiting order is a perfect elimination ordering iff g is chordal.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::array<int, kMaxVertices> weight{};
    std::array<int, kMaxVertices> position{};
    VertexSet numbered = 0;
    for (int i = n - 1; i >= 0; --i) {
        int pick = -1;
        for_each_vertex(g.vertices() & ~numbered, [&](int v) {
            if (pick < 0 || weight[v] > weight[pick])
                pick = v;
        });
        order[i] = pick;
        position[pick] = i;
        numbered |= bit(pick);
        for_each_vertex(g.neighbours(pick) & ~numbered, [&](int w) { ++weight[w]; });
    }

    bool perfect = true;
    for (int i = 0; i < n && perfect; ++i) {
        const int v = order[i];
        VertexSet later = 0;
        for_each_vertex(g.neighbours(v), [&](int w) {
            if (position[w] > i)
                later |= bit(w);
        });
        if (!later)
            continue;
        int parent = -1;
        for_each_vertex(later, [&](int w) {
            if (parent < 0 || position[w] < position[parent])
                parent = w;
        });
        const VertexSet rest = later & ~bit(parent);
        perfect = (rest & ~g.neighbours(parent)) == 0;
    }

    ChordalityResult result;
    result.chordal = perfect;
    if (perfect)
        result.elimination_order = std::move(order);
    else
        result.induced_cycle = shortest_induced_long_cycle(g);
    return result;
}

auto is_chordal(const Graph &g) -> bool
{
    return chordality(g).chordal;
}

auto twin_pairs(const Graph &g) -> std::vector<TwinPair>
{
    std::vector<TwinPair> result;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((g.neighbours(u) & ~bit(v)) == (g.neighbours(v) & ~bit(u)))
                result.push_back({u, v, g.adjacent(u, v) ? TwinKind::true_twins : TwinKind::false_twins});
    return result;
}

auto neighbourhood(const Graph &g, VertexSet s) -> VertexSet
{
    VertexSet result = 0;
    for_each_vertex(s, [&](int v) { result |= g.neighbours(v); });
    return result & ~s;
}

auto is_dominating(const Graph &g, VertexSet s) -> bool
{
    return (s | neighbourhood(g, s)) == g.vertices();
}

auto is_module(const Graph &g, VertexSet m) -> bool
{
    m &= g.vertices();
    bool ok = true;
    for_each_vertex(g.vertices() & ~m, [&](int w) {
        const VertexSet seen = g.neighbours(w) & m;
        ok = ok && (seen == 0 || seen == m);
    });
    return ok;
}

auto module_closure(const Graph &g, VertexSet seed) -> VertexSet
{
    VertexSet m = seed & g.vertices();
    for (bool grown = true; grown;) {
        grown = false;
        for_each_vertex(g.vertices() & ~m, [&](int w) {
            const VertexSet seen = g.neighbours(w) & m;
            if (seen != 0 && seen != m) {
                m |= bit(w);
                grown = true;
            }
        });
    }
    return m;
}

auto nontrivial_modules(const Graph &g) -> std::vector<VertexSet>
{
    const int n = g.order();
    if (n > kModuleListBound)
        throw CapabilityError("nontrivial_modules supports n <= " + std::to_string(kModuleListBound));
    std::vector<VertexSet> result;
    const VertexSet all = g.vertices();
    for (VertexSet m = 1; m < all; ++m)
        if (count(m) >= 2 && is_module(g, m))
            result.push_back(m);
    return result;
}

auto find_nontrivial_module(const Graph &g) -> std::optional<VertexSet>
{
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            const VertexSet m = module_closure(g, bit(a) | bit(b));
            if (m != g.vertices())
                return m;
        }
    return std::nullopt;
}

auto min_non_dominating_module(const Graph &g) -> std::optional<VertexSet>
{
    std::optional<VertexSet> best;
    int best_size = 0;
    for (VertexSet m : nontrivial_modules(g)) {
        if (is_dominating(g, m))
            continue;
        const int size = count(neighbourhood(g, m));
        if (!best || size < best_size || (size == best_size && lex_less(m, *best))) {
            best = m;
            best_size = size;
        }
    }
    return best;
}

auto is_prime(const Graph &g) -> bool
{
    return !find_nontrivial_module(g).has_value();
}

auto class_C_violation(const Graph &g) -> std::optional<VertexSet>
{
    const int n = g.order();
    if (n > kClassCBound)
        throw CapabilityError("in_class_C supports n <= " + std::to_string(kClassCBound));
    std::vector<VertexSet> subsets;
    for (VertexSet s = 1; s <= g.vertices() && s != 0; ++s)
        if (count(s) >= 4)
            subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(), [](VertexSet a, VertexSet b) { return count(a) < count(b); });
    for (VertexSet s : subsets) {
        if (component_of(g, lowest(s), s) != s)
            continue;
        const Graph h = induced_subgraph(g, s).graph;
        if (cut_vertices(h) == 0 && !is_chordal(h) && is_prime(h))
            return s;
    }
    return std::nullopt;
}

auto in_class_C(const Graph &g) -> bool
{
    return !class_C_violation(g).has_value();
}

auto classify_family(const Graph &g) -> std::string
{
    static const auto forms = [] {
        std::vector<std::pair<std::string, const CatalogEntry *>> result;
        for (const auto &e : catalog())
            result.emplace_back(canonical_form(e.graph), &e);
        return result;
    }();
    bool candidate = false;
    for (const auto &[form, e] : forms)
        candidate = candidate || (e->graph.order() == g.order() && e->graph.size() == g.size());
    if (!candidate)
        return "none";
    const std::string form = canonical_form(g);
    for (const auto &[f, e] : forms)
        if (f == form)
            return e->label;
    return "none";
}

auto analyze_structure(const Graph &g) -> StructureReport
{
    StructureReport r;
    const LowLink ll(g);
    r.bridges = ll.bridges;
    r.br = static_cast<int>(r.bridges.size());
    r.cut_vertices = ll.cut;
    r.two_connected = g.order() >= 3 && is_connected(g) && ll.cut == 0;
    r.pendant_edges = pendant_edges(g);
    r.simplicial = simplicial_vertices(g);
    r.chordal = is_chordal(g);
    r.twin_pairs = twin_pairs(g);
    r.has_nontrivial_module = find_nontrivial_module(g).has_value();
    r.prime = !r.has_nontrivial_module;
    return r;
}

} // namespace graphlines
