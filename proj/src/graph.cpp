#include "graphlines/graph.hpp"

#include <stdexcept>
#include <string>

namespace graphlines {

namespace {

void check_vertex(int n, int v)
{
    if (v < 0 || v >= n)
        throw std::domain_error("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
}

} // namespace

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::domain_error("vertex count " + std::to_string(n) + " outside [0, 64]");
}

auto Graph::size() const -> int
{
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += count(adj_[v]);
    return twice / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    for (int u = 0; u < n_; ++u)
        for_each_vertex(adj_[u] & ~full_set(u + 1), [&](int v) { result.emplace_back(u, v); });
    return result;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    if (u == v)
        throw std::domain_error("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(n_, u);
    check_vertex(n_, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

bool operator==(const Graph &a, const Graph &b)
{
    if (a.n_ != b.n_)
        return false;
    for (int v = 0; v < a.n_; ++v)
        if (a.adj_[v] != b.adj_[v])
            return false;
    return true;
}

auto from_edge_list(int n, std::span<const std::pair<int, int>> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

auto from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph
{
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

auto from_rows(std::span<const VertexSet> rows) -> Graph
{
    const int n = static_cast<int>(rows.size());
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        if (rows[u] & ~full_set(n))
            throw std::domain_error("row " + std::to_string(u) + " has bits beyond n");
        if (contains(rows[u], u))
            throw std::domain_error("self-loop at vertex " + std::to_string(u));
        for_each_vertex(rows[u], [&](int v) {
            if (!contains(rows[v], u))
                throw std::domain_error("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
            g.add_edge(u, v);
        });
    }
    return g;
}

auto induced_subgraph(const Graph &g, VertexSet s) -> InducedSubgraph
{
    s &= g.vertices();
    InducedSubgraph result{Graph(count(s)), {}};
    std::array<int, kMaxVertices> index{};
    for_each_vertex(s, [&](int v) {
        index[v] = static_cast<int>(result.original.size());
        result.original.push_back(v);
    });
    for (int i = 0; i < static_cast<int>(result.original.size()); ++i)
        for_each_vertex(g.neighbours(result.original[i]) & s, [&](int w) {
            if (index[w] > i)
                result.graph.add_edge(i, index[w]);
        });
    return result;
}

auto contracted_index(Edge e, int v) -> int
{
    if (v == e.v)
        return e.u;
    return v > e.v ? v - 1 : v;
}

auto contract_edge(const Graph &g, Edge e) -> Graph
{
    check_vertex(g.order(), e.u);
    check_vertex(g.order(), e.v);
    if (!g.adjacent(e.u, e.v))
        throw std::domain_error("contract_edge: {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge");
    Graph result(g.order() - 1);
    for (auto [a, b] : g.edges()) {
        int x = contracted_index(e, a), y = contracted_index(e, b);
        if (x != y)
            result.add_edge(x, y);
    }
    return result;
}

auto remove_vertex(const Graph &g, int v) -> Graph
{
    check_vertex(g.order(), v);
    return induced_subgraph(g, g.vertices() & ~bit(v)).graph;
}

auto add_vertex(const Graph &g, VertexSet neighbours) -> Graph
{
    if (neighbours & ~g.vertices())
        throw std::domain_error("add_vertex: neighbour outside the graph");
    Graph result(g.order() + 1);
    for (auto [a, b] : g.edges())
        result.add_edge(a, b);
    for_each_vertex(neighbours, [&](int w) { result.add_edge(g.order(), w); });
    return result;
}

auto permute(const Graph &g, std::span<const int> perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g.order())
        throw std::domain_error("permute: permutation size mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        check_vertex(g.order(), p);
        seen |= bit(p);
    }
    if (seen != g.vertices())
        throw std::domain_error("permute: not a permutation");
    Graph result(g.order());
    for (auto [a, b] : g.edges())
        result.add_edge(perm[a], perm[b]);
    return result;
}

auto glue_at_vertex(const Graph &g, int a, const Graph &h, int b) -> Graph
{
    check_vertex(g.order(), a);
    check_vertex(h.order(), b);
    const int n = g.order() + h.order() - 1;
    Graph result(n);
    for (auto [x, y] : g.edges())
        result.add_edge(x, y);
    auto map = [&](int v) {
        if (v == b)
            return a;
        return g.order() + (v < b ? v : v - 1);
    };
    for (auto [x, y] : h.edges())
        result.add_edge(map(x), map(y));
    return result;
}

auto component_of(const Graph &g, int v, VertexSet within) -> VertexSet
{
    VertexSet seen = bit(v), frontier = bit(v);
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int w) { next |= g.neighbours(w); });
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

auto component_of(const Graph &g, int v) -> VertexSet
{
    check_vertex(g.order(), v);
    return component_of(g, v, g.vertices());
}

auto connected_components(const Graph &g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    VertexSet left = g.vertices();
    while (left) {
        VertexSet c = component_of(g, lowest(left), left);
        result.push_back(c);
        left &= ~c;
    }
    return result;
}

auto is_connected(const Graph &g) -> bool
{
    return g.order() == 0 || component_of(g, 0) == g.vertices();
}

auto complete_graph(int n) -> Graph
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

auto path_graph(int n) -> Graph
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw std::domain_error("cycle_graph needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

auto star_graph(int leaves) -> Graph
{
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

} // namespace graphlines
