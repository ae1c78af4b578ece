#pragma once

#include <array>
#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "graphlines/bits.hpp"

namespace graphlines {

/// Unordered edge, normalised so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on at most kMaxVertices vertices, stored as one
/// adjacency bit row per vertex.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    auto order() const -> int { return n_; }
    auto size() const -> int;

    auto neighbours(int v) const -> VertexSet { return adj_[v]; }
    auto adjacent(int u, int v) const -> bool { return contains(adj_[u], v); }
    auto degree(int v) const -> int { return count(adj_[v]); }
    auto vertices() const -> VertexSet { return full_set(n_); }
    auto rows() const -> std::span<const VertexSet> { return {adj_.data(), static_cast<std::size_t>(n_)}; }

    /// Edges in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend bool operator==(const Graph &a, const Graph &b);

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

/// Builds a graph from an edge list; duplicate edges are collapsed.
/// Throws std::domain_error on an endpoint >= n, a self-loop or n out of range.
auto from_edge_list(int n, std::span<const std::pair<int, int>> edges) -> Graph;
auto from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph;

/// Builds a graph from adjacency rows; validates symmetry and irreflexivity.
auto from_rows(std::span<const VertexSet> rows) -> Graph;

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the vertex of the source graph that became vertex i.
    std::vector<int> original;
};

/// Subgraph induced by s, vertices relabelled in increasing order.
auto induced_subgraph(const Graph &g, VertexSet s) -> InducedSubgraph;

/// Contracts edge {u, v}: the merged vertex keeps the lower index and higher
/// indices shift down by one. Throws std::domain_error if uv is not an edge.
auto contract_edge(const Graph &g, Edge e) -> Graph;

/// Maps a vertex of g to its index after contract_edge(g, e).
auto contracted_index(Edge e, int v) -> int;

/// Removes vertex v; higher indices shift down by one.
auto remove_vertex(const Graph &g, int v) -> Graph;

/// Appends a new vertex (index n) adjacent to the given set.
auto add_vertex(const Graph &g, VertexSet neighbours) -> Graph;

/// Relabels so that vertex v of g becomes vertex perm[v].
auto permute(const Graph &g, std::span<const int> perm) -> Graph;

/// Identifies vertex a of g with vertex b of h. Vertices of g keep their
/// indices; the vertices of h other than b follow in increasing order.
auto glue_at_vertex(const Graph &g, int a, const Graph &h, int b) -> Graph;

/// Component of v (vertices reachable from v).
auto component_of(const Graph &g, int v) -> VertexSet;

/// Same, restricted to the vertices in `within`.
auto component_of(const Graph &g, int v, VertexSet within) -> VertexSet;

/// Connected components ordered by their smallest vertex. Empty graph -> {}.
auto connected_components(const Graph &g) -> std::vector<VertexSet>;

/// True for the empty graph by convention.
auto is_connected(const Graph &g) -> bool;

// Common small graphs, used throughout tests and the CLI.
auto complete_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto star_graph(int leaves) -> Graph;

} // namespace graphlines
