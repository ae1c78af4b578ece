#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphlines/graph.hpp"

namespace graphlines {

auto bridges(const Graph &g) -> std::vector<Edge>;
auto bridge_count(const Graph &g) -> int;

/// Vertices whose removal increases the number of components.
auto cut_vertices(const Graph &g) -> VertexSet;

/// Connected, at least three vertices, no cut vertex.
auto is_two_connected(const Graph &g) -> bool;

/// Edges with an endpoint of degree one.
auto pendant_edges(const Graph &g) -> std::vector<Edge>;

/// Vertices whose neighbourhood is a clique.
auto simplicial_vertices(const Graph &g) -> VertexSet;

struct ChordalityResult {
    bool chordal = true;
    /// Perfect elimination ordering when chordal (first entry eliminated first).
    std::vector<int> elimination_order;
    /// A shortest induced cycle of length >= 4, in cyclic order, when not chordal.
    std::vector<int> induced_cycle;
};

/// Maximum cardinality search, then verification of the resulting ordering.
auto chordality(const Graph &g) -> ChordalityResult;
auto is_chordal(const Graph &g) -> bool;

enum class TwinKind { true_twins, false_twins };

struct TwinPair {
    int u = 0;
    int v = 0;
    TwinKind kind = TwinKind::false_twins;

    friend bool operator==(const TwinPair &, const TwinPair &) = default;
};

/// Pairs u < v with N(u) - {v} = N(v) - {u}.
auto twin_pairs(const Graph &g) -> std::vector<TwinPair>;

/// Vertices outside s with a neighbour in s.
auto neighbourhood(const Graph &g, VertexSet s) -> VertexSet;

/// s together with its neighbourhood covers the graph.
auto is_dominating(const Graph &g, VertexSet s) -> bool;

/// Every vertex outside m sees all of m or none of it.
auto is_module(const Graph &g, VertexSet m) -> bool;

/// Smallest module containing seed.
auto module_closure(const Graph &g, VertexSet seed) -> VertexSet;

inline constexpr int kModuleListBound = 20;
inline constexpr int kClassCBound = 12;

/// Every module M with 2 <= |M| < n, by increasing bit mask.
/// Throws CapabilityError for n > kModuleListBound.
auto nontrivial_modules(const Graph &g) -> std::vector<VertexSet>;

/// Some non-trivial module (the closure of the first pair that does not
/// generate the whole graph), if any. Works for every n.
auto find_nontrivial_module(const Graph &g) -> std::optional<VertexSet>;

/// Non-dominating non-trivial module with |N(M)| minimal; ties go to the
/// lexicographically smallest vertex list. Throws CapabilityError for
/// n > kModuleListBound.
auto min_non_dominating_module(const Graph &g) -> std::optional<VertexSet>;

auto is_prime(const Graph &g) -> bool;

/// A vertex set inducing a subgraph that is non-chordal, has no cut vertex
/// and no non-trivial module; nullopt when g is in class C. Only connected
/// induced subgraphs on >= 4 vertices need scanning: a disconnected one
/// either is edgeless (chordal) or has a component that is a non-trivial
/// module. Throws CapabilityError for n > kClassCBound.
auto class_C_violation(const Graph &g) -> std::optional<VertexSet>;
auto in_class_C(const Graph &g) -> bool;

/// Catalog label ("F:C4", "F0:H5", "B:B7", ...) of a graph isomorphic to g,
/// or "none".
auto classify_family(const Graph &g) -> std::string;

struct StructureReport {
    std::vector<Edge> bridges;
    int br = 0;
    VertexSet cut_vertices = 0;
    bool two_connected = false;
    std::vector<Edge> pendant_edges;
    VertexSet simplicial = 0;
    bool chordal = true;
    std::vector<TwinPair> twin_pairs;
    bool has_nontrivial_module = false;
    bool prime = true;
};

auto analyze_structure(const Graph &g) -> StructureReport;

} // namespace graphlines
