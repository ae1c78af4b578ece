#pragma once

#include <string>
#include <vector>

#include "graphlines/graph.hpp"

namespace graphlines {

/// Canonical relabelling: vertex v of g becomes vertex labelling[v].
///
/// Degree partition refined to an equitable partition, then individualise
/// and refine over the first non-singleton cell; the leaf with the
/// lexicographically largest permuted adjacency rows wins. Vertices of a
/// cell that are twins of an already explored vertex are skipped, since
/// swapping twins is an automorphism that fixes the current partition.
auto canonical_labelling(const Graph &g) -> std::vector<int>;

auto canonical_graph(const Graph &g) -> Graph;

/// graph6 string of the canonical graph; equal strings iff isomorphic.
auto canonical_form(const Graph &g) -> std::string;

/// Direct backtracking search for an adjacency-preserving bijection.
/// Independent of canonical_form.
auto is_isomorphic(const Graph &g, const Graph &h) -> bool;

} // namespace graphlines
