#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "graphlines/graph.hpp"

namespace graphlines {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Edge-list stanzas separated by blank lines:
///
///     name        (optional, any line that is not a single integer)
///     n
///     u v         (one edge per line, 0-based)
///
/// Lines starting with '#' are comments. Throws std::invalid_argument on
/// malformed stanzas and std::domain_error on invalid edges.
auto read_edge_lists(std::istream &in) -> std::vector<NamedGraph>;

void write_edge_list(std::ostream &out, const NamedGraph &g);

/// Reads one graph from text that is either a single graph6 record or a
/// single edge-list stanza.
auto read_graph_text(std::string_view text) -> Graph;

} // namespace graphlines
