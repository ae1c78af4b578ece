#pragma once

#include <string>
#include <string_view>

#include "graphlines/errors.hpp"
#include "graphlines/graph.hpp"

namespace graphlines {

/// Decodes one graph6 record. A trailing newline (and carriage return) is
/// accepted; anything else after the record, bytes outside [63, 126] and
/// non-zero padding bits raise Graph6Error.
auto parse_graph6(std::string_view text) -> Graph;

/// Encodes g in graph6 (no trailing newline).
auto to_graph6(const Graph &g) -> std::string;

} // namespace graphlines
