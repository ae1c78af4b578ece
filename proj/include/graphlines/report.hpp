#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "graphlines/graph.hpp"
#include "graphlines/search.hpp"
#include "graphlines/structure.hpp"
#include "graphlines/verify.hpp"

namespace graphlines {

using Json = nlohmann::ordered_json;

auto csv_header() -> std::string;
auto to_csv(const AnalysisRecord &r) -> std::string;

auto to_json(const AnalysisRecord &r) -> Json;
auto to_json(const StructureReport &s) -> Json;
/// claim_id, graph6, lhs, rhs, holds, witness, plus status/relation/known_exception.
auto to_json(const Verdict &v) -> Json;

/// Record, structure report, chordality witness and every line with the
/// pairs inducing it. Requires n >= 2.
auto analysis_json(const Graph &g) -> Json;

/// Graphviz DOT: the graph itself, the complete graph on its vertices with
/// each pair coloured by its line class, and a legend of line members.
/// Requires n >= 2. Output is deterministic.
auto render_dot(const Graph &g, const std::string &title = "G") -> std::string;

/// Colour and edge style for a line class id (16 colours, cycling styles).
auto class_colour(int id) -> std::string;
auto class_style(int id) -> std::string;

enum class CatalogFormat { graph6, edge_list };

/// Catalog in its fixed order. graph6 output prefixes each record with a
/// ">>" comment line carrying name and statistics, so it can be piped into
/// `search --stdin`; edge-list output uses '#' comments.
void write_catalog(std::ostream &out, CatalogFormat format);

} // namespace graphlines
