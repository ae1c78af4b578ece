#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphlines/graph.hpp"

namespace graphlines {

enum class Family {
    exceptional,       ///< F: the six graphs with l(G) + br(G) < |G| excluded from the class-C bound
    pendant_exception, ///< F0 \ F: further bridgeless counterexamples, no pendant edge
    bridge,            ///< minimal counterexamples whose bridge is a pendant edge
};

/// Where an expected statistic comes from.
enum class Provenance { published, derived };

struct ExpectedStats {
    std::optional<int> ell;
    std::optional<int> br;
    /// Whether l(G) + br(G) < |G|.
    bool violates_bound = true;
    Provenance ell_provenance = Provenance::published;
};

struct CatalogEntry {
    std::string name;  ///< e.g. "C4", "K6'", "H8_2", "B6a"
    std::string label; ///< family-qualified, e.g. "F:C4", "F0:H5", "B:B6a"
    Family family;
    Graph graph;
    ExpectedStats expected;
    std::string source;
};

/// The fifteen reference graphs: 6 exceptional, 6 pendant-conjecture
/// exceptions, 3 bridge counterexamples, in that order. Drawings use 1-based
/// labels; vertex i of the drawing is stored as i - 1.
auto catalog() -> const std::vector<CatalogEntry> &;

/// Looks up an entry by name or label; throws std::out_of_range if absent.
auto catalog_entry(std::string_view name) -> const CatalogEntry &;

auto family_prefix(Family f) -> std::string_view;

} // namespace graphlines
