#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphlines/graph.hpp"

namespace graphlines {

inline constexpr int kMaxEnumerationOrder = 7;

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, ordered by edge count then canonical graph6. Built once per n
/// by filtering all labelled graphs with non-decreasing degrees (every class
/// has such a labelling) and deduplicating by canonical form.
/// Throws CapabilityError for n > 7 (feed larger orders as graph6 instead).
auto enumerate_connected(int n) -> const std::vector<Graph> &;

enum class Tri { holds, fails, not_applicable };

auto tri_symbol(Tri t) -> char; ///< '1', '0' or '-'

struct AnalysisRecord {
    std::string graph6; ///< canonical graph6
    int n = 0;
    int m = 0;
    int ell = 0;
    int br = 0;
    int ul = 0;
    bool pendant = false;
    bool in_C = false;
    std::string family; ///< catalog label or "none"
    Tri main_ok = Tri::not_applicable;
    Tri conj2_ok = Tri::not_applicable;
    Tri conj3_ok = Tri::not_applicable;
};

/// Full per-graph statistics. Verdicts are "not applicable" on disconnected
/// graphs. Throws std::domain_error for n < 2 and CapabilityError for n > 12.
auto analyze_graph(const Graph &g) -> AnalysisRecord;

enum class Inequality { main, conj2, conj3 };

auto parse_inequality(const std::string &name) -> std::optional<Inequality>;
auto to_string(Inequality i) -> std::string;

/// main: l + br < n (any class); conj2: additionally no pendant edge;
/// conj3: l + ul < n.
auto violates(const AnalysisRecord &r, Inequality which) -> bool;

struct ScanFilters {
    bool connected_only = true;
    int min_order = 2;
    int max_order = kMaxVertices;
};

auto passes(const ScanFilters &f, const Graph &g) -> bool;

struct ScanItem {
    std::size_t index = 0; ///< position among emitted items
    std::size_t line = 0;  ///< 1-based input line, 0 for in-memory sources
    std::optional<AnalysisRecord> record;
    std::string error;
};

/// Analyses graphs with `jobs` worker threads; output order equals input
/// order, graphs rejected by the filters are dropped.
auto scan(std::span<const Graph> graphs, const ScanFilters &filters, int jobs = 1) -> std::vector<AnalysisRecord>;

/// Streams graph6 lines (">>" comment lines and blank lines ignored) in
/// chunks through the worker pool. A malformed line yields an item with
/// `error` set and the scan continues.
void scan_stream(std::istream &in, const ScanFilters &filters, int jobs, const std::function<void(const ScanItem &)> &sink);

/// All isomorphism classes of connected graphs with 2 <= n <= n_max that
/// violate the chosen inequality.
auto find_counterexamples(int n_max, Inequality which, int jobs = 1) -> std::vector<AnalysisRecord>;

struct ScanSummary {
    std::size_t records = 0;
    std::size_t errors = 0;
    std::size_t main[3] = {};  ///< indexed by Tri
    std::size_t conj2[3] = {};
    std::size_t conj3[3] = {};

    void add(const AnalysisRecord &r);
};

} // namespace graphlines
