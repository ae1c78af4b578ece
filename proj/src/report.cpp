#include "graphlines/report.hpp"

#include <array>
#include <ostream>
#include <sstream>

#include "graphlines/catalog.hpp"
#include "graphlines/graph6.hpp"
#include "graphlines/io.hpp"
#include "graphlines/lines.hpp"

namespace graphlines {

namespace {

auto vertex_list(VertexSet s) -> Json
{
    Json out = Json::array();
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

auto edge_list(const std::vector<Edge> &edges) -> Json
{
    Json out = Json::array();
    for (auto e : edges)
        out.push_back({e.u, e.v});
    return out;
}

auto tri_json(Tri t) -> Json
{
    switch (t) {
    case Tri::holds:
        return true;
    case Tri::fails:
        return false;
    case Tri::not_applicable:
        return nullptr;
    }
    return nullptr;
}

auto set_label(VertexSet s) -> std::string
{
    std::string out = "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    });
    return out + "}";
}

constexpr std::array<const char *, 16> kPalette = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
    "#fabed4", "#469990", "#dcbeff", "#9a6324", "#800000", "#aaffc3", "#808000", "#000075",
};
constexpr std::array<const char *, 4> kStyles = {"solid", "dashed", "dotted", "bold"};

} // namespace

auto class_colour(int id) -> std::string
{
    return kPalette[static_cast<std::size_t>(id) % kPalette.size()];
}

auto class_style(int id) -> std::string
{
    return kStyles[(static_cast<std::size_t>(id) / kPalette.size()) % kStyles.size()];
}

auto csv_header() -> std::string
{
    return "graph6,n,m,ell,br,ul,pendant,in_C,family,main_ok,conj2_ok,conj3_ok";
}

auto to_csv(const AnalysisRecord &r) -> std::string
{
    std::ostringstream out;
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.ell << ',' << r.br << ',' << r.ul << ',' << (r.pendant ? 1 : 0)
        << ',' << (r.in_C ? 1 : 0) << ',' << r.family << ',' << tri_symbol(r.main_ok) << ',' << tri_symbol(r.conj2_ok)
        << ',' << tri_symbol(r.conj3_ok);
    return out.str();
}

auto to_json(const AnalysisRecord &r) -> Json
{
    return Json{{"graph6", r.graph6}, {"n", r.n},          {"m", r.m},
                {"ell", r.ell},       {"br", r.br},        {"ul", r.ul},
                {"pendant", r.pendant}, {"in_C", r.in_C},  {"family", r.family},
                {"main_ok", tri_json(r.main_ok)}, {"conj2_ok", tri_json(r.conj2_ok)}, {"conj3_ok", tri_json(r.conj3_ok)}};
}

auto to_json(const StructureReport &s) -> Json
{
    Json twins = Json::array();
    for (const auto &t : s.twin_pairs)
        twins.push_back({{"u", t.u}, {"v", t.v}, {"kind", t.kind == TwinKind::true_twins ? "true" : "false"}});
    return Json{{"bridges", edge_list(s.bridges)},
                {"br", s.br},
                {"cut_vertices", vertex_list(s.cut_vertices)},
                {"two_connected", s.two_connected},
                {"pendant_edges", edge_list(s.pendant_edges)},
                {"simplicial", vertex_list(s.simplicial)},
                {"chordal", s.chordal},
                {"twin_pairs", twins},
                {"has_nontrivial_module", s.has_nontrivial_module},
                {"prime", s.prime}};
}

auto to_json(const Verdict &v) -> Json
{
    Json out{{"claim_id", v.claim_id}, {"graph6", v.graph6}};
    out["lhs"] = v.lhs ? Json(*v.lhs) : Json(nullptr);
    out["rhs"] = v.rhs ? Json(*v.rhs) : Json(nullptr);
    out["holds"] = v.status == Status::not_applicable ? Json(nullptr) : Json(v.holds());
    out["witness"] = v.witness;
    out["status"] = to_string(v.status);
    if (!v.relation.empty())
        out["relation"] = v.relation;
    if (v.known_exception)
        out["known_exception"] = true;
    return out;
}

auto analysis_json(const Graph &g) -> Json
{
    Json out;
    out["record"] = to_json(analyze_graph(g));
    out["structure"] = to_json(analyze_structure(g));
    const auto chord = chordality(g);
    out["chordality"] = chord.chordal ? Json{{"chordal", true}, {"elimination_order", chord.elimination_order}}
                                      : Json{{"chordal", false}, {"induced_cycle", chord.induced_cycle}};
    const auto lines = line_partition(g);
    Json classes = Json::array();
    for (std::size_t c = 0; c < lines.classes.size(); ++c) {
        Json pairs = Json::array();
        for (int x = 0; x < g.order(); ++x)
            for (int y = x + 1; y < g.order(); ++y)
                if (lines.class_of(x, y) == static_cast<int>(c))
                    pairs.push_back({x, y});
        classes.push_back({{"id", c},
                           {"members", vertex_list(lines.classes[c].members)},
                           {"universal", is_universal_line(lines.classes[c], g)},
                           {"pairs", pairs}});
    }
    out["lines"] = classes;
    return out;
}

auto render_dot(const Graph &g, const std::string &title) -> std::string
{
    const auto lines = line_partition(g);
    const int n = g.order();
    std::ostringstream out;
    out << "graph lines {\n";
    out << "  label=\"" << title << ": n=" << n << ", lines=" << lines.classes.size() << "\";\n";
    out << "  node [shape=circle, fontsize=10];\n";

    out << "  subgraph cluster_graph {\n    label=\"graph\";\n";
    for (int v = 0; v < n; ++v)
        out << "    g" << v << " [label=\"" << v << "\"];\n";
    for (auto e : g.edges())
        out << "    g" << e.u << " -- g" << e.v << ";\n";
    out << "  }\n";

    out << "  subgraph cluster_lines {\n    label=\"pairs coloured by line\";\n";
    for (int v = 0; v < n; ++v)
        out << "    k" << v << " [label=\"" << v << "\"];\n";
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const int c = lines.class_of(x, y);
            out << "    k" << x << " -- k" << y << " [color=\"" << class_colour(c) << "\", style=" << class_style(c)
                << ", penwidth=2];\n";
        }
    out << "  }\n";

    out << "  legend [shape=plaintext, label=<<table border=\"0\" cellspacing=\"2\">";
    for (std::size_t c = 0; c < lines.classes.size(); ++c) {
        const auto id = static_cast<int>(c);
        out << "<tr><td bgcolor=\"" << class_colour(id) << "\">" << c << "</td><td align=\"left\">"
            << set_label(lines.classes[c].members) << (is_universal_line(lines.classes[c], g) ? " universal" : "")
            << (class_style(id) != "solid" ? " (" + class_style(id) + ")" : "") << "</td></tr>";
    }
    out << "</table>>];\n";
    out << "}\n";
    return out.str();
}

void write_catalog(std::ostream &out, CatalogFormat format)
{
    for (const auto &e : catalog()) {
        const Graph &g = e.graph;
        const auto lines = line_partition(g);
        std::ostringstream stats;
        stats << "name=" << e.name << " label=" << e.label << " n=" << g.order() << " m=" << g.size()
              << " ell=" << lines.classes.size() << " br=" << bridge_count(g) << " ul=" << ul(g, lines);
        if (e.expected.ell)
            stats << " expected_ell=" << *e.expected.ell << " ("
                  << (e.expected.ell_provenance == Provenance::published ? "published" : "derived") << ")";
        stats << " violates=" << (e.expected.violates_bound ? "yes" : "no");
        stats << " source=\"" << e.source << "\"";
        if (format == CatalogFormat::graph6) {
            out << ">> " << stats.str() << '\n' << to_graph6(g) << '\n';
        } else {
            out << "# " << stats.str() << '\n';
            write_edge_list(out, {e.name, g});
            out << '\n';
        }
    }
}

} // namespace graphlines
