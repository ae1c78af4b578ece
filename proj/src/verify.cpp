#include "graphlines/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "graphlines/canonical.hpp"
#include "graphlines/catalog.hpp"
#include "graphlines/graph6.hpp"
#include "graphlines/lines.hpp"
#include "graphlines/metric.hpp"
#include "graphlines/search.hpp"
#include "graphlines/structure.hpp"

namespace graphlines {

namespace {

void require_connected(const Graph &g, const char *what)
{
    if (g.order() < 2)
        throw std::domain_error(std::string(what) + ": needs at least two vertices");
    if (!is_connected(g))
        throw std::domain_error(std::string(what) + ": graph must be connected");
}

auto compare(std::string claim, const Graph &g, long long lhs, const char *relation, long long rhs) -> Verdict
{
    Verdict v;
    v.claim_id = std::move(claim);
    v.graph6 = to_graph6(g);
    v.lhs = lhs;
    v.rhs = rhs;
    v.relation = relation;
    const bool ok = std::string_view(relation) == ">=" ? lhs >= rhs : lhs == rhs;
    v.status = ok ? Status::holds : Status::fails;
    return v;
}

/// Aggregate verdict: lhs counts failing instances.
struct Tally {
    long long failures = 0;
    std::string first;

    void fail(const std::string &what)
    {
        if (failures++ == 0)
            first = what;
    }

    auto verdict(std::string claim, const Graph &g, const std::string &context = {}) const -> Verdict
    {
        Verdict v = compare(std::move(claim), g, failures, "==", 0);
        v.witness = failures ? first : context;
        return v;
    }
};

auto set_string(VertexSet s) -> std::string
{
    std::string out = "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    });
    return out + "}";
}

auto not_applicable(std::string claim, const Graph &g, std::string why) -> Verdict
{
    Verdict v;
    v.claim_id = std::move(claim);
    v.graph6 = to_graph6(g);
    v.status = Status::not_applicable;
    v.witness = std::move(why);
    return v;
}

auto is_exceptional(const std::string &label) -> bool
{
    return label.rfind("F:", 0) == 0;
}

/// Maps a vertex set of an induced subgraph back to the parent graph.
auto lift(VertexSet s, const std::vector<int> &original) -> VertexSet
{
    VertexSet out = 0;
    for_each_vertex(s, [&](int v) { out |= bit(original[v]); });
    return out;
}

struct Deduplicator {
    std::set<std::string> seen;

    /// True the first time an isomorphism class is offered.
    auto fresh(const Graph &g) -> bool { return seen.insert(canonical_form(g)).second; }
};

auto exceptional_without_c4() -> std::vector<const CatalogEntry *>
{
    std::vector<const CatalogEntry *> result;
    for (const auto &e : catalog())
        if (e.family == Family::exceptional && e.name != "C4")
            result.push_back(&e);
    return result;
}

} // namespace

auto to_string(Status s) -> std::string
{
    switch (s) {
    case Status::holds:
        return "holds";
    case Status::fails:
        return "fails";
    case Status::not_applicable:
        return "n.a.";
    }
    return "?";
}

auto SuiteReport::count(Status s) const -> int
{
    return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [&](const Verdict &v) { return v.status == s; }));
}

auto SuiteReport::unexpected_failures() const -> int
{
    return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict &v) { return v.fails() && !v.known_exception; }));
}

void SuiteReport::append(const SuiteReport &other)
{
    verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
    generated += other.generated;
    duplicates += other.duplicates;
    skipped += other.skipped;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

auto verify_main_theorem(const Graph &g) -> Verdict
{
    require_connected(g, "verify_main_theorem");
    const std::string family = classify_family(g);
    if (is_exceptional(family))
        return not_applicable("theorem.main", g, "graph is " + family);
    if (auto w = class_C_violation(g))
        return not_applicable("theorem.main", g, "not in C, witness " + set_string(*w));
    return compare("theorem.main", g, ell(g) + bridge_count(g), ">=", g.order());
}

auto verify_conjecture_pendant(const Graph &g) -> Verdict
{
    require_connected(g, "verify_conjecture_pendant");
    const int lhs = ell(g) + bridge_count(g);
    Verdict v = compare("conjecture.pendant", g, lhs, ">=", g.order());
    if (!pendant_edges(g).empty()) {
        v.status = Status::holds;
        v.witness = "has a pendant edge";
    } else if (v.fails()) {
        const std::string family = classify_family(g);
        v.known_exception = family != "none";
        v.witness = v.known_exception ? "catalogued exception " + family : "no pendant edge";
    }
    return v;
}

auto verify_conjecture_ul(const Graph &g) -> Verdict
{
    require_connected(g, "verify_conjecture_ul");
    const auto lines = line_partition(g);
    return compare("conjecture.ul", g, static_cast<long long>(lines.classes.size()) + ul(g, lines), ">=", g.order());
}

auto verify_chen_chvatal(const Graph &g) -> Verdict
{
    require_connected(g, "verify_chen_chvatal");
    const auto lines = line_partition(g);
    Verdict v = compare("conjecture.chen_chvatal", g, static_cast<long long>(lines.classes.size()), ">=", g.order());
    if (ul(g, lines) > 0) {
        v.status = Status::holds;
        v.witness = "has a universal line";
    }
    return v;
}

auto claim_cutvertex_bound(const Graph &g, int u) -> Verdict
{
    require_connected(g, "claim_cutvertex_bound");
    if (u < 0 || u >= g.order() || !contains(cut_vertices(g), u))
        throw std::domain_error("claim_cutvertex_bound: vertex is not a cut vertex");
    if (bridge_count(g) != 0)
        throw std::domain_error("claim_cutvertex_bound: graph must be bridgeless");
    const VertexSet rest = g.vertices() & ~bit(u);
    const VertexSet c1 = component_of(g, lowest(rest), rest);
    const VertexSet c2 = rest & ~c1;
    const Graph g1 = induced_subgraph(g, c1 | bit(u)).graph;
    const Graph g2 = induced_subgraph(g, c2 | bit(u)).graph;
    const long long n1 = count(g.neighbours(u) & c1), n2 = count(g.neighbours(u) & c2);
    const long long l1 = ell(g1), l2 = ell(g2);
    Verdict v = compare("claim.cutvertex_bound", g, ell(g), ">=", l1 + l2 - 1 + n1 * n2);
    v.witness = "u=" + std::to_string(u) + " l(G1)=" + std::to_string(l1) + " l(G2)=" + std::to_string(l2) +
                " |N1(u)|=" + std::to_string(n1) + " |N2(u)|=" + std::to_string(n2);
    return v;
}

auto cut_vertex_line_structure(const Graph &g, int u) -> Verdict
{
    require_connected(g, "cut_vertex_line_structure");
    if (u < 0 || u >= g.order() || !contains(cut_vertices(g), u))
        throw std::domain_error("cut_vertex_line_structure: vertex is not a cut vertex");
    const VertexSet rest = g.vertices() & ~bit(u);
    const VertexSet c1 = component_of(g, lowest(rest), rest);
    const VertexSet sides[2] = {c1, rest & ~c1};
    const auto d = apsp(g);
    const auto lines = line_partition(g, d);
    Tally tally;
    for (int i = 0; i < 2; ++i) {
        const auto part = induced_subgraph(g, sides[i] | bit(u));
        const auto part_lines = line_partition(part.graph);
        const int k = part.graph.order();
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                const int x = part.original[a], y = part.original[b];
                const bool through = x == u || y == u || between(d, x, y, u) || between(d, y, x, u);
                VertexSet expected = lift(part_lines.line_of(a, b).members, part.original);
                if (through)
                    expected |= sides[1 - i];
                const VertexSet actual = lines.line_of(x, y).members;
                if (actual != expected)
                    tally.fail("pair (" + std::to_string(x) + "," + std::to_string(y) + "): line " + set_string(actual) +
                               " expected " + set_string(expected));
            }
    }
    return tally.verdict("claim.cutvertex_lines", g, "u=" + std::to_string(u));
}

auto bridge_contraction_check(const Graph &g, Edge e) -> Verdict
{
    require_connected(g, "bridge_contraction_check");
    const auto all_bridges = bridges(g);
    if (std::find(all_bridges.begin(), all_bridges.end(), e) == all_bridges.end())
        throw std::domain_error("bridge_contraction_check: edge is not a bridge");

    const int u1 = e.u, u2 = e.v;
    Graph cut = g;
    cut.remove_edge(u1, u2);
    const VertexSet side1 = component_of(cut, u1);
    const VertexSet side2 = g.vertices() & ~side1;
    const Graph contracted = contract_edge(g, e);
    const int u = contracted_index(e, u1);
    if (contracted.order() < 2) {
        // G = K2: G' is a single vertex with no lines and no bridges.
        Tally tally;
        if (all_bridges.size() != 1)
            tally.fail("br(G)=" + std::to_string(all_bridges.size()) + " != br(G')+1=1");
        return tally.verdict("claim.bridge_contraction", g, "bridge 0-1 l(G)=1 l(G')=0");
    }

    std::vector<int> original(static_cast<std::size_t>(contracted.order()), -1);
    for (int w = 0; w < g.order(); ++w)
        if (w != u1 && w != u2)
            original[contracted_index(e, w)] = w;
    auto back = [&](VertexSet s) {
        VertexSet out = 0;
        for_each_vertex(s & ~bit(u), [&](int i) { out |= bit(original[i]); });
        return out;
    };

    const auto d = apsp(g);
    const auto lines = line_partition(g, d);
    const auto dc = apsp(contracted);
    const auto lines_c = line_partition(contracted, dc);
    const long long ell_g = static_cast<long long>(lines.classes.size());
    const long long ell_c = static_cast<long long>(lines_c.classes.size());
    const int br_g = static_cast<int>(all_bridges.size()), br_c = bridge_count(contracted);

    Tally tally;
    if (ell_g < ell_c)
        tally.fail("l(G)=" + std::to_string(ell_g) + " < l(G')=" + std::to_string(ell_c));
    if (br_g != br_c + 1)
        tally.fail("br(G)=" + std::to_string(br_g) + " != br(G')+1=" + std::to_string(br_c + 1));

    const int m = contracted.order();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (i == u || j == u)
                continue;
            const int x = original[i], y = original[j];
            const VertexSet lc = lines_c.line_of(i, j).members;
            VertexSet expected = back(lc);
            if (contains(lc, u)) {
                const bool same1 = contains(side1, x) && contains(side1, y);
                const bool same2 = contains(side2, x) && contains(side2, y);
                if ((same1 || same2) && between(dc, i, u, j))
                    expected |= bit(same1 ? u1 : u2);
                else
                    expected |= bit(u1) | bit(u2);
            }
            const VertexSet actual = lines.line_of(x, y).members;
            if (actual != expected)
                tally.fail("pair (" + std::to_string(x) + "," + std::to_string(y) + "): line " + set_string(actual) +
                           " expected " + set_string(expected));
        }
    for (int i = 0; i < m; ++i) {
        if (i == u)
            continue;
        // The identity needs the bridge end on x's side: seen from the far end,
        // vertices w with [w u_i x] drop out of the line.
        const int x = original[i];
        const int near = contains(side1, x) ? u1 : u2;
        const VertexSet lhs = back(lines_c.line_of(u, i).members);
        const VertexSet rhs = lines.line_of(near, x).members & ~(bit(u1) | bit(u2));
        if (lhs != rhs)
            tally.fail("pair (u," + std::to_string(x) + "): " + set_string(lhs) + " vs " + set_string(rhs));
    }
    return tally.verdict("claim.bridge_contraction", g,
                         "bridge " + std::to_string(u1) + "-" + std::to_string(u2) + " l(G)=" + std::to_string(ell_g) +
                             " l(G')=" + std::to_string(ell_c));
}

auto chordal_line_lemma_check(const Graph &g) -> Verdict
{
    require_connected(g, "chordal_line_lemma_check");
    if (!is_chordal(g))
        throw std::domain_error("chordal_line_lemma_check: graph is not chordal");
    const auto d = apsp(g);
    const auto lines = line_partition(g, d);
    const VertexSet cut = cut_vertices(g);
    const int n = g.order();
    Tally tally;
    for (int s = 0; s < n; ++s)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (s == x || x == y || s == y || !between(d, s, x, y))
                    continue;
                if (lines.class_of(s, x) == lines.class_of(s, y) && !contains(cut, x))
                    tally.fail("[" + std::to_string(s) + " " + std::to_string(x) + " " + std::to_string(y) +
                               "] with equal lines but " + std::to_string(x) + " is not a cut vertex");
            }
    return tally.verdict("lemma.chordal_lines", g);
}

auto diam2_lemma_check(const Graph &g) -> Verdict
{
    require_connected(g, "diam2_lemma_check");
    const auto d = apsp(g);
    if (diameter(d) != 2)
        throw std::domain_error("diam2_lemma_check: diameter is not 2");
    const auto lines = line_partition(g, d);
    const int n = g.order();
    Tally tally;
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (a == x || b == x || lines.class_of(x, a) != lines.class_of(x, b))
                    continue;
                const bool false_twins = !g.adjacent(a, b) && (g.neighbours(a) == g.neighbours(b));
                const bool ok = (false_twins && d(x, a) == 1 && d(x, b) == 1) || d(x, a) != d(x, b);
                if (!ok)
                    tally.fail("x=" + std::to_string(x) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
            }
    return tally.verdict("lemma.diameter_two", g);
}

auto module_line_formula_check(const Graph &g, VertexSet module) -> Verdict
{
    require_connected(g, "module_line_formula_check");
    if (count(module) < 2 || module == g.vertices() || (module & ~g.vertices()) || !is_module(g, module) ||
        !is_dominating(g, module))
        throw std::domain_error("module_line_formula_check: not a non-trivial dominating module");
    const auto lines = line_partition(g);
    const VertexSet outside = neighbourhood(g, module);
    Tally tally;
    for_each_vertex(module, [&](int u) {
        for_each_vertex(outside, [&](int v) {
            const VertexSet expected = (module & ~g.neighbours(u)) | (outside & ~g.neighbours(v));
            const VertexSet actual = lines.line_of(u, v).members;
            if (actual != expected)
                tally.fail("u=" + std::to_string(u) + " v=" + std::to_string(v) + ": " + set_string(actual) + " vs " +
                           set_string(expected));
        });
    });
    return tally.verdict("formula.module_line", g, "M=" + set_string(module));
}

auto simplicial_lines_check(const Graph &g, int s) -> Verdict
{
    if (!is_two_connected(g) || !is_chordal(g))
        throw std::domain_error("simplicial_lines_check: graph must be 2-connected and chordal");
    if (s < 0 || s >= g.order() || !contains(simplicial_vertices(g), s))
        throw std::domain_error("simplicial_lines_check: vertex is not simplicial");
    const auto lines = line_partition(g);
    std::set<int> through_s;
    for (int u = 0; u < g.order(); ++u)
        if (u != s)
            through_s.insert(lines.class_of(s, u));
    Tally tally;
    if (static_cast<int>(through_s.size()) != g.order() - 1)
        tally.fail(std::to_string(through_s.size()) + " distinct lines through " + std::to_string(s) + ", expected " +
                   std::to_string(g.order() - 1));
    const VertexSet nbrs = g.neighbours(s);
    const int a = lowest(nbrs);
    const int b = lowest(nbrs & ~bit(a));
    if (contains(lines.line_of(a, b).members, s))
        tally.fail(std::to_string(s) + " lies on the line of its neighbours " + std::to_string(a) + "," + std::to_string(b));
    return tally.verdict("claim.simplicial_lines", g, "s=" + std::to_string(s));
}

auto dirac_check(const Graph &g) -> Verdict
{
    if (g.order() < 2 || !is_chordal(g))
        return not_applicable("theorem.dirac", g, "not a chordal graph on >= 2 vertices");
    return compare("theorem.dirac", g, count(simplicial_vertices(g)), ">=", 2);
}

auto class_C_heredity_check(const Graph &g) -> Verdict
{
    if (!in_class_C(g))
        return not_applicable("class_C.hereditary", g, "graph is not in C");
    Tally tally;
    for (int v = 0; v < g.order(); ++v)
        if (!in_class_C(remove_vertex(g, v)))
            tally.fail("G - " + std::to_string(v) + " is not in C");
    return tally.verdict("class_C.hereditary", g);
}

auto lemma31_suite() -> SuiteReport
{
    SuiteReport report;
    report.suite = "lemma31";
    for (const auto &e : catalog()) {
        if (e.family != Family::exceptional)
            continue;
        const int expected = e.name == "C4" ? 1 : e.name == "K6'" ? 4 : e.graph.order() - 1;
        Verdict v = compare("lemma31." + e.name, e.graph, ell(e.graph), "==", expected);
        v.witness = e.name;
        report.verdicts.push_back(std::move(v));
    }
    report.generated = static_cast<int>(report.verdicts.size());
    return report;
}

auto lemma32_pendant_suite() -> SuiteReport
{
    SuiteReport report;
    report.suite = "lemma32.pendant";
    Deduplicator dedup;
    for (const CatalogEntry *h : exceptional_without_c4()) {
        const int ell_h = ell(h->graph);
        for (int u = 0; u < h->graph.order(); ++u) {
            ++report.generated;
            const Graph g = add_vertex(h->graph, bit(u));
            if (!dedup.fresh(g)) {
                ++report.duplicates;
                continue;
            }
            const std::string context = h->name + " + pendant at " + std::to_string(u);
            if (is_exceptional(classify_family(g)) || !in_class_C(g)) {
                ++report.skipped;
                report.notes.push_back("skipped " + context);
                continue;
            }
            const int ell_g = ell(g);
            Verdict bound = compare("lemma32.pendant.bound", g, ell_g + bridge_count(g), ">=", g.order());
            bound.witness = context;
            Verdict fresh = compare("lemma32.pendant.new_lines", g, ell_g, ">=", ell_h + 2);
            fresh.witness = context;
            report.verdicts.push_back(std::move(bound));
            report.verdicts.push_back(std::move(fresh));
        }
    }
    return report;
}

auto lemma32_twin_suite() -> SuiteReport
{
    SuiteReport report;
    report.suite = "lemma32.twin";
    Deduplicator dedup;
    for (const CatalogEntry *h : exceptional_without_c4())
        for (int v = 0; v < h->graph.order(); ++v)
            for (TwinKind kind : {TwinKind::true_twins, TwinKind::false_twins}) {
                ++report.generated;
                const bool adjacent = kind == TwinKind::true_twins;
                const Graph g = add_vertex(h->graph, h->graph.neighbours(v) | (adjacent ? bit(v) : 0));
                if (!dedup.fresh(g)) {
                    ++report.duplicates;
                    continue;
                }
                const std::string context = h->name + " + " + (adjacent ? "true" : "false") + " twin of " + std::to_string(v);
                const std::string family = classify_family(g);
                if (is_exceptional(family) || !in_class_C(g)) {
                    ++report.skipped;
                    report.notes.push_back("skipped " + context + (family != "none" ? " (is " + family + ")" : ""));
                    continue;
                }
                Verdict verdict = compare("lemma32.twin", g, ell(g), ">=", g.order() + 1);
                verdict.witness = context;
                report.verdicts.push_back(std::move(verdict));
            }
    return report;
}

auto lemma32_module_scan() -> SuiteReport
{
    SuiteReport report;
    report.suite = "lemma32.module_literal";
    Deduplicator dedup;
    int gaps = 0;
    for (const CatalogEntry *h : exceptional_without_c4()) {
        const Graph &base = h->graph;
        const int v = base.order();
        for (VertexSet nbrs = 1; nbrs <= base.vertices(); ++nbrs) {
            ++report.generated;
            const Graph g = add_vertex(base, nbrs);
            bool in_module = false;
            for (int w = 0; w < v && !in_module; ++w)
                in_module = module_closure(g, bit(v) | bit(w)) != g.vertices();
            if (!in_module) {
                ++report.skipped;
                continue;
            }
            if (!dedup.fresh(g)) {
                ++report.duplicates;
                continue;
            }
            if (is_exceptional(classify_family(g)) || !in_class_C(g)) {
                ++report.skipped;
                continue;
            }
            bool twin_extension = false;
            for (const auto &t : twin_pairs(g))
                twin_extension = twin_extension || t.v == v;
            Verdict verdict = compare("lemma32.module_literal", g, ell(g), ">=", g.order() + 1);
            verdict.witness = h->name + " + vertex adjacent to " + set_string(nbrs) + (twin_extension ? "" : " (not a twin extension)");
            gaps += !twin_extension;
            report.verdicts.push_back(std::move(verdict));
        }
    }
    report.notes.push_back(std::to_string(gaps) + " module extensions are not twin extensions");
    return report;
}

auto universal_line_suite(int nmax) -> SuiteReport
{
    SuiteReport report;
    report.suite = "universal";
    for (const auto &e : catalog()) {
        if (e.family != Family::exceptional)
            continue;
        Verdict v = compare("universal.exceptional_has_universal_line", e.graph, ul(e.graph) > 0 ? 1 : 0, "==", 1);
        v.witness = e.name;
        report.verdicts.push_back(std::move(v));
    }
    for (int n = 2; n <= nmax; ++n)
        for (const Graph &g : enumerate_connected(n)) {
            const auto lines = line_partition(g);
            const auto bs = bridges(g);
            Tally bridge_tally;
            for (auto e : bs)
                if (!is_universal_line(lines.line_of(e.u, e.v), g))
                    bridge_tally.fail("bridge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " line is not universal");
            report.verdicts.push_back(bridge_tally.verdict("universal.bridge_line", g));
            const int universal_pairs = ul(g, lines);
            if (!bs.empty())
                report.verdicts.push_back(compare("universal.ul_at_least_br", g, universal_pairs, ">=", static_cast<long long>(bs.size())));
            if (lines.classes.size() == 1)
                report.verdicts.push_back(compare("universal.single_line_is_universal", g,
                                                  is_universal_line(lines.classes.front(), g) ? 1 : 0, "==", 1));
        }
    return report;
}

namespace {

auto random_bridgeless(std::mt19937_64 &rng, int n) -> Graph
{
    std::bernoulli_distribution edge(0.55);
    for (;;) {
        Graph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (edge(rng))
                    g.add_edge(a, b);
        if (is_connected(g) && bridge_count(g) == 0)
            return g;
    }
}

} // namespace

auto claims_suite(int nmax, std::uint64_t seed, int random_gluings) -> SuiteReport
{
    SuiteReport report;
    report.suite = "claims";
    report.seed = seed;
    for (int n = 2; n <= nmax; ++n)
        for (const Graph &g : enumerate_connected(n)) {
            ++report.generated;
            const auto bs = bridges(g);
            for (auto e : bs)
                report.verdicts.push_back(bridge_contraction_check(g, e));

            const VertexSet cut = cut_vertices(g);
            for_each_vertex(cut, [&](int u) {
                report.verdicts.push_back(cut_vertex_line_structure(g, u));
                if (bs.empty())
                    report.verdicts.push_back(claim_cutvertex_bound(g, u));
            });

            const auto chordal = is_chordal(g);
            if (chordal) {
                report.verdicts.push_back(chordal_line_lemma_check(g));
                report.verdicts.push_back(dirac_check(g));
                if (is_two_connected(g))
                    for_each_vertex(simplicial_vertices(g), [&](int s) { report.verdicts.push_back(simplicial_lines_check(g, s)); });
            }
            if (diameter(apsp(g)) == 2)
                report.verdicts.push_back(diam2_lemma_check(g));
            for (VertexSet m : nontrivial_modules(g))
                if (is_dominating(g, m))
                    report.verdicts.push_back(module_line_formula_check(g, m));
            report.verdicts.push_back(class_C_heredity_check(g));
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> part_size(3, 6);
    for (int k = 0; k < random_gluings; ++k) {
        int n1 = part_size(rng), n2 = part_size(rng);
        while (n1 + n2 - 1 > 10)
            n2 = part_size(rng);
        const Graph a = random_bridgeless(rng, n1), b = random_bridgeless(rng, n2);
        const int va = std::uniform_int_distribution<int>(0, n1 - 1)(rng);
        const int vb = std::uniform_int_distribution<int>(0, n2 - 1)(rng);
        const Graph g = glue_at_vertex(a, va, b, vb);
        ++report.generated;
        Verdict bound = claim_cutvertex_bound(g, va);
        bound.claim_id = "claim.cutvertex_bound.random";
        report.verdicts.push_back(std::move(bound));
        Verdict lines = cut_vertex_line_structure(g, va);
        lines.claim_id = "claim.cutvertex_lines.random";
        report.verdicts.push_back(std::move(lines));
    }
    report.notes.push_back("random gluings: " + std::to_string(random_gluings) + ", seed " + std::to_string(seed));
    return report;
}

auto conjectures_suite(int nmax, ConjectureSet which) -> SuiteReport
{
    SuiteReport report;
    report.suite = "conjectures";
    auto wants = [&](ConjectureSet s) { return which == ConjectureSet::all || which == s; };
    for (int n = 2; n <= nmax; ++n)
        for (const Graph &g : enumerate_connected(n)) {
            ++report.generated;
            if (wants(ConjectureSet::main))
                report.verdicts.push_back(verify_main_theorem(g));
            if (wants(ConjectureSet::pendant))
                report.verdicts.push_back(verify_conjecture_pendant(g));
            if (wants(ConjectureSet::ul))
                report.verdicts.push_back(verify_conjecture_ul(g));
            if (wants(ConjectureSet::chen_chvatal))
                report.verdicts.push_back(verify_chen_chvatal(g));
        }
    return report;
}

} // namespace graphlines
