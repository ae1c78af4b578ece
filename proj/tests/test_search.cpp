#include <doctest.h>

#include <set>
#include <sstream>

#include "graphlines/canonical.hpp"
#include "graphlines/catalog.hpp"
#include "graphlines/errors.hpp"
#include "graphlines/graph6.hpp"
#include "graphlines/report.hpp"
#include "graphlines/search.hpp"
#include "graphlines/structure.hpp"
#include "oracles.hpp"

using namespace graphlines;

namespace {

auto families(const std::vector<AnalysisRecord> &rs) -> std::multiset<std::string>
{
    std::multiset<std::string> out;
    for (const auto &r : rs)
        out.insert(r.family);
    return out;
}

auto scan_text(const std::string &text, int jobs) -> std::vector<ScanItem>
{
    std::istringstream in(text);
    std::vector<ScanItem> items;
    scan_stream(in, ScanFilters{}, jobs, [&](const ScanItem &i) { items.push_back(i); });
    return items;
}

} // namespace

TEST_CASE("enumeration counts")
{
    const std::vector<std::size_t> expected = {1, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(enumerate_connected(n).size() == expected[n]);
    CHECK_THROWS_AS(enumerate_connected(8), CapabilityError);
    CHECK_THROWS_AS(enumerate_connected(0), std::domain_error);
}

TEST_CASE("enumeration matches brute-force isomorphism classes for n <= 5")
{
    for (int n = 1; n <= 5; ++n) {
        const auto &mine = enumerate_connected(n);
        const auto brute = oracle::connected_classes(n);
        REQUIRE(mine.size() == brute.size());
        for (const Graph &b : brute) {
            int matches = 0;
            for (const Graph &g : mine)
                matches += oracle::isomorphic(g, b);
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("enumeration: connected, pairwise non-isomorphic, catalog covered")
{
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> keys;
        for (const Graph &g : enumerate_connected(n)) {
            CHECK(g.order() == n);
            CHECK(is_connected(g));
            CHECK(keys.insert(canonical_form(g)).second);
        }
        for (const auto &e : catalog())
            if (e.graph.order() == n)
                CHECK(keys.count(canonical_form(e.graph)) == 1);
    }
}

TEST_CASE("analysis record fields")
{
    const AnalysisRecord c4 = analyze_graph(cycle_graph(4));
    CHECK(c4.n == 4);
    CHECK(c4.m == 4);
    CHECK(c4.ell == 1);
    CHECK(c4.br == 0);
    CHECK(c4.ul == 6);
    CHECK_FALSE(c4.pendant);
    CHECK(c4.in_C);
    CHECK(c4.family == "F:C4");
    CHECK(c4.main_ok == Tri::not_applicable);
    CHECK(c4.conj2_ok == Tri::fails);
    CHECK(c4.conj3_ok == Tri::holds);
    CHECK(c4.graph6 == canonical_form(cycle_graph(4)));

    const AnalysisRecord b7 = analyze_graph(catalog_entry("B7").graph);
    CHECK(b7.br == 1);
    CHECK(b7.pendant);
    CHECK(b7.ell + b7.br < b7.n);
    CHECK_FALSE(b7.in_C);
    CHECK(b7.main_ok == Tri::not_applicable);
    CHECK(violates(b7, Inequality::main));

    const AnalysisRecord k3 = analyze_graph(complete_graph(3));
    CHECK(k3.ell == 3);
    CHECK(k3.main_ok == Tri::holds);

    const AnalysisRecord split = analyze_graph(from_edge_list(4, {{0, 1}, {2, 3}}));
    CHECK(split.main_ok == Tri::not_applicable);
    CHECK(split.conj3_ok == Tri::not_applicable);
    CHECK_THROWS_AS(analyze_graph(Graph(1)), std::domain_error);

    CHECK(tri_symbol(Tri::holds) == '1');
    CHECK(tri_symbol(Tri::fails) == '0');
    CHECK(tri_symbol(Tri::not_applicable) == '-');
}

TEST_CASE("record invariants over n <= 6")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto &r : scan(enumerate_connected(n), ScanFilters{})) {
            const bool na = r.family.rfind("F:", 0) == 0 || !r.in_C;
            CHECK((r.main_ok == Tri::not_applicable) == na);
            CHECK(r.conj3_ok != Tri::not_applicable);
        }
}

TEST_CASE("scan examples")
{
    const auto four = scan(enumerate_connected(4), ScanFilters{});
    REQUIRE(four.size() == 6);
    int c4s = 0;
    for (const auto &r : four)
        if (r.family == "F:C4") {
            ++c4s;
            CHECK(r.main_ok == Tri::not_applicable);
        }
    CHECK(c4s == 1);

    std::vector<Graph> cat;
    for (const auto &e : catalog())
        cat.push_back(e.graph);
    const auto recs = scan(cat, ScanFilters{});
    REQUIRE(recs.size() == 15);
    for (std::size_t i = 0; i < recs.size(); ++i)
        CHECK(recs[i].family == catalog()[i].label);

    CHECK(scan(std::vector<Graph>{}, ScanFilters{}).empty());

    ScanFilters small;
    small.max_order = 5;
    std::size_t small_catalog = 0;
    for (const auto &e : catalog())
        small_catalog += e.graph.order() <= 5;
    CHECK(scan(cat, small).size() == small_catalog);
    const std::vector<Graph> mixed = {from_edge_list(4, {{0, 1}, {2, 3}}), cycle_graph(4)};
    CHECK(scan(mixed, ScanFilters{}).size() == 1);
}

TEST_CASE("parallel scan equals sequential scan")
{
    const auto &g6 = enumerate_connected(6);
    const auto seq = scan(g6, ScanFilters{}, 1);
    const auto par = scan(g6, ScanFilters{}, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
        CHECK(to_csv(seq[i]) == to_csv(par[i]));

    std::string text = ">> header\n";
    for (const Graph &g : enumerate_connected(7))
        text += to_graph6(g) + "\n";
    const auto a = scan_text(text, 1), b = scan_text(text, 3);
    REQUIRE(a.size() == 853);
    REQUIRE(b.size() == 853);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].index == i);
        CHECK(b[i].index == i);
        CHECK(a[i].line == i + 2);
        CHECK(to_csv(*a[i].record) == to_csv(*b[i].record));
    }
}

TEST_CASE("scan_stream error records")
{
    const auto items = scan_text("C~\nnot graph6\n\n>> comment\nC?\nD]w\n", 2);
    REQUIRE(items.size() == 3);
    CHECK(items[0].record.has_value());
    CHECK(items[0].line == 1);
    CHECK_FALSE(items[1].record.has_value());
    CHECK(items[1].line == 2);
    CHECK_FALSE(items[1].error.empty());
    // Line 5 is disconnected and filtered out.
    CHECK(items[2].line == 6);
    CHECK(items[2].record->family == classify_family(parse_graph6("D]w")));
    CHECK(scan_text("", 1).empty());
}

TEST_CASE("inequality names")
{
    CHECK(parse_inequality("main") == Inequality::main);
    CHECK(parse_inequality("conj2") == Inequality::conj2);
    CHECK(parse_inequality("conj3") == Inequality::conj3);
    CHECK_FALSE(parse_inequality("conj4").has_value());
    CHECK(to_string(Inequality::conj2) == "conj2");
}

TEST_CASE("counterexample search")
{
    const auto main5 = find_counterexamples(5, Inequality::main);
    CHECK(families(main5) == std::multiset<std::string>{"F:C4", "F:K23", "F:W4'", "F:W4", "F0:H5"});

    const auto conj2 = find_counterexamples(7, Inequality::conj2);
    CHECK(families(conj2) ==
          std::multiset<std::string>{"F:C4", "F:K23", "F:W4'", "F:W4", "F:K6'", "F0:H5", "F0:H6_1", "F0:H6_2"});

    CHECK(find_counterexamples(7, Inequality::conj3).empty());
    CHECK(find_counterexamples(4, Inequality::conj3).empty());

    const auto main7 = find_counterexamples(7, Inequality::main);
    std::set<std::string> keys;
    for (const auto &r : main7) {
        keys.insert(r.graph6);
        CHECK(r.ell + r.br < r.n);
    }
    for (const auto &e : catalog())
        if (e.graph.order() <= 7)
            CHECK(keys.count(canonical_form(e.graph)) == (e.expected.violates_bound ? 1u : 0u));
    // One bridged violator outside the catalog: B6a with its bridge subdivided.
    Graph sub = add_vertex(catalog_entry("H5").graph, bit(4));
    sub = add_vertex(sub, bit(5));
    CHECK(keys.count(canonical_form(sub)) == 1);
    CHECK(main7.size() == 11);

    CHECK_THROWS_AS(find_counterexamples(8, Inequality::main), CapabilityError);
}

TEST_CASE("CSV and JSON records")
{
    CHECK(csv_header() == "graph6,n,m,ell,br,ul,pendant,in_C,family,main_ok,conj2_ok,conj3_ok");
    const AnalysisRecord r = analyze_graph(cycle_graph(4));
    CHECK(to_csv(r) == r.graph6 + ",4,4,1,0,6,0,1,F:C4,-,0,1");
    const Json j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"graph6", "n", "m", "ell", "br", "ul", "pendant", "in_C", "family",
                                           "main_ok", "conj2_ok", "conj3_ok"});
    CHECK(j["main_ok"].is_null());
    CHECK(j["conj2_ok"] == false);
}
