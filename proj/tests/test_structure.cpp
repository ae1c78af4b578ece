#include <doctest.h>

#include <random>

#include "graphlines/canonical.hpp"
#include "graphlines/catalog.hpp"
#include "graphlines/errors.hpp"
#include "graphlines/search.hpp"
#include "graphlines/structure.hpp"
#include "oracles.hpp"

using namespace graphlines;

namespace {

auto random_graph(std::mt19937_64 &rng, int n, double p) -> Graph
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

auto k23() -> Graph { return catalog_entry("K23").graph; }

} // namespace

TEST_CASE("bridges examples")
{
    CHECK(bridges(path_graph(4)).size() == 3);
    CHECK(bridges(cycle_graph(4)).empty());
    CHECK(bridges(catalog_entry("B6a").graph) == std::vector<Edge>{{4, 5}});
    CHECK(bridge_count(star_graph(3)) == 3);
    CHECK(bridge_count(Graph(0)) == 0);
}

TEST_CASE("bridges and cut vertices match deletion oracles")
{
    std::mt19937_64 rng(47);
    for (int t = 0; t < 300; ++t) {
        const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.3);
        std::vector<std::pair<int, int>> got;
        for (Edge e : bridges(g))
            got.emplace_back(e.u, e.v);
        CHECK(got == oracle::bridges(g));

        const auto a = oracle::matrix(g);
        VertexSet cuts = 0;
        for (int v : oracle::cut_vertices(a, std::vector<bool>(a.size(), true)))
            cuts |= bit(v);
        CHECK(cut_vertices(g) == cuts);
    }
}

TEST_CASE("cut vertices and 2-connectivity examples")
{
    const Graph glued = glue_at_vertex(cycle_graph(4), 0, cycle_graph(4), 0);
    CHECK(cut_vertices(glued) == bit(0));
    CHECK(cut_vertices(cycle_graph(4)) == 0);
    CHECK(cut_vertices(path_graph(3)) == bit(1));

    CHECK(is_two_connected(cycle_graph(4)));
    CHECK_FALSE(is_two_connected(path_graph(3)));
    CHECK_FALSE(is_two_connected(complete_graph(2)));
    CHECK_FALSE(is_two_connected(from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
    for (const auto &e : catalog())
        if (e.family == Family::exceptional)
            CHECK(is_two_connected(e.graph));
}

TEST_CASE("pendant edges and simplicial vertices")
{
    CHECK(pendant_edges(catalog_entry("B6a").graph) == std::vector<Edge>{{4, 5}});
    CHECK(pendant_edges(cycle_graph(4)).empty());
    CHECK(pendant_edges(star_graph(3)).size() == 3);
    CHECK(pendant_edges(complete_graph(2)).size() == 1);

    CHECK(simplicial_vertices(complete_graph(4)) == 0b1111);
    CHECK(simplicial_vertices(path_graph(3)) == 0b101);
    CHECK(simplicial_vertices(cycle_graph(4)) == 0);
}

TEST_CASE("structure invariants")
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8), 0.4);
        const auto bs = bridges(g);
        for (Edge p : pendant_edges(g))
            CHECK(std::find(bs.begin(), bs.end(), p) != bs.end());
        if (is_connected(g) && g.order() >= 3)
            for (Edge e : bs) {
                if (g.degree(e.u) >= 2)
                    CHECK(contains(cut_vertices(g), e.u));
                if (g.degree(e.v) >= 2)
                    CHECK(contains(cut_vertices(g), e.v));
            }
        const auto rep = analyze_structure(g);
        CHECK(rep.br == static_cast<int>(rep.bridges.size()));
        if (rep.two_connected) {
            CHECK(rep.cut_vertices == 0);
            CHECK(is_connected(g));
            CHECK(g.order() >= 3);
        }
        CHECK(rep.prime == !rep.has_nontrivial_module);
    }
}

TEST_CASE("chordality with witnesses")
{
    CHECK(is_chordal(complete_graph(4)));
    const auto c4 = chordality(cycle_graph(4));
    CHECK_FALSE(c4.chordal);
    CHECK(c4.induced_cycle.size() == 4);

    const Graph h5 = catalog_entry("H5").graph;
    const auto r = chordality(h5);
    CHECK_FALSE(r.chordal);
    std::vector<int> cyc = r.induced_cycle;
    std::sort(cyc.begin(), cyc.end());
    CHECK(cyc == std::vector<int>{0, 1, 2, 3});

    CHECK(chordality(cycle_graph(7)).induced_cycle.size() == 7);
    CHECK(is_chordal(Graph(0)));
    CHECK(is_chordal(path_graph(5)));
}

TEST_CASE("chordality agrees with brute-force induced cycles, witnesses verified")
{
    auto check = [](const Graph &g) {
        const auto r = chordality(g);
        REQUIRE(r.chordal == oracle::chordal(g));
        if (r.chordal) {
            // The elimination order is perfect: later neighbours form a clique.
            REQUIRE(static_cast<int>(r.elimination_order.size()) == g.order());
            VertexSet eliminated = 0;
            for (int v : r.elimination_order) {
                const VertexSet later = g.neighbours(v) & ~eliminated;
                for_each_vertex(later, [&](int a) { CHECK((later & ~bit(a) & ~g.neighbours(a)) == 0); });
                eliminated |= bit(v);
            }
        } else {
            const auto &c = r.induced_cycle;
            REQUIRE(c.size() >= 4);
            VertexSet s = 0;
            for (int v : c)
                s |= bit(v);
            const auto sub = induced_subgraph(g, s).graph;
            CHECK(sub.size() == static_cast<int>(c.size()));
            for (std::size_t i = 0; i < c.size(); ++i)
                CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
        }
    };
    for (int n = 1; n <= 7; ++n)
        for (const Graph &g : enumerate_connected(n))
            check(g);
    std::mt19937_64 rng(59);
    for (int t = 0; t < 200; ++t)
        check(random_graph(rng, 7, 0.4));
}

TEST_CASE("twin pairs")
{
    const auto c4 = twin_pairs(cycle_graph(4));
    CHECK(c4 == std::vector<TwinPair>{{0, 2, TwinKind::false_twins}, {1, 3, TwinKind::false_twins}});
    const auto k4 = twin_pairs(complete_graph(4));
    CHECK(k4.size() == 6);
    for (const auto &t : k4)
        CHECK(t.kind == TwinKind::true_twins);
    CHECK(twin_pairs(catalog_entry("H5").graph).empty());

    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
        const Graph g = random_graph(rng, 7, 0.5);
        for (const auto &p : twin_pairs(g)) {
            CHECK(is_module(g, bit(p.u) | bit(p.v)));
            CHECK((p.kind == TwinKind::true_twins) == g.adjacent(p.u, p.v));
            if (p.kind == TwinKind::false_twins)
                CHECK(g.neighbours(p.u) == g.neighbours(p.v));
        }
    }
}

TEST_CASE("modules")
{
    CHECK(is_module(cycle_graph(4), 0b0101));
    CHECK(is_module(k23(), 0b11010)); // the part {1,3,4}
    CHECK_FALSE(is_module(path_graph(4), 0b0110));
    CHECK(is_module(path_graph(4), 0b1111));
    CHECK(module_closure(path_graph(4), 0b0011) == 0b1111);

    const auto c4 = nontrivial_modules(cycle_graph(4));
    CHECK(std::find(c4.begin(), c4.end(), VertexSet{0b0101}) != c4.end());
    CHECK(std::find(c4.begin(), c4.end(), VertexSet{0b1010}) != c4.end());
    CHECK(nontrivial_modules(path_graph(4)).empty());
    CHECK(is_prime(path_graph(4)));
    CHECK_FALSE(is_prime(cycle_graph(4)));
    CHECK(is_prime(cycle_graph(5)));

    // K_{2,3}: the 3-vertex part has |N(M)| = 2.
    const VertexSet part3 = 0b11010;
    CHECK(is_module(k23(), part3));
    CHECK(count(neighbourhood(k23(), part3)) == 2);

    CHECK_THROWS_AS(nontrivial_modules(Graph(kModuleListBound + 1)), CapabilityError);
}

TEST_CASE("module listing and existence agree with brute force")
{
    std::mt19937_64 rng(67);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6), 0.5);
        std::vector<VertexSet> brute;
        for (VertexSet m = 0; m <= g.vertices(); ++m) {
            const int k = count(m);
            if (k < 2 || k >= g.order())
                continue;
            if (is_module(g, m))
                brute.push_back(m);
        }
        CHECK(nontrivial_modules(g) == brute);
        CHECK(find_nontrivial_module(g).has_value() == oracle::has_nontrivial_module(g));
        if (auto m = find_nontrivial_module(g)) {
            CHECK(is_module(g, *m));
            CHECK(count(*m) >= 2);
            CHECK(count(*m) < g.order());
        }
    }
}

TEST_CASE("minimal non-dominating module")
{
    // P4 plus a false twin of an end vertex: {0,4} is non-dominating with N = {1}.
    const Graph g = add_vertex(path_graph(4), bit(1));
    const auto m = min_non_dominating_module(g);
    REQUIRE(m.has_value());
    CHECK(*m == (bit(0) | bit(4)));
    CHECK_FALSE(min_non_dominating_module(cycle_graph(4)).has_value());

    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        const Graph h = random_graph(rng, 7, 0.4);
        const auto best = min_non_dominating_module(h);
        int best_size = 99;
        for (VertexSet mod : nontrivial_modules(h))
            if (!is_dominating(h, mod))
                best_size = std::min(best_size, count(neighbourhood(h, mod)));
        CHECK(best.has_value() == (best_size != 99));
        if (best)
            CHECK(count(neighbourhood(h, *best)) == best_size);
    }
}

TEST_CASE("class C membership examples")
{
    CHECK(in_class_C(path_graph(5)));
    CHECK(in_class_C(complete_graph(6)));
    const auto c5 = class_C_violation(cycle_graph(5));
    REQUIRE(c5.has_value());
    CHECK(*c5 == 0b11111);
    CHECK(in_class_C(cycle_graph(4)));
    CHECK_THROWS_AS(in_class_C(Graph(kClassCBound + 1)), CapabilityError);

    for (const auto &e : catalog()) {
        INFO(e.name);
        // F lies in C; everything else in the catalog violates the bound
        // without being in F, so it cannot be in C.
        CHECK(in_class_C(e.graph) == (e.family == Family::exceptional));
        if (auto w = class_C_violation(e.graph)) {
            const auto sub = induced_subgraph(e.graph, *w).graph;
            CHECK(is_two_connected(sub));
            CHECK(is_prime(sub));
            CHECK_FALSE(is_chordal(sub));
        }
    }
}

TEST_CASE("class C agrees with the literal definition")
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : enumerate_connected(n))
            REQUIRE(in_class_C(g) == oracle::in_class_C(g));
    // Disconnected graphs too.
    std::mt19937_64 rng(73);
    for (int t = 0; t < 150; ++t) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.35);
        CHECK(in_class_C(g) == oracle::in_class_C(g));
    }
}

TEST_CASE("class C is hereditary")
{
    for (int n = 2; n <= 7; ++n)
        for (const Graph &g : enumerate_connected(n)) {
            if (!in_class_C(g))
                continue;
            for (int v = 0; v < n; ++v)
                REQUIRE(in_class_C(remove_vertex(g, v)));
        }
}

TEST_CASE("family classification")
{
    Graph k6 = complete_graph(6);
    for (auto [u, v] : {std::pair{0, 5}, {1, 2}, {3, 4}})
        k6.remove_edge(u, v);
    CHECK(classify_family(k6) == "F:K6'");
    CHECK(classify_family(cycle_graph(5)) == "none");
    Graph prism = from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(classify_family(permute(prism, std::vector<int>{5, 3, 1, 0, 2, 4})) == "F0:H6_2");
    for (const auto &e : catalog())
        CHECK(classify_family(e.graph) == e.label);
}

TEST_CASE("Dirac: chordal graphs have two simplicial vertices")
{
    for (int n = 2; n <= 7; ++n)
        for (const Graph &g : enumerate_connected(n))
            if (is_chordal(g))
                REQUIRE(count(simplicial_vertices(g)) >= 2);
}
