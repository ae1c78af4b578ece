#include "graphlines/catalog.hpp"

#include <stdexcept>
#include <utility>

namespace graphlines {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

/// 1-based edge list, as read off the drawings.
auto drawn(int n, const EdgeList &edges) -> Graph
{
    Graph g(n);
    for (auto [a, b] : edges)
        g.add_edge(a - 1, b - 1);
    return g;
}

auto complete_minus_matching(int n) -> Graph
{
    Graph g = complete_graph(n);
    for (int v = 0; v < n / 2; ++v)
        g.remove_edge(v, v + n / 2);
    return g;
}

auto entry(std::string name, Family family, Graph g, ExpectedStats expected, std::string source) -> CatalogEntry
{
    std::string label = std::string(family_prefix(family)) + ":" + name;
    return {std::move(name), std::move(label), family, std::move(g), expected, std::move(source)};
}

auto build() -> std::vector<CatalogEntry>
{
    const EdgeList c4 = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
    auto with = [&](EdgeList base, const EdgeList &extra) {
        base.insert(base.end(), extra.begin(), extra.end());
        return base;
    };
    const EdgeList h5 = with(c4, {{1, 5}, {2, 5}});
    const EdgeList h6_1 = with(h5, {{3, 6}, {4, 6}});
    // 8-cycle drawn as 1-2-3-4-8-7-6-5-1.
    const EdgeList ring8 = {{1, 2}, {2, 3}, {3, 4}, {4, 8}, {8, 7}, {7, 6}, {6, 5}, {5, 1}};
    const EdgeList h8_2 = with(ring8, {{1, 6}, {6, 2}, {2, 5}, {4, 7}, {7, 3}, {3, 8}, {5, 8}});

    const std::string f = "exceptional family F (drawn with its line counts)";
    const std::string f0 = "known members of F0 outside F";
    const std::string b = "minimal counterexamples with a bridge";
    const auto published = Provenance::published;
    const auto derived = Provenance::derived;

    std::vector<CatalogEntry> result;
    // K6' and K8' are read as complete graphs minus a perfect matching.
    result.push_back(entry("C4", Family::exceptional, drawn(4, c4), {1, 0, true, published}, f));
    result.push_back(entry("K23", Family::exceptional, drawn(5, with(c4, {{1, 5}, {3, 5}})), {4, 0, true, published}, f));
    result.push_back(entry("W4'", Family::exceptional, drawn(5, with(c4, {{1, 5}, {2, 5}, {3, 5}})), {4, 0, true, published}, f));
    result.push_back(entry("W4", Family::exceptional, drawn(5, with(c4, {{1, 5}, {2, 5}, {3, 5}, {4, 5}})), {4, 0, true, published}, f));
    result.push_back(entry("K6'", Family::exceptional, complete_minus_matching(6), {4, 0, true, published}, f));
    result.push_back(entry("K8'", Family::exceptional, complete_minus_matching(8), {7, 0, true, published}, f));

    result.push_back(entry("H5", Family::pendant_exception, drawn(5, h5), {4, 0, true, derived}, f0));
    result.push_back(entry("H6_1", Family::pendant_exception, drawn(6, h6_1), {4, 0, true, derived}, f0));
    result.push_back(entry("H6_2", Family::pendant_exception,
                           drawn(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}}),
                           {4, 0, true, derived}, f0));
    result.push_back(entry("H8_1", Family::pendant_exception, drawn(8, with(ring8, {{2, 7}, {7, 3}, {3, 6}, {6, 2}})),
                           {7, 0, true, derived}, f0));
    result.push_back(entry("H8_2", Family::pendant_exception, drawn(8, h8_2), {7, 0, true, derived}, f0));
    result.push_back(entry("H8_3", Family::pendant_exception, drawn(8, with(h8_2, {{1, 4}})), {7, 0, true, derived}, f0));

    result.push_back(entry("B6a", Family::bridge, drawn(6, with(h5, {{5, 6}})), {4, 1, true, derived}, b));
    // Listed with the bridge counterexamples, but as drawn l = 7 and l + br = 8 >= 6.
    result.push_back(entry("B6b", Family::bridge, drawn(6, with(h5, {{4, 6}})), {7, 1, false, derived}, b));
    result.push_back(entry("B7", Family::bridge, drawn(7, with(h6_1, {{6, 7}})), {4, 1, true, derived}, b));
    return result;
}

} // namespace

auto family_prefix(Family f) -> std::string_view
{
    switch (f) {
    case Family::exceptional:
        return "F";
    case Family::pendant_exception:
        return "F0";
    case Family::bridge:
        return "B";
    }
    return "?";
}

auto catalog() -> const std::vector<CatalogEntry> &
{
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

auto catalog_entry(std::string_view name) -> const CatalogEntry &
{
    for (const auto &e : catalog())
        if (e.name == name || e.label == name)
            return e;
    throw std::out_of_range("no catalog entry named '" + std::string(name) + "'");
}

} // namespace graphlines
