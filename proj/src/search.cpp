#include "graphlines/search.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "graphlines/canonical.hpp"
#include "graphlines/errors.hpp"
#include "graphlines/graph6.hpp"
#include "graphlines/lines.hpp"
#include "graphlines/structure.hpp"

namespace graphlines {

namespace {

auto build_connected(int n) -> std::vector<Graph>
{
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();

    std::unordered_set<std::string> seen;
    std::vector<std::pair<int, std::string>> keyed;
    std::vector<Graph> found;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::array<VertexSet, kMaxVertices> rows{};
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U) {
                rows[pairs[k].first] |= bit(pairs[k].second);
                rows[pairs[k].second] |= bit(pairs[k].first);
            }
        bool sorted = true;
        for (int v = 1; v < n && sorted; ++v)
            sorted = count(rows[v - 1]) <= count(rows[v]);
        if (!sorted)
            continue;
        const Graph g = from_rows(std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(n)));
        if (!is_connected(g))
            continue;
        const Graph canon = canonical_graph(g);
        std::string form = to_graph6(canon);
        if (seen.insert(form).second) {
            keyed.emplace_back(canon.size(), std::move(form));
            found.push_back(canon);
        }
    }
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keyed[a] < keyed[b]; });
    std::vector<Graph> result;
    result.reserve(found.size());
    for (std::size_t i : order)
        result.push_back(found[i]);
    return result;
}

/// Runs work(i) for i in [0, count) on `jobs` threads, striding the indices.
template <typename Work>
void parallel_for(std::size_t total, int jobs, Work &&work)
{
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), total));
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i)
            work(i);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < total; i += workers)
                work(i);
        });
    for (auto &t : pool)
        t.join();
}

constexpr std::size_t kChunk = 512;

} // namespace

auto enumerate_connected(int n) -> const std::vector<Graph> &
{
    if (n < 1)
        throw std::domain_error("enumerate_connected: n must be at least 1");
    if (n > kMaxEnumerationOrder)
        throw CapabilityError("built-in enumeration stops at n = 7; pipe graph6 from an external generator instead");
    static std::mutex lock;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard guard(lock);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_connected(n)).first;
    return it->second;
}

auto tri_symbol(Tri t) -> char
{
    switch (t) {
    case Tri::holds:
        return '1';
    case Tri::fails:
        return '0';
    case Tri::not_applicable:
        return '-';
    }
    return '?';
}

auto analyze_graph(const Graph &g) -> AnalysisRecord
{
    if (g.order() < 2)
        throw std::domain_error("analyze_graph: needs at least two vertices");
    AnalysisRecord r;
    r.graph6 = canonical_form(g);
    r.n = g.order();
    r.m = g.size();
    const auto lines = line_partition(g);
    r.ell = static_cast<int>(lines.classes.size());
    r.ul = ul(g, lines);
    r.br = bridge_count(g);
    r.pendant = !pendant_edges(g).empty();
    r.in_C = in_class_C(g);
    r.family = classify_family(g);
    if (!is_connected(g))
        return r;
    const bool bound = r.ell + r.br >= r.n;
    const bool exceptional = r.family.rfind("F:", 0) == 0;
    r.main_ok = (exceptional || !r.in_C) ? Tri::not_applicable : bound ? Tri::holds : Tri::fails;
    r.conj2_ok = (r.pendant || bound) ? Tri::holds : Tri::fails;
    r.conj3_ok = r.ell + r.ul >= r.n ? Tri::holds : Tri::fails;
    return r;
}

auto parse_inequality(const std::string &name) -> std::optional<Inequality>
{
    if (name == "main")
        return Inequality::main;
    if (name == "conj2")
        return Inequality::conj2;
    if (name == "conj3")
        return Inequality::conj3;
    return std::nullopt;
}

auto to_string(Inequality i) -> std::string
{
    switch (i) {
    case Inequality::main:
        return "main";
    case Inequality::conj2:
        return "conj2";
    case Inequality::conj3:
        return "conj3";
    }
    return "?";
}

auto violates(const AnalysisRecord &r, Inequality which) -> bool
{
    switch (which) {
    case Inequality::main:
        return r.ell + r.br < r.n;
    case Inequality::conj2:
        return !r.pendant && r.ell + r.br < r.n;
    case Inequality::conj3:
        return r.ell + r.ul < r.n;
    }
    return false;
}

auto passes(const ScanFilters &f, const Graph &g) -> bool
{
    if (g.order() < f.min_order || g.order() > f.max_order)
        return false;
    return !f.connected_only || is_connected(g);
}

auto scan(std::span<const Graph> graphs, const ScanFilters &filters, int jobs) -> std::vector<AnalysisRecord>
{
    std::vector<const Graph *> kept;
    for (const Graph &g : graphs)
        if (passes(filters, g))
            kept.push_back(&g);
    std::vector<AnalysisRecord> out(kept.size());
    parallel_for(kept.size(), jobs, [&](std::size_t i) { out[i] = analyze_graph(*kept[i]); });
    return out;
}

void scan_stream(std::istream &in, const ScanFilters &filters, int jobs, const std::function<void(const ScanItem &)> &sink)
{
    std::size_t line_no = 0, emitted = 0;
    std::string text;
    bool done = false;
    while (!done) {
        std::vector<std::pair<std::size_t, std::string>> chunk;
        while (chunk.size() < kChunk) {
            if (!std::getline(in, text)) {
                done = true;
                break;
            }
            ++line_no;
            while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
                text.pop_back();
            if (text.empty() || text.rfind(">>", 0) == 0)
                continue;
            chunk.emplace_back(line_no, text);
        }
        // Slots left empty are filtered-out graphs.
        std::vector<std::optional<ScanItem>> items(chunk.size());
        parallel_for(chunk.size(), jobs, [&](std::size_t i) {
            ScanItem item;
            item.line = chunk[i].first;
            try {
                const Graph g = parse_graph6(chunk[i].second);
                if (!passes(filters, g))
                    return;
                item.record = analyze_graph(g);
            } catch (const std::exception &e) {
                item.error = e.what();
            }
            items[i] = std::move(item);
        });
        for (auto &item : items)
            if (item) {
                item->index = emitted++;
                sink(*item);
            }
    }
}

auto find_counterexamples(int n_max, Inequality which, int jobs) -> std::vector<AnalysisRecord>
{
    if (n_max > kMaxEnumerationOrder)
        throw CapabilityError("built-in enumeration stops at n = 7; pipe graph6 from an external generator instead");
    std::vector<AnalysisRecord> result;
    for (int n = 2; n <= n_max; ++n)
        for (auto &r : scan(enumerate_connected(n), ScanFilters{}, jobs))
            if (violates(r, which))
                result.push_back(std::move(r));
    return result;
}

void ScanSummary::add(const AnalysisRecord &r)
{
    ++records;
    ++main[static_cast<int>(r.main_ok)];
    ++conj2[static_cast<int>(r.conj2_ok)];
    ++conj3[static_cast<int>(r.conj3_ok)];
}

} // namespace graphlines
