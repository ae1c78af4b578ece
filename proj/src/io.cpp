#include "graphlines/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "graphlines/graph6.hpp"

namespace graphlines {

namespace {

auto trim(std::string_view s) -> std::string_view
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

auto parse_int(std::string_view s, int &value) -> bool
{
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

auto parse_stanza(const std::vector<std::string> &lines, std::size_t first_line) -> NamedGraph
{
    NamedGraph result;
    std::size_t i = 0;
    int n = 0;
    if (!parse_int(lines[0], n)) {
        result.name = lines[0];
        i = 1;
        if (lines.size() < 2 || !parse_int(lines[1], n))
            throw std::invalid_argument("edge list near line " + std::to_string(first_line) + ": expected vertex count");
    }
    result.graph = Graph(n);
    for (++i; i < lines.size(); ++i) {
        std::istringstream edge(lines[i]);
        int u = 0, v = 0;
        std::string extra;
        if (!(edge >> u >> v) || (edge >> extra))
            throw std::invalid_argument("edge list near line " + std::to_string(first_line + i) + ": expected 'u v'");
        result.graph.add_edge(u, v);
    }
    return result;
}

} // namespace

auto read_edge_lists(std::istream &in) -> std::vector<NamedGraph>
{
    std::vector<NamedGraph> result;
    std::vector<std::string> stanza;
    std::size_t line_no = 0, stanza_start = 0;
    std::string raw;
    auto flush = [&] {
        if (!stanza.empty())
            result.push_back(parse_stanza(stanza, stanza_start));
        stanza.clear();
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (!line.empty() && line.front() == '#')
            continue;
        if (line.empty()) {
            flush();
            continue;
        }
        if (stanza.empty())
            stanza_start = line_no;
        stanza.emplace_back(line);
    }
    flush();
    return result;
}

void write_edge_list(std::ostream &out, const NamedGraph &g)
{
    out << g.name << '\n' << g.graph.order() << '\n';
    for (auto e : g.graph.edges())
        out << e.u << ' ' << e.v << '\n';
}

auto read_graph_text(std::string_view text) -> Graph
{
    const auto body = trim(text.substr(0, text.find_last_not_of("\r\n \t") + 1));
    if (!body.empty() && body.find('\n') == std::string_view::npos && body.find(' ') == std::string_view::npos) {
        int n = 0;
        if (!parse_int(body, n))
            return parse_graph6(body);
    }
    std::istringstream in{std::string(text)};
    auto graphs = read_edge_lists(in);
    if (graphs.size() != 1)
        throw std::invalid_argument("expected exactly one graph, found " + std::to_string(graphs.size()));
    return graphs.front().graph;
}

} // namespace graphlines
