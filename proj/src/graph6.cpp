#include "graphlines/graph6.hpp"

namespace graphlines {

namespace {

constexpr int kBias = 63;
constexpr int kLongPrefix = 126;

auto sixbits(std::string_view text, std::size_t pos) -> int
{
    if (pos >= text.size())
        throw Graph6Error("graph6 record truncated", pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126)
        throw Graph6Error("graph6 byte out of range", pos);
    return c - kBias;
}

} // namespace

auto parse_graph6(std::string_view text) -> Graph
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("empty graph6 record", 0);

    std::size_t pos = 0;
    long n = sixbits(text, pos++);
    if (n == kLongPrefix - kBias) {
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kLongPrefix)
            throw Graph6Error("graph6 order exceeds vertex cap", pos);
        n = 0;
        for (int k = 0; k < 3; ++k)
            n = (n << 6) | sixbits(text, pos++);
    }
    if (n > kMaxVertices)
        throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds vertex cap", 0);

    Graph g(static_cast<int>(n));
    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    // Report the first bad byte before any length mismatch.
    for (std::size_t i = pos; i < text.size(); ++i)
        sixbits(text, i);
    if (text.size() < pos + body)
        throw Graph6Error("graph6 record truncated", text.size());
    if (text.size() > pos + body)
        throw Graph6Error("trailing bytes after graph6 record", pos + body);

    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const int value = sixbits(text, pos + static_cast<std::size_t>(k / 6));
            if ((value >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    if (k % 6 != 0) {
        const std::size_t last = pos + body - 1;
        const int value = sixbits(text, last);
        if (value & ((1 << (6 - k % 6)) - 1))
            throw Graph6Error("non-zero graph6 padding bits", last);
    }
    return g;
}

auto to_graph6(const Graph &g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kLongPrefix));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int value = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + kBias));
                value = filled = 0;
            }
        }
    if (filled)
        out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
    return out;
}

} // namespace graphlines
