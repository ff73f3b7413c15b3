#include "fewev/graph6.hpp"

namespace fewev {

// Standard graph6: N(n) followed by the upper triangle read column by
// column, packed into 6-bit groups (MSB first), each group offset by 63.

std::string graph6_encode(const Graph& g) {
    long n = g.order();
    if (n > 258047)
        throw std::invalid_argument("graph6_encode: order exceeds format range");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    static constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (line.substr(0, header.size()) == header) {
        base = header.size();
        line.remove_prefix(header.size());
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw Graph6Error(base, "empty input");

    auto value_at = [&](std::size_t pos) -> int {
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < 63 || c > 126)
            throw Graph6Error(base + pos, "byte outside printable graph6 range");
        return c - 63;
    };

    std::size_t pos = 0;
    long n;
    if (line[0] != '~') {
        n = value_at(0);
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error(base + 1, "orders above 258047 not supported");
        if (line.size() < 4) throw Graph6Error(base + line.size(), "truncated order field");
        n = (static_cast<long>(value_at(1)) << 12) |
            (static_cast<long>(value_at(2)) << 6) | value_at(3);
        pos = 4;
    }

    long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < need)
        throw Graph6Error(base + line.size(), "truncated edge data");
    if (line.size() - pos > need)
        throw Graph6Error(base + pos + need, "trailing bytes after edge data");

    Graph g(static_cast<int>(n));
    long bit = 0;
    int i = 0, j = 1;
    for (std::size_t k = 0; k < need; ++k) {
        int val = value_at(pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            int set = (val >> b) & 1;
            if (bit >= bits) {
                if (set) throw Graph6Error(base + pos + k, "nonzero padding bits");
                continue;
            }
            if (set) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

} // namespace fewev
