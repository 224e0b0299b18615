#include "turan/graph6.hpp"

#include <stdexcept>

namespace turan {

namespace {

void append_bits(std::string& out, int& bitpos, int bit) {
    if (bitpos == 0) out.push_back(char(63));
    out.back() = char(((out.back() - 63) << 1 | bit) + 63);
    bitpos = (bitpos + 1) % 6;
}

void flush_bits(std::string& out, int& bitpos) {
    while (bitpos != 0) append_bits(out, bitpos, 0);
}

} // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > Graph::kMaxVertices)
        throw CapacityError("graph6 encoding limited to 128 vertices here");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        // 18-bit size, three 6-bit groups, high group first.
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int bitpos = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            append_bits(out, bitpos, g.has_edge(u, v) ? 1 : 0);
    flush_bits(out, bitpos);
    return out;
}

Graph graph6_decode(const std::string& text) {
    std::string s = text;
    const std::string prefix = ">>graph6<<";
    if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6 character out of range");

    std::size_t pos = 0;
    long long n = 0;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6 orders above 258047 unsupported");
        if (s.size() < 4) throw std::invalid_argument("truncated graph6 header");
        n = ((long long)(s[1] - 63) << 12) | ((long long)(s[2] - 63) << 6) |
            (long long)(s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n > Graph::kMaxVertices)
        throw CapacityError("graph6 order exceeds 128");

    const long long nbits = n * (n - 1) / 2;
    const std::size_t need = std::size_t((nbits + 5) / 6);
    if (s.size() - pos < need) throw std::invalid_argument("truncated graph6 bit vector");
    if (s.size() - pos > need) throw std::invalid_argument("trailing characters in graph6 string");

    Graph g{int(n)};
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int group = s[pos + bit / 6] - 63;
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // Padding must be zero.
    for (long long b = bit; b < (long long)need * 6; ++b) {
        int group = s[pos + b / 6] - 63;
        if ((group >> (5 - b % 6)) & 1)
            throw std::invalid_argument("nonzero padding bits in graph6 string");
    }
    return g;
}

} // namespace turan
