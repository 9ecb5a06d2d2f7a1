#include "planartu/graph6.hpp"

namespace planartu {

namespace {

constexpr std::string_view kPrefix = ">>graph6<<";

int value_of(char c, std::size_t pos) {
    if (c < 63 || c > 126)
        throw Graph6Error(Graph6Error::Kind::bad_character,
                          "graph6: byte " + std::to_string(pos) +
                              " outside printable range 63..126");
    return c - 63;
}

}  // namespace

Graph graph6_decode(std::string_view line) {
    if (line.substr(0, kPrefix.size()) == kPrefix) line.remove_prefix(kPrefix.size());
    if (line.empty())
        throw Graph6Error(Graph6Error::Kind::malformed_header,
                          "graph6: empty line");
    std::size_t pos = 0;
    long long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw Graph6Error(Graph6Error::Kind::capacity,
                              "graph6: 8-byte size header exceeds 64-vertex capacity");
        if (line.size() < 4)
            throw Graph6Error(Graph6Error::Kind::malformed_header,
                              "graph6: long size header needs 3 bytes");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | value_of(line[pos], pos);
    } else {
        n = value_of(line[0], 0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw Graph6Error(Graph6Error::Kind::capacity,
                          "graph6: " + std::to_string(n) +
                              " vertices exceeds 64-vertex capacity");
    long long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() < pos + nbytes)
        throw Graph6Error(Graph6Error::Kind::truncated,
                          "graph6: expected " + std::to_string(nbytes) +
                              " data bytes, got " +
                              std::to_string(line.size() - pos));
    if (line.size() > pos + nbytes)
        throw Graph6Error(Graph6Error::Kind::trailing_garbage,
                          "graph6: " +
                              std::to_string(line.size() - pos - nbytes) +
                              " bytes after bit data");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int i = 0, j = 1;
    for (std::size_t b = 0; b < nbytes; ++b) {
        int val = value_of(line[pos + b], pos + b);
        for (int shift = 5; shift >= 0; --shift, ++bit) {
            int on = (val >> shift) & 1;
            if (bit >= nbits) {
                if (on)
                    throw Graph6Error(Graph6Error::Kind::nonzero_padding,
                                      "graph6: nonzero padding bits");
                continue;
            }
            if (on) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph::build(static_cast<int>(n), edges);
}

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int buffer = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + buffer));
                buffer = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (buffer << (6 - filled))));
    return out;
}

}  // namespace planartu
