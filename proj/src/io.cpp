#include "obstructa/io.hpp"

#include <sstream>

#include "obstructa/error.hpp"

namespace obstructa {

namespace {

constexpr int kBias = 63;

void append_bits(const Graph& g, std::string& out) {
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    if (g.n() > 62) throw Error(ErrorCode::CapacityExceeded, "graph6 short form holds at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(g.n() + kBias));
    append_bits(g, out);
    return out;
}

std::string encode_graph6_any(const Graph& g) {
    if (g.n() <= 62) return encode_graph6(g);
    std::string out(1, '~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((g.n() >> shift) & 63) + kBias));
    append_bits(g, out);
    return out;
}

Graph decode_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "empty input");
    for (char c : text) {
        auto byte = static_cast<unsigned char>(c);
        if (byte < 63 || byte > 126)
            throw Error(ErrorCode::MalformedGraph6, "byte " + std::to_string(byte) + " outside 63..126");
    }
    if (text[0] == '~') throw Error(ErrorCode::MalformedGraph6, "long form (n > 62) is not supported");
    const int n = text[0] - kBias;
    const int bits = n * (n - 1) / 2;
    const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(expected) + " bytes for n=" +
                                                    std::to_string(n) + ", got " + std::to_string(text.size()));
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[1 + k / 6] - kBias;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::ostringstream body;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        body << line << '\n';
    }
    std::istringstream tokens(body.str());
    long long n = 0;
    if (!(tokens >> n)) throw Error(ErrorCode::ParseError, "edge list must start with the vertex count");
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorCode::CapacityExceeded, "vertex count " + std::to_string(n) + " outside 0..64");
    Graph g(static_cast<int>(n));
    long long u = 0;
    long long v = 0;
    while (tokens >> u) {
        if (!(tokens >> v)) throw Error(ErrorCode::ParseError, "dangling vertex at end of edge list");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!tokens.eof()) throw Error(ErrorCode::ParseError, "non-numeric token in edge list");
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace obstructa
