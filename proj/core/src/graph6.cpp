#include "specclique/graph6.hpp"

#include <cstdint>

namespace specclique {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int body_bytes(long long n) {
    long long bits = n * (n - 1) / 2;
    return static_cast<int>((bits + 5) / 6);
}

}  // namespace

Graph parse_graph6(std::string_view line, const Graph6Options& opts) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty()) throw graph6_error(graph6_error::Kind::MalformedHeader, "empty graph6 line");

    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size())
            throw graph6_error(graph6_error::Kind::TruncatedBitstream, "graph6 line ends inside size header");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126)
            throw graph6_error(graph6_error::Kind::MalformedHeader,
                               "byte out of graph6 range at offset " + std::to_string(pos - 1));
        return c - kBias;
    };

    long long n;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {
        // '~' escape: 3-byte (18-bit) or, after a second '~', 6-byte (36-bit) size.
        int c1 = next();
        if (c1 < 63) {
            long long a = c1, b = next(), c = next();
            n = (a << 12) | (b << 6) | c;
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | next();
        }
    }
    if (n < 1)
        throw graph6_error(graph6_error::Kind::MalformedHeader, "graph6 size header declares n = " + std::to_string(n));
    if (n > opts.max_n)
        throw graph6_error(graph6_error::Kind::SizeOverflow,
                           "graph6 declares n = " + std::to_string(n) + " > limit " + std::to_string(opts.max_n));

    int need = body_bytes(n);
    if (static_cast<long long>(line.size() - pos) < need)
        throw graph6_error(graph6_error::Kind::TruncatedBitstream,
                           "graph6 body truncated: need " + std::to_string(need) + " bytes, have " +
                               std::to_string(line.size() - pos));

    Graph g(static_cast<int>(n));
    int bit = 0;  // position within the current 6-bit group, MSB first
    int cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (bit == 0) cur = next();
            bool set = (cur >> (5 - bit)) & 1;
            bit = (bit + 1) % 6;
            if (set) g.add_edge(row, col);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    long long n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }

    int bit = 0;
    int cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            cur |= (g.adjacent(row, static_cast<int>(col)) ? 1 : 0) << (5 - bit);
            if (++bit == 6) {
                out.push_back(static_cast<char>(cur + kBias));
                bit = 0;
                cur = 0;
            }
        }
    }
    if (bit != 0) out.push_back(static_cast<char>(cur + kBias));
    return out;
}

Graph6ReadResult read_graph6_lines(std::istream& in, const Graph6Options& opts) {
    Graph6ReadResult result;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
        if (sv.substr(0, kHeader.size()) == kHeader) sv.remove_prefix(kHeader.size());
        if (sv.empty()) continue;
        try {
            Graph g = parse_graph6(sv, opts);
            g.set_label("line " + std::to_string(lineno));
            result.graphs.push_back(std::move(g));
        } catch (const graph6_error& e) {
            result.errors.emplace_back(lineno, e.what());
        }
    }
    return result;
}

}  // namespace specclique
