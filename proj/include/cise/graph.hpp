#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cise {

using Vertex = int;

/// Input formats accepted by load_graph.
enum class InputFormat { matrix_market, edge_list };

/// One row of a bit-packed adjacency matrix.
using BitRow = std::vector<std::uint64_t>;

inline bool bit_test(const BitRow& row, int i) {
    return (row[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
}
inline void bit_set(BitRow& row, int i) {
    row[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}
inline void bit_clear(BitRow& row, int i) {
    row[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

/// Immutable undirected graph. Vertices carry dense internal ids 0..n-1;
/// the original input labels are kept for output.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<Vertex>> adjacency;  // sorted neighbor lists
    std::vector<std::string> labels;             // internal id -> input label
    int max_degree = 0;
    std::vector<BitRow> bitrows;                 // optional matrix backend

    int degree(Vertex v) const { return static_cast<int>(adjacency[v].size()); }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
        return adjacency[v];
    }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& a = adjacency[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool has_bitrows() const { return !bitrows.empty(); }

    void build_bitrows() {
        const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
        bitrows.assign(n, BitRow(words, 0));
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u : adjacency[v]) bit_set(bitrows[v], u);
    }
};

/// N(X) = all vertices adjacent to a member of X and not in X.
inline std::vector<Vertex> set_neighbors(const Graph& g, const std::vector<Vertex>& xs) {
    std::vector<char> in_x(g.n, 0), seen(g.n, 0);
    for (Vertex v : xs) {
        if (v < 0 || v >= g.n) throw std::out_of_range("vertex id out of range");
        in_x[v] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v : xs)
        for (Vertex u : g.adjacency[v])
            if (!in_x[u] && !seen[u]) {
                seen[u] = 1;
                out.push_back(u);
            }
    std::sort(out.begin(), out.end());
    return out;
}

struct ParseError : std::runtime_error {
    long line;
    ParseError(long ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

namespace detail {

inline bool split_tokens(const std::string& line, std::vector<std::string>& toks) {
    toks.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return !toks.empty();
}

inline Graph finalize(int n, std::vector<std::pair<Vertex, Vertex>>& edges,
                      std::vector<std::string>&& labels) {
    if (n == 0) throw std::runtime_error("empty graph rejected");
    Graph g;
    g.n = n;
    g.labels = std::move(labels);
    g.adjacency.assign(n, {});
    for (auto [u, v] : edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    g.m = 0;
    for (auto& a : g.adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += static_cast<long long>(a.size());
        g.max_degree = std::max<int>(g.max_degree, static_cast<int>(a.size()));
    }
    g.m /= 2;
    return g;
}

inline Graph load_matrix_market(std::istream& in) {
    std::string line;
    long ln = 0;
    // header: "%%MatrixMarket ..."; some Network Repository files use a single '%'
    if (!std::getline(in, line)) throw ParseError(1, "missing MatrixMarket header");
    ++ln;
    if (line.rfind("%%MatrixMarket", 0) != 0 && line.rfind("%MatrixMarket", 0) != 0)
        throw ParseError(ln, "not a MatrixMarket header");

    std::vector<std::string> toks;
    int n = 0;
    long long nnz = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && line[0] == '%') continue;
        if (!split_tokens(line, toks)) continue;
        if (toks.size() < 3) throw ParseError(ln, "malformed size line");
        try {
            long rows = std::stol(toks[0]);
            long cols = std::stol(toks[1]);
            nnz = std::stoll(toks[2]);
            n = static_cast<int>(std::max(rows, cols));
        } catch (const std::exception&) {
            throw ParseError(ln, "malformed size line");
        }
        break;
    }
    if (n == 0) throw ParseError(ln, "empty graph rejected");

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(nnz));
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && (line[0] == '%' || line[0] == '#')) continue;
        if (!split_tokens(line, toks)) continue;
        if (toks.size() < 2) throw ParseError(ln, "malformed entry");
        long i, j;
        try {
            i = std::stol(toks[0]);
            j = std::stol(toks[1]);
        } catch (const std::exception&) {
            throw ParseError(ln, "malformed entry");
        }
        if (i < 1 || i > n || j < 1 || j > n) throw ParseError(ln, "index out of range");
        if (i == j) continue;  // self-loop
        edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
    }
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = std::to_string(v + 1);
    return finalize(n, edges, std::move(labels));
}

inline Graph load_edge_list(std::istream& in) {
    std::string line;
    long ln = 0;
    std::vector<std::string> toks;
    std::map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto intern = [&](const std::string& tok) {
        auto [it, fresh] = ids.try_emplace(tok, static_cast<Vertex>(labels.size()));
        if (fresh) labels.push_back(tok);
        return it->second;
    };
    while (std::getline(in, line)) {
        ++ln;
        if (!line.empty() && (line[0] == '#' || line[0] == '%')) continue;
        if (!split_tokens(line, toks)) continue;
        if (toks[0][0] == '#' || toks[0][0] == '%') continue;
        if (toks.size() < 2) throw ParseError(ln, "expected 'u v [w]'");
        Vertex u = intern(toks[0]);
        Vertex v = intern(toks[1]);
        if (u == v) continue;  // self-loop
        edges.emplace_back(u, v);
    }
    if (labels.empty()) throw std::runtime_error("empty graph rejected");
    return finalize(static_cast<int>(labels.size()), edges, std::move(labels));
}

}  // namespace detail

/// Parse a graph from a stream. Self-loops are dropped and duplicate edges
/// collapsed. Edge-list labels are remapped to dense ids in first-appearance
/// order; MatrixMarket ids keep their 1-based numbering as labels.
inline Graph load_graph(std::istream& in, InputFormat format, bool with_bitrows = false) {
    Graph g = format == InputFormat::matrix_market ? detail::load_matrix_market(in)
                                                   : detail::load_edge_list(in);
    if (with_bitrows) g.build_bitrows();
    return g;
}

}  // namespace cise
