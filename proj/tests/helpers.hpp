#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cise/graph.hpp"
#include "cise/harness.hpp"

namespace test {

inline cise::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    cise::Graph g;
    g.n = n;
    g.adjacency.assign(n, {});
    g.labels.resize(n);
    for (int v = 0; v < n; ++v) g.labels[v] = std::to_string(v);
    for (auto [u, v] : edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& a : g.adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += static_cast<long long>(a.size());
        g.max_degree = std::max<int>(g.max_degree, static_cast<int>(a.size()));
    }
    g.m /= 2;
    return g;
}

/// Four-vertex sample: edges 01, 02, 12, 13, 23. Every vertex deletable.
inline cise::Graph sample4() {
    return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

/// Nine-vertex, twelve-edge example in MatrixMarket form (labels 1..9):
/// N(2) = {1,4,5} and N({2,4,5,7}) = {1,3,8,9}.
inline std::string sample9_mtx() {
    return "%%MatrixMarket matrix coordinate pattern symmetric\n"
           "9 9 12\n"
           "1 2\n1 3\n2 4\n2 5\n4 5\n3 4\n4 7\n5 7\n7 8\n7 9\n6 8\n6 9\n";
}

inline cise::Graph load_mtx(const std::string& text) {
    std::istringstream in(text);
    return cise::load_graph(in, cise::InputFormat::matrix_market);
}

inline cise::Graph load_edges(const std::string& text) {
    std::istringstream in(text);
    return cise::load_graph(in, cise::InputFormat::edge_list);
}

inline cise::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

/// G(n,p) conditioned on connectivity (resampled until connected).
inline cise::Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        cise::Graph g = make_graph(n, edges);
        if (cise::connected_components(g).size() == 1) return g;
    }
    // fall back to a path so low-p small-n draws always terminate
    return path_graph(n);
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

using SetList = std::vector<std::vector<cise::Vertex>>;

inline SetList canonical_run(const cise::Graph& g, cise::Algorithm algo, int k,
                             cise::Backend backend = cise::Backend::list,
                             cise::EnumOptions opt = {}) {
    cise::CollectSink sink;
    cise::run_on_graph(g, algo, backend, k, sink, opt);
    return sink.canonical();
}

}  // namespace test
