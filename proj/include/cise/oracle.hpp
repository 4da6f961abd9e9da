#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cise/graph.hpp"

namespace cise {

/// Canonical result of the brute-force reference enumerator.
struct OracleResult {
    std::vector<std::vector<Vertex>> sets;  // each ascending; list lexicographic
    std::uint64_t count = 0;
};

namespace detail {

// Connectivity over a bitmask subset, independent of the graph module's
// traversal code: plain mask-BFS over per-vertex adjacency masks.
inline bool mask_connected(const std::vector<std::uint32_t>& adj_mask, std::uint32_t subset) {
    if (subset == 0) return false;
    std::uint32_t start = subset & (~subset + 1);
    std::uint32_t reached = start;
    std::uint32_t frontier = start;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int v = __builtin_ctz(f);
            f &= f - 1;
            next |= adj_mask[v] & subset & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == subset;
}

}  // namespace detail

/// Enumerates every k-subset of V (colexicographic bitmask order) and keeps
/// the connected ones. Deliberately naive; refuses n above `guard`.
inline OracleResult brute_force_cise(const Graph& g, int k, int guard = 24) {
    if (k < 1 || k > g.n) throw std::invalid_argument("order k out of range");
    if (g.n > guard)
        throw std::invalid_argument("brute_force_cise: n=" + std::to_string(g.n) +
                                    " exceeds guard " + std::to_string(guard));

    std::vector<std::uint32_t> adj_mask(g.n, 0);
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex u : g.adjacency[v]) adj_mask[v] |= std::uint32_t{1} << u;

    OracleResult res;
    const std::uint32_t limit = g.n == 32 ? 0xFFFFFFFFu : (std::uint32_t{1} << g.n) - 1;
    // Gosper's hack: next subset with the same popcount.
    std::uint32_t subset = (std::uint32_t{1} << k) - 1;
    while (subset <= limit) {
        if (detail::mask_connected(adj_mask, subset)) {
            std::vector<Vertex> s;
            std::uint32_t m = subset;
            while (m) {
                s.push_back(__builtin_ctz(m));
                m &= m - 1;
            }
            res.sets.push_back(std::move(s));
        }
        std::uint32_t c = subset & (~subset + 1);
        std::uint32_t r = subset + c;
        if (r == 0) break;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
    res.count = res.sets.size();
    // colex bitmask order: sets ascend when read back-to-front, so the list
    // is already duplicate-free; sort for the canonical lexicographic order
    std::sort(res.sets.begin(), res.sets.end());
    return res;
}

/// Verifies the structural counting identities against caller-supplied
/// counts. `cis_count(k)` must return |CIS(g,k)| for the connected graph g;
/// `non_art_count` is the number of non-articulation points of g.
/// Returns the first failed identity, or an empty string when all hold.
template <typename CountFn>
std::string count_identities(const Graph& g, CountFn&& cis_count, std::uint64_t non_art_count) {
    if (cis_count(1) != static_cast<std::uint64_t>(g.n)) return "|CIS(G,1)| != n";
    if (g.n >= 2 && cis_count(2) != static_cast<std::uint64_t>(g.m)) return "|CIS(G,2)| != m";
    if (cis_count(g.n) != 1) return "|CIS(G,n)| != 1";
    if (g.n >= 2 && cis_count(g.n - 1) != non_art_count)
        return "|CIS(G,n-1)| != #non-articulation points";
    return {};
}

}  // namespace cise
