#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "cise/graph.hpp"
#include "cise/view.hpp"

namespace cise {

/// BFS connectivity check of the induced subgraph G(S), reusable across calls.
/// Epoch stamping avoids clearing the scratch arrays between checks.
class ConnectivityChecker {
public:
    explicit ConnectivityChecker(int n) : in_set_(n, 0), seen_(n, 0) {}

    bool connected(const Graph& g, const std::vector<Vertex>& s) {
        if (s.empty()) return false;
        if (s.size() == 1) return true;
        ++epoch_;
        for (Vertex v : s) in_set_[v] = epoch_;
        queue_.clear();
        queue_.push_back(s.front());
        seen_[s.front()] = epoch_;
        std::size_t reached = 1, head = 0;
        while (head < queue_.size()) {
            Vertex v = queue_[head++];
            for (Vertex u : g.adjacency[v])
                if (in_set_[u] == epoch_ && seen_[u] != epoch_) {
                    seen_[u] = epoch_;
                    ++reached;
                    queue_.push_back(u);
                }
        }
        return reached == s.size();
    }

private:
    std::vector<std::uint32_t> in_set_, seen_;
    std::vector<Vertex> queue_;
    std::uint32_t epoch_ = 0;
};

/// True iff the induced subgraph G(S) is connected. S must be nonempty.
inline bool is_connected_subset(const Graph& g, const std::vector<Vertex>& s) {
    for (Vertex v : s)
        if (v < 0 || v >= g.n) throw std::out_of_range("vertex id out of range");
    ConnectivityChecker c(g.n);
    return c.connected(g, s);
}

/// One-pass articulation-point computation (low-link depth-first search) over
/// the alive vertices of a view. The induced alive subgraph must be connected
/// and nonempty; this is asserted in debug builds only.
template <typename View>
class ArticulationFinder {
public:
    explicit ArticulationFinder(int n)
        : disc_(n, 0), low_(n, 0), parent_(n, -1), art_(n, 0), stamp_(n, 0) {}

    /// Recomputes articulation flags for the current alive set.
    void run(const View& view) {
        ++epoch_;
        timer_ = 0;
        Vertex root = -1;
        for (Vertex v = 0; v < view.n(); ++v)
            if (view.alive(v)) {
                root = v;
                break;
            }
        assert(root >= 0 && "articulation points of an empty view");
        int visited = dfs(view, root);
        (void)visited;
        assert(visited == view.alive_count() && "alive subgraph must be connected");
    }

    /// Valid for alive vertices after run(). A single alive vertex is never
    /// an articulation point.
    bool is_articulation(Vertex v) const { return stamp_[v] == epoch_ && art_[v]; }

private:
    int dfs(const View& view, Vertex root) {
        stack_.clear();
        visit(root, -1);
        stack_.push_back({root, NeighborCursor{}});
        int visited = 1;
        int root_children = 0;
        while (!stack_.empty()) {
            auto& f = stack_.back();
            Vertex u = next_neighbor(view, f.v, f.cur);
            if (u < 0) {
                Vertex v = f.v;
                stack_.pop_back();
                if (!stack_.empty()) {
                    Vertex p = stack_.back().v;
                    low_[p] = std::min(low_[p], low_[v]);
                    if (p == root)
                        ++root_children;
                    else if (low_[v] >= disc_[p])
                        art_[p] = 1;
                }
                continue;
            }
            if (stamp_[u] != epoch_) {
                visit(u, f.v);
                ++visited;
                stack_.push_back({u, NeighborCursor{}});
            } else if (u != parent_[f.v]) {
                low_[f.v] = std::min(low_[f.v], disc_[u]);
            }
        }
        art_[root] = root_children > 1 ? 1 : 0;
        return visited;
    }

    void visit(Vertex v, Vertex parent) {
        stamp_[v] = epoch_;
        disc_[v] = low_[v] = ++timer_;
        parent_[v] = parent;
        art_[v] = 0;
    }

    struct NeighborCursor {
        int pos = 0;
    };

    static Vertex next_neighbor(const ListView& view, Vertex v, NeighborCursor& cur) {
        const auto& adj = view.base().adjacency[v];
        while (cur.pos < static_cast<int>(adj.size())) {
            Vertex u = adj[cur.pos++];
            if (view.alive(u)) return u;
        }
        return -1;
    }

    static Vertex next_neighbor(const BitMatrixView& view, Vertex v, NeighborCursor& cur) {
        const std::uint64_t* row = view.row(v);
        int n_words = static_cast<int>(view.words());
        int w = cur.pos >> 6;
        if (w >= n_words) return -1;
        std::uint64_t word = row[w] & (~std::uint64_t{0} << (cur.pos & 63));
        while (true) {
            if (word) {
                int bit = __builtin_ctzll(word);
                Vertex u = static_cast<Vertex>(w * 64 + bit);
                cur.pos = static_cast<int>(u) + 1;
                return u;
            }
            if (++w >= n_words) return -1;
            word = row[w];
        }
    }

    struct Frame {
        Vertex v;
        NeighborCursor cur;
    };

    std::vector<int> disc_, low_;
    std::vector<Vertex> parent_;
    std::vector<char> art_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    int timer_ = 0;
    std::vector<Frame> stack_;
};

/// The alive vertices whose removal keeps the alive subgraph connected,
/// in ascending id order. For a single alive vertex, returns that vertex.
template <typename View>
std::vector<Vertex> non_articulation_points(const View& view) {
    std::vector<Vertex> out;
    if (view.alive_count() == 0) return out;
    if (view.alive_count() == 1) return view.alive_vertices();
    ArticulationFinder<View> finder(view.n());
    finder.run(view);
    for (Vertex v = 0; v < view.n(); ++v)
        if (view.alive(v) && !finder.is_articulation(v)) out.push_back(v);
    return out;
}

}  // namespace cise
