#pragma once

#include <cstdint>
#include <vector>

#include "cise/enumerate.hpp"
#include "cise/graph.hpp"
#include "cise/sink.hpp"
#include "cise/vertex_set.hpp"

namespace cise {

/// Which end of the extension set Simple absorbs from.
enum class PickSide { back, front };

namespace detail {

/// Guarding-set bottom-up enumerator. C, N and Y live in global arrays with
/// end-position pointers; a recursion level sees its slice of N as
/// [n_begin, size-at-entry).
class VSimpleRun {
public:
    VSimpleRun(const Graph& g, int k, SubgraphSink& sink, const EnumOptions& opt)
        : g_(g), k_(k), sink_(sink), opt_(opt), c_(g.n), n_(g.n), y_(g.n) {}

    RunStats run() {
        for (Vertex v = 0; v < g_.n; ++v) {
            if (stats_.timed_out) break;
            c_.push(v);
            for (Vertex u : g_.adjacency[v])
                if (!y_.contains(u)) n_.push(u);
            recurse(0);
            c_.pop();
            n_.restore(0);
            y_.push(v);
            if (opt_.prune_k_component &&
                g_.n - static_cast<long>(y_.size()) < k_)
                break;
        }
        stats_.count = sink_.emitted();
        return stats_;
    }

private:
    bool recurse(std::size_t n_begin) {
        ++stats_.nodes_visited;
        if (opt_.cancel && (stats_.nodes_visited & (CancelToken::poll_interval - 1)) == 0 &&
            opt_.cancel->expired())
            stats_.timed_out = true;

        Snapshot snap;
        if (opt_.check_restore) snap = take_snapshot();

        if (static_cast<int>(c_.size()) == k_) {
            sink_.emit(c_.members());
            return true;
        }

        const std::size_t end = n_.size();
        const std::size_t y_mark = y_.mark();
        bool has_int_leaf = false;
        for (std::size_t idx = n_begin; idx < end; ++idx) {
            if (stats_.timed_out) break;
            Vertex u = n_[idx];
            n_.suspend(u);
            c_.push(u);
            for (Vertex v : g_.adjacency[u])
                if (!c_.contains(v) && !n_.contains(v) && !y_.contains(v)) n_.push(v);
            bool child = recurse(idx + 1);
            c_.pop();
            n_.restore(end);
            y_.push(u);
            if (child)
                has_int_leaf = true;
            else if (opt_.prune_has_int_leaf)
                break;
            if (opt_.prune_k_component &&
                g_.n - static_cast<long>(y_.size()) < k_)
                break;
        }
        // Y back to its entry state; its vertices return to N.
        while (y_.size() > y_mark) n_.resume(y_.pop());

        if (opt_.check_restore && !matches(snap)) ++stats_.restore_violations;
        return has_int_leaf;
    }

    struct Snapshot {
        std::vector<Vertex> c, n, y;
        std::vector<char> cb, nb, yb;
    };

    Snapshot take_snapshot() const {
        Snapshot s;
        s.c = c_.members();
        s.n = n_.members();
        s.y = y_.members();
        s.cb = bits(c_);
        s.nb = bits(n_);
        s.yb = bits(y_);
        return s;
    }

    bool matches(const Snapshot& s) const {
        return s.c == c_.members() && s.n == n_.members() && s.y == y_.members() &&
               s.cb == bits(c_) && s.nb == bits(n_) && s.yb == bits(y_);
    }

    std::vector<char> bits(const VertexSetView& vs) const {
        std::vector<char> b(g_.n);
        for (Vertex v = 0; v < g_.n; ++v) b[v] = vs.contains(v);
        return b;
    }

    const Graph& g_;
    int k_;
    SubgraphSink& sink_;
    EnumOptions opt_;
    VertexSetView c_, n_, y_;
    RunStats stats_;
};

/// Wernicke-style extension-set enumerator (Simple / Simple-Forward). The
/// extension set is one shared array; a node consumes from the chosen end
/// and re-extends it with exclusive neighbors of the absorbed vertex.
class SimpleRun {
public:
    SimpleRun(const Graph& g, int k, SubgraphSink& sink, PickSide pick,
              const EnumOptions& opt)
        : g_(g), k_(k), sink_(sink), pick_(pick), opt_(opt), seen_(g.n, 0) {}

    RunStats run() {
        int forbidden = 0;
        for (Vertex v = 0; v < g_.n; ++v) {
            if (stats_.timed_out) break;
            root_ = v;
            c_.push_back(v);
            seen_[v] = 1;
            for (Vertex u : g_.adjacency[v])
                if (u > v) {
                    ext_.push_back(u);
                    seen_[u] = 1;
                }
            recurse(forbidden);
            c_.pop_back();
            while (!ext_.empty()) {
                seen_[ext_.back()] = 0;
                ext_.pop_back();
            }
            ext_lo_ = 0;
            seen_[v] = 0;
            ++forbidden;
            if (opt_.prune_k_component && g_.n - forbidden < k_) break;
        }
        stats_.count = sink_.emitted();
        return stats_;
    }

private:
    bool recurse(int forbidden) {
        ++stats_.nodes_visited;
        if (opt_.cancel && (stats_.nodes_visited & (CancelToken::poll_interval - 1)) == 0 &&
            opt_.cancel->expired())
            stats_.timed_out = true;

        Snapshot snap;
        if (opt_.check_restore) snap = take_snapshot();

        if (static_cast<int>(c_.size()) == k_) {
            sink_.emit(c_);
            return true;
        }

        const std::size_t entry_lo = ext_lo_;
        std::vector<Vertex> stash;  // back-picked vertices, re-appended at exit
        bool has_int_leaf = false;
        while (ext_lo_ < ext_.size()) {
            if (stats_.timed_out) break;
            Vertex u;
            if (pick_ == PickSide::front) {
                u = ext_[ext_lo_++];
            } else {
                u = ext_.back();
                ext_.pop_back();
                stash.push_back(u);
            }
            const std::size_t ext_mark = ext_.size();
            c_.push_back(u);
            std::vector<Vertex> added;
            for (Vertex w : g_.adjacency[u])
                if (w > root_ && !seen_[w]) {
                    ext_.push_back(w);
                    seen_[w] = 1;
                    added.push_back(w);
                }
            bool child = recurse(forbidden);
            c_.pop_back();
            if (pick_ == PickSide::front) {
                // appended vertices are still on top, in place
                while (ext_.size() > ext_mark) {
                    seen_[ext_.back()] = 0;
                    ext_.pop_back();
                }
            } else {
                // the child's stash re-append may have permuted the array, so
                // remove this node's additions by value
                for (Vertex w : added) {
                    for (std::size_t i = ext_.size(); i-- > 0;)
                        if (ext_[i] == w) {
                            ext_[i] = ext_.back();
                            ext_.pop_back();
                            break;
                        }
                    seen_[w] = 0;
                }
            }
            ++forbidden;
            if (child)
                has_int_leaf = true;
            else if (opt_.prune_has_int_leaf)
                break;
            if (opt_.prune_k_component && g_.n - forbidden < k_) break;
        }
        if (pick_ == PickSide::front) {
            ext_lo_ = entry_lo;
        } else {
            for (Vertex u : stash) ext_.push_back(u);
        }

        if (opt_.check_restore && !matches(snap)) ++stats_.restore_violations;
        return has_int_leaf;
    }

    struct Snapshot {
        std::vector<Vertex> c, ext;
        std::size_t lo = 0;
        std::vector<char> seen;
    };

    Snapshot take_snapshot() const { return {c_, ext_, ext_lo_, seen_}; }
    bool matches(const Snapshot& s) const {
        // Back-picking may permute the processed suffix of the extension set;
        // compare it as a multiset.
        if (s.c != c_ || s.lo != ext_lo_ || s.seen != seen_) return false;
        if (pick_ == PickSide::front) return s.ext == ext_;
        auto a = s.ext, b = ext_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    const Graph& g_;
    int k_;
    SubgraphSink& sink_;
    PickSide pick_;
    EnumOptions opt_;
    std::vector<Vertex> c_, ext_;
    std::size_t ext_lo_ = 0;
    std::vector<char> seen_;  // root plus every vertex currently in the arena
    Vertex root_ = 0;
    RunStats stats_;
};

}  // namespace detail

/// VSimple: bottom-up expansion guarded by the considered-vertex set Y.
/// Requires a connected graph and 1 <= k <= n; every member of CIS(g,k)
/// reaches the sink exactly once.
inline RunStats enumerate_vsimple(const Graph& g, int k, SubgraphSink& sink,
                                  const EnumOptions& opt = {}) {
    require_order_in_range(k, g.n);
    return detail::VSimpleRun(g, k, sink, opt).run();
}

/// Simple (pick = back) and Simple-Forward (pick = front).
inline RunStats enumerate_simple(const Graph& g, int k, SubgraphSink& sink,
                                 PickSide pick = PickSide::back,
                                 const EnumOptions& opt = {}) {
    require_order_in_range(k, g.n);
    return detail::SimpleRun(g, k, sink, pick, opt).run();
}

}  // namespace cise
