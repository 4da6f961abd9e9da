#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cise/connectivity.hpp"
#include "cise/enumerate.hpp"
#include "cise/graph.hpp"
#include "cise/sink.hpp"
#include "cise/vertex_set.hpp"
#include "cise/view.hpp"

namespace cise {

namespace detail {

/// Top-down enumerator: recursively deletes deletable (non-articulation)
/// vertices from the full graph until order k, guarded by the must-include
/// set Y and pruned by the look-ahead rule.
///
/// The candidate arrays N live in one arena; each recursion level owns a
/// segment built from its parent's segment in parent order, with the at most
/// one newly deletable vertex appended last. Deletable-flag changes are
/// recorded per level in a delta log so restoration is exact.
template <typename View>
class TopDownRun {
public:
    TopDownRun(const Graph& g, int k, SubgraphSink& sink, const EnumOptions& opt)
        : g_(g),
          view_(g),
          k_(k),
          sink_(sink),
          opt_(opt),
          y_(g.n),
          deletable_(g.n, 0),
          finder_(g.n),
          conn_(g.n) {}

    RunStats run() {
        finder_.run(view_);
        std::size_t nb = nbuf_.size();
        for (Vertex v = 0; v < g_.n; ++v)
            if (!finder_.is_articulation(v)) {
                deletable_[v] = 1;
                nbuf_.push_back(v);
            }
        node(nb, nbuf_.size());
        stats_.count = sink_.emitted();
        stats_.look_ahead_emissions = look_ahead_emissions_;
        return stats_;
    }

private:
    struct DeltaLevel {
        Vertex deleted;
        std::size_t removed_begin;  // segment in removed_buf_
        Vertex added;               // newly deletable vertex, or -1
    };

    void node(std::size_t nb, std::size_t ne) {
        ++stats_.nodes_visited;
        if (opt_.cancel && (stats_.nodes_visited & (CancelToken::poll_interval - 1)) == 0 &&
            opt_.cancel->expired())
            stats_.timed_out = true;

        Snapshot snap;
        if (opt_.check_restore) snap = take_snapshot(nb, ne);

        if (view_.alive_count() == k_) {
            emit_alive();
            return;
        }

        const std::size_t y_mark = y_.mark();
        for (std::size_t idx = nb; idx < ne; ++idx) {
            if (stats_.timed_out) break;
            Vertex u = nbuf_[idx];
            if (y_.contains(u)) continue;

            view_.delete_vertex(u);
            std::size_t child_nb = nbuf_.size();
            std::size_t child_ne = child_nb;
            Vertex added = -1;
            if (view_.alive_count() > k_) {
                added = update_deletable_incremental(u);
                for (std::size_t i = nb; i < ne; ++i) {
                    Vertex v = nbuf_[i];
                    if (v != u && deletable_[v] && !y_.contains(v)) nbuf_.push_back(v);
                }
                if (added >= 0 && !y_.contains(added)) nbuf_.push_back(added);
                child_ne = nbuf_.size();
            } else {
                levels_.push_back({u, removed_buf_.size(), -1});
            }

            node(child_nb, child_ne);

            nbuf_.resize(child_nb);
            restore_level();

            y_.push(u);
            if (opt_.prune_look_ahead && y_.size() == static_cast<std::size_t>(k_)) {
                if (conn_.connected(g_, y_.members())) {
                    ++look_ahead_emissions_;
                    sink_.emit(y_.members());
                }
                break;
            }
        }
        y_.restore(y_mark);

        if (opt_.check_restore && !matches(snap, nb, ne)) ++stats_.restore_violations;
    }

    /// One Tarjan pass on the freshly reduced view; expresses the new
    /// deletable set against the parent as (removed list, at most one added
    /// vertex) and applies it to the flags. Returns the added vertex or -1.
    Vertex update_deletable_incremental(Vertex deleted) {
        finder_.run(view_);
        std::size_t removed_begin = removed_buf_.size();
        Vertex added = -1;
        int added_count = 0;
        for (Vertex v = 0; v < g_.n; ++v) {
            if (!view_.alive(v)) continue;
            bool now = !finder_.is_articulation(v);
            if (deletable_[v] && !now) {
                removed_buf_.push_back(v);
                deletable_[v] = 0;
            } else if (!deletable_[v] && now) {
                ++added_count;
                if (added_count > 1)
                    throw std::logic_error(
                        "more than one vertex became deletable after a single deletion");
                added = v;
                deletable_[v] = 1;
            }
        }
        if (added_count > stats_.max_newly_deletable)
            stats_.max_newly_deletable = added_count;
        levels_.push_back({deleted, removed_begin, added});
        return added;
    }

    /// Pops one delta level: deletable flags, alive set and (bit-matrix)
    /// rows return to their pre-deletion state.
    void restore_level() {
        if (levels_.empty()) throw std::logic_error("restore_level: delta log empty");
        const DeltaLevel& lvl = levels_.back();
        while (removed_buf_.size() > lvl.removed_begin) {
            deletable_[removed_buf_.back()] = 1;
            removed_buf_.pop_back();
        }
        if (lvl.added >= 0) deletable_[lvl.added] = 0;
        levels_.pop_back();
        view_.restore_last();
    }

    void emit_alive() {
        if (sink_.wants_sets()) {
            sink_.emit(view_.alive_vertices());
        } else {
            sink_.emit(empty_);
        }
    }

    struct Snapshot {
        std::vector<char> alive, deletable;
        std::vector<Vertex> y, segment;
        std::size_t levels = 0;
    };

    Snapshot take_snapshot(std::size_t nb, std::size_t ne) const {
        Snapshot s;
        s.alive.resize(g_.n);
        for (Vertex v = 0; v < g_.n; ++v) s.alive[v] = view_.alive(v);
        s.deletable = deletable_;
        s.y = y_.members();
        s.segment.assign(nbuf_.begin() + nb, nbuf_.begin() + ne);
        s.levels = levels_.size();
        return s;
    }

    bool matches(const Snapshot& s, std::size_t nb, std::size_t ne) const {
        if (s.y != y_.members() || s.deletable != deletable_ || s.levels != levels_.size())
            return false;
        for (Vertex v = 0; v < g_.n; ++v)
            if (s.alive[v] != static_cast<char>(view_.alive(v))) return false;
        if (nbuf_.size() < ne) return false;
        return std::equal(s.segment.begin(), s.segment.end(), nbuf_.begin() + nb);
    }

    const Graph& g_;
    View view_;
    int k_;
    SubgraphSink& sink_;
    EnumOptions opt_;
    VertexSetView y_;
    std::vector<char> deletable_;
    std::vector<Vertex> nbuf_;         // per-level candidate segments
    std::vector<Vertex> removed_buf_;  // per-level removed-from-N records
    std::vector<DeltaLevel> levels_;
    ArticulationFinder<View> finder_;
    ConnectivityChecker conn_;
    std::vector<Vertex> empty_;
    std::uint64_t look_ahead_emissions_ = 0;
    RunStats stats_;

public:
    std::uint64_t look_ahead_emissions() const { return look_ahead_emissions_; }
};

}  // namespace detail

/// TopDown over the chosen storage backend. Requires a connected graph and
/// 1 <= k <= n.
inline RunStats enumerate_topdown(const Graph& g, int k, SubgraphSink& sink,
                                  Backend backend = Backend::list,
                                  const EnumOptions& opt = {}) {
    require_order_in_range(k, g.n);
    if (backend == Backend::bit_matrix)
        return detail::TopDownRun<BitMatrixView>(g, k, sink, opt).run();
    return detail::TopDownRun<ListView>(g, k, sink, opt).run();
}

}  // namespace cise
