#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "cise/graph.hpp"

namespace cise {

/// Storage backend for the deletion-aware graph view.
enum class Backend { list, bit_matrix };

inline const char* to_string(Backend b) {
    return b == Backend::list ? "list" : "bitmatrix";
}

namespace detail {

class ViewBase {
public:
    explicit ViewBase(const Graph& g) : base_(&g), alive_(g.n, 1), alive_count_(g.n) {}

    const Graph& base() const { return *base_; }
    int n() const { return base_->n; }
    bool alive(Vertex v) const { return alive_[v] != 0; }
    int alive_count() const { return alive_count_; }
    std::size_t deleted_count() const { return deletion_stack_.size(); }

    std::vector<Vertex> alive_vertices() const {
        std::vector<Vertex> vs;
        vs.reserve(alive_count_);
        for (Vertex v = 0; v < base_->n; ++v)
            if (alive_[v]) vs.push_back(v);
        return vs;
    }

protected:
    void mark_deleted(Vertex v) {
        if (!alive_[v]) throw std::logic_error("delete_vertex: vertex already deleted");
        alive_[v] = 0;
        --alive_count_;
        deletion_stack_.push_back(v);
    }

    Vertex unmark_last() {
        if (deletion_stack_.empty())
            throw std::logic_error("restore_last: deletion stack empty");
        Vertex v = deletion_stack_.back();
        deletion_stack_.pop_back();
        alive_[v] = 1;
        ++alive_count_;
        return v;
    }

    const Graph* base_;
    std::vector<char> alive_;
    int alive_count_;
    std::vector<Vertex> deletion_stack_;
};

}  // namespace detail

/// Adjacency-list view: deletion is logical, reads are alive-masked.
class ListView : public detail::ViewBase {
public:
    explicit ListView(const Graph& g) : detail::ViewBase(g) {}

    void delete_vertex(Vertex v) { mark_deleted(v); }
    void restore_last() { unmark_last(); }

    /// Calls f(u) for every alive neighbor of v.
    template <typename F>
    void for_each_neighbor(Vertex v, F&& f) const {
        for (Vertex u : base_->adjacency[v])
            if (alive_[u]) f(u);
    }
};

/// Bit-matrix view: its own copy of the adjacency rows in one flat buffer,
/// updated in O(deg) word operations per deletion so that row v always
/// equals the set of alive neighbors of an alive v.
class BitMatrixView : public detail::ViewBase {
public:
    explicit BitMatrixView(const Graph& g)
        : detail::ViewBase(g), words_((static_cast<std::size_t>(g.n) + 63) / 64) {
        rows_.assign(static_cast<std::size_t>(g.n) * words_, 0);
        if (g.has_bitrows()) {
            for (Vertex v = 0; v < g.n; ++v)
                std::copy(g.bitrows[v].begin(), g.bitrows[v].end(),
                          rows_.begin() + static_cast<std::size_t>(v) * words_);
        } else {
            for (Vertex v = 0; v < g.n; ++v) {
                std::uint64_t* row = rows_.data() + static_cast<std::size_t>(v) * words_;
                for (Vertex u : g.adjacency[v])
                    row[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
            }
        }
    }

    void delete_vertex(Vertex v) {
        mark_deleted(v);
        const std::uint64_t mask = ~(std::uint64_t{1} << (v & 63));
        const std::size_t word = static_cast<std::size_t>(v) >> 6;
        for (Vertex u : base_->adjacency[v])
            if (alive_[u]) rows_[static_cast<std::size_t>(u) * words_ + word] &= mask;
    }

    void restore_last() {
        Vertex v = unmark_last();
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        const std::size_t word = static_cast<std::size_t>(v) >> 6;
        for (Vertex u : base_->adjacency[v])
            if (alive_[u]) rows_[static_cast<std::size_t>(u) * words_ + word] |= bit;
    }

    std::size_t words() const { return words_; }

    const std::uint64_t* row(Vertex v) const {
        return rows_.data() + static_cast<std::size_t>(v) * words_;
    }

    /// Alive-edge test between u and a vertex v alive in u's row.
    bool edge_bit(Vertex u, Vertex v) const {
        return (row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    template <typename F>
    void for_each_neighbor(Vertex v, F&& f) const {
        const std::uint64_t* r = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word) {
                int bit = __builtin_ctzll(word);
                word &= word - 1;
                f(static_cast<Vertex>(w * 64 + bit));
            }
        }
    }

private:
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

}  // namespace cise
