#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "cise/graph.hpp"

namespace cise {

/// Append-only vertex set with a membership bit-array and saved end-position
/// marks. Restoring to a mark removes exactly the elements appended after it.
class VertexSetView {
public:
    explicit VertexSetView(int n) : membership_(n, 0) {}

    bool contains(Vertex v) const { return membership_[v] != 0; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Vertex>& members() const { return members_; }

    void push(Vertex v) {
        assert(!membership_[v]);
        membership_[v] = 1;
        members_.push_back(v);
    }

    Vertex pop() {
        Vertex v = members_.back();
        members_.pop_back();
        membership_[v] = 0;
        return v;
    }

    /// Masks v's membership while it stays in the array (the element is
    /// conceptually moved out of the set until resume or truncation).
    void suspend(Vertex v) {
        assert(membership_[v]);
        membership_[v] = 0;
    }

    void resume(Vertex v) {
        assert(!membership_[v]);
        membership_[v] = 1;
    }

    std::size_t mark() const { return members_.size(); }

    void restore(std::size_t mark) {
        assert(mark <= members_.size());
        while (members_.size() > mark) pop();
    }

    void save() { saved_.push_back(members_.size()); }

    void restore_saved() {
        assert(!saved_.empty());
        restore(saved_.back());
        saved_.pop_back();
    }

    void clear() {
        while (!members_.empty()) pop();
        saved_.clear();
    }

private:
    std::vector<Vertex> members_;
    std::vector<char> membership_;
    std::vector<std::size_t> saved_;
};

}  // namespace cise
