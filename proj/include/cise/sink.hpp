#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "cise/graph.hpp"

namespace cise {

/// Consumer of enumerated vertex sets. Counting sinks opt out of set
/// materialization so that count-only runs never build the vertex list.
class SubgraphSink {
public:
    virtual ~SubgraphSink() = default;

    virtual bool wants_sets() const { return true; }

    /// Called once per enumerated subgraph. `vs` holds internal ids in
    /// unspecified order; may be empty when wants_sets() is false.
    virtual void emit(const std::vector<Vertex>& vs) = 0;

    std::uint64_t emitted() const { return emitted_; }

protected:
    std::uint64_t emitted_ = 0;
};

class CountSink final : public SubgraphSink {
public:
    bool wants_sets() const override { return false; }
    void emit(const std::vector<Vertex>&) override { ++emitted_; }
};

/// Stores a canonical (ascending) copy of every emitted set.
class CollectSink final : public SubgraphSink {
public:
    void emit(const std::vector<Vertex>& vs) override {
        ++emitted_;
        sets.push_back(vs);
        std::sort(sets.back().begin(), sets.back().end());
    }

    /// Sets sorted lexicographically, for order-insensitive comparison.
    std::vector<std::vector<Vertex>> canonical() const {
        auto out = sets;
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<std::vector<Vertex>> sets;
};

/// Writes one line per set: ascending internal id order, mapped to the
/// original input labels, single spaces, LF.
class WriteSink final : public SubgraphSink {
public:
    WriteSink(std::ostream& out, const Graph& g) : out_(&out), g_(&g) {}

    void emit(const std::vector<Vertex>& vs) override {
        ++emitted_;
        scratch_ = vs;
        std::sort(scratch_.begin(), scratch_.end());
        bool first = true;
        for (Vertex v : scratch_) {
            if (!first) *out_ << ' ';
            first = false;
            *out_ << g_->labels[v];
        }
        *out_ << '\n';
        if (!*out_) throw std::runtime_error("write failure on output stream");
    }

private:
    std::ostream* out_;
    const Graph* g_;
    std::vector<Vertex> scratch_;
};

/// Maps component-local ids back to ids of the loaded graph before
/// forwarding. Used by the harness when it splits components.
class TranslateSink final : public SubgraphSink {
public:
    TranslateSink(SubgraphSink& inner, const std::vector<Vertex>& to_global)
        : inner_(&inner), to_global_(&to_global) {}

    bool wants_sets() const override { return inner_->wants_sets(); }

    void emit(const std::vector<Vertex>& vs) override {
        ++emitted_;
        scratch_.clear();
        for (Vertex v : vs) scratch_.push_back((*to_global_)[v]);
        inner_->emit(scratch_);
    }

private:
    SubgraphSink* inner_;
    const std::vector<Vertex>* to_global_;
    std::vector<Vertex> scratch_;
};

}  // namespace cise
