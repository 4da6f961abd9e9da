#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cise {

/// Cooperative cancellation with a wall-clock deadline. Enumerators poll
/// every 2^14 enumeration-tree nodes and unwind cleanly once expired.
class CancelToken {
public:
    static constexpr std::uint64_t poll_interval = 1u << 14;

    explicit CancelToken(double budget_seconds)
        : deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(budget_seconds))) {}

    bool expired() {
        if (expired_) return true;
        expired_ = std::chrono::steady_clock::now() >= deadline_;
        return expired_;
    }

private:
    std::chrono::steady_clock::time_point deadline_;
    bool expired_ = false;
};

/// Per-run switches. Pruning rules are individually disableable so that
/// their neutrality can be checked; `check_restore` turns on shadow-snapshot
/// verification of the pointer-restore discipline at every node exit.
struct EnumOptions {
    bool prune_has_int_leaf = true;
    bool prune_k_component = true;
    bool prune_look_ahead = true;
    bool check_restore = false;
    CancelToken* cancel = nullptr;
};

/// Counters produced by a single enumerator run.
struct RunStats {
    std::uint64_t count = 0;          // sets handed to the sink
    std::uint64_t nodes_visited = 0;  // enumeration-tree nodes
    bool timed_out = false;
    std::uint64_t restore_violations = 0;  // only with check_restore
    int max_newly_deletable = 0;           // TopDown: max additions per level
    std::uint64_t look_ahead_emissions = 0;  // TopDown: sets emitted by look-ahead
};

inline void require_order_in_range(int k, int n) {
    if (k < 1 || k > n)
        throw std::invalid_argument("order k=" + std::to_string(k) +
                                    " out of range [1," + std::to_string(n) + "]");
}

}  // namespace cise
