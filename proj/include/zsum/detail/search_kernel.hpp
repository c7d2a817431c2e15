#pragma once

#include "zsum/detail/index_arith.hpp"
#include "zsum/search.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <vector>

namespace zsum::detail {

enum class SearchMode { Maximize, Enumerate, Exists };

enum class SymmetryRule { None, PrimeFlag, PinFirst };

// Immutable description of one search, shared read-only by every walker.
struct KernelSpec {
    KernelSpec(const Group& g, const LengthSet& lengths, const SearchConfig& cfg, SearchMode mode,
               int target_length);

    Group group;
    IndexArith ar;
    LengthSet lengths;
    SearchMode mode;
    int target = 0;   // Enumerate / Exists: exact length wanted
    int horizon = 0;  // Maximize: 0 = none

    // Reach tables hold, per element h, a bitmask of subsequence lengths with
    // sum h. Bit l stands for length l (lengths >= max(L) are dropped); for
    // L = N a single bit means "reachable" and shift is 0.
    std::uint64_t check_mask = 0;
    std::uint64_t cap_mask = 0;
    int shift = 1;
    std::vector<int> solo_cap;  // largest t with h^t L-free

    SymmetryRule symmetry = SymmetryRule::None;
    std::vector<std::uint32_t> flag_index;  // PrimeFlag: n^d, index of u_{r-d}

    std::vector<std::uint32_t> stem;
    std::uint64_t node_budget;
    double time_budget;
};

enum StopReason : int { kStopNone = 0, kStopBudget = 1, kStopHorizon = 2, kStopFound = 4 };

struct SharedState {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> stop{kStopNone};
    std::atomic<int> global_best{-1};
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

struct WalkOutcome {
    int best_len = -1;
    std::vector<std::uint32_t> best;
    std::vector<std::vector<std::uint32_t>> collected;
    SearchStats stats;
};

class Walker {
public:
    Walker(const KernelSpec& spec, SharedState& shared);

    /// Replays `path` from the empty sequence. false if some prefix is not
    /// L-free or breaks the symmetry rule.
    bool reset_to(const std::vector<std::uint32_t>& path);

    /// DFS below the current node. When `split_depth` >= 0, nodes of that
    /// length are appended to `tasks` instead of being explored.
    void run(int split_depth = -1, std::vector<std::vector<std::uint32_t>>* tasks = nullptr);

    WalkOutcome& outcome() noexcept { return out_; }
    /// Flushes the locally counted nodes into the shared counter.
    void flush();

private:
    bool appendable(std::uint32_t g) const noexcept;
    bool symmetry_allows(std::uint32_t g) const noexcept;
    void push(std::uint32_t g);
    void pop() noexcept;
    int capacity_bound() const noexcept;
    bool tick();
    void dfs(int split_depth, std::vector<std::vector<std::uint32_t>>* tasks);

    const KernelSpec& spec_;
    SharedState& shared_;
    std::vector<std::vector<std::uint64_t>> reach_;  // reach_[d] for prefix length d
    std::vector<int> dim_;                           // flag dimension per depth
    std::vector<std::uint8_t> pinned_;
    std::vector<std::uint32_t> path_;
    std::vector<std::uint32_t> scratch_;
    std::uint64_t pending_nodes_ = 0;
    WalkOutcome out_;
};

int default_horizon(const Group& g, const LengthSet& lengths);

/// Cuts the tree at stem + depth and walks the subtrees as OpenMP tasks;
/// merge order is the DFS order of the cut, independent of scheduling.
WalkOutcome walk_partitioned(const KernelSpec& spec, SharedState& shared, int depth, int workers);

SearchResult finish_maximize(const KernelSpec& spec, const SharedState& shared, WalkOutcome&& out);

}  // namespace zsum::detail
