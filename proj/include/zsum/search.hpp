#pragma once

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace zsum {

struct SearchConfig {
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    double time_budget = std::numeric_limits<double>::infinity();  // seconds
    /// Restrict generation to one flag per Aut(C_n^r) orbit. Ignored for
    /// non-homocyclic groups and when a stem is given.
    bool symmetry_reduction = false;
    /// Depth of the prefix tree cut into independent subtasks; 0 runs the
    /// serial kernel.
    int parallel_depth = 0;
    /// OpenMP thread count for the parallel kernel; 0 keeps the runtime default.
    int workers = 0;
    /// Sequences of this length stop the search with an Unknown value.
    /// 0 selects the default: none for intervals and N, 4 D*(G) + max(L) otherwise.
    int horizon = 0;
    /// Forced prefix: only sequences whose sorted terms begin with the stem
    /// are searched.
    std::optional<Sequence> stem;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_zero_sum = 0;  ///< children rejected by the L-check
    std::uint64_t pruned_bound = 0;     ///< subtrees cut by the capacity bound
    std::uint64_t pruned_symmetry = 0;  ///< children rejected by the flag rule
    std::uint64_t subtasks = 0;
    double seconds = 0;
};

enum class ValueKind { Finite, Infinite, Unknown };

/// s_L(G) = 1 + (longest length of an L-free sequence). `witness` is the
/// lexicographically least (by sorted element index) L-free sequence of
/// length value - 1 among those the search visits.
struct SearchResult {
    ValueKind kind = ValueKind::Unknown;
    int value = 0;  ///< meaningful when kind == Finite
    std::optional<Sequence> witness;
    SearchStats stats;
    bool horizon_reached = false;

    bool complete() const noexcept { return kind != ValueKind::Unknown; }
};

/// Computes s_L(G) by exhaustive DFS. Dispatches to the serial kernel when
/// parallel_depth == 0 and to the OpenMP kernel otherwise.
SearchResult s_L(const Group& g, const LengthSet& lengths, const SearchConfig& cfg = {});

SearchResult davenport(const Group& g, const SearchConfig& cfg = {});
SearchResult s_leq(const Group& g, int k, const SearchConfig& cfg = {});
SearchResult eta(const Group& g, const SearchConfig& cfg = {});
SearchResult s_egz(const Group& g, const SearchConfig& cfg = {});
SearchResult s_kexp(const Group& g, int k, const SearchConfig& cfg = {});

/// Both kernels compute the same value and witness; exposed for tests and the
/// benchmark.
SearchResult search_serial(const Group& g, const LengthSet& lengths, const SearchConfig& cfg);
SearchResult search_parallel(const Group& g, const LengthSet& lengths, const SearchConfig& cfg);

/// true when s_L(G) = infinity, i.e. no member of L is a multiple of exp(G).
bool is_infinite(const Group& g, const LengthSet& lengths);

struct ExtremalSet {
    std::vector<Sequence> sequences;  ///< sorted, lexicographically
    bool up_to_automorphism = false;
    bool complete = true;  ///< false when a budget ran out
};

/// Every sequence of the given length without a zero-sum subsequence whose
/// length lies in L. With `up_to_automorphism` (homocyclic G only) one
/// canonical representative per Aut(G)-orbit is returned.
ExtremalSet enumerate_extremal(const Group& g, const LengthSet& lengths, int length,
                               const SearchConfig& cfg = {}, bool up_to_automorphism = false);

/// Minimal zero-sum sequences of the given length, built from zero-sum free
/// sequences of length - 1 by appending the negated sum.
ExtremalSet enumerate_minimal_zero_sum(const Group& g, int length, const SearchConfig& cfg = {},
                                       bool up_to_automorphism = false);

/// Whether some sequence of exactly `length` terms is L-free; nullopt if the
/// budget ran out first.
std::optional<bool> exists_free_sequence(const Group& g, const LengthSet& lengths, int length,
                                         const SearchConfig& cfg = {});

/// Least image of S (by sorted index vector) over the given automorphisms.
Sequence canonical_form(const Sequence& s, const std::vector<Automorphism>& autos);

}  // namespace zsum
