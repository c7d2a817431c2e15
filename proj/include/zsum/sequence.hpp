#pragma once

#include "zsum/bigint.hpp"
#include "zsum/group.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zsum {

/// The admissible zero-sum lengths L of s_L(G). Members are >= 1.
class LengthSet {
public:
    enum class Kind { Interval, Singleton, Explicit, AllPositive };

    static LengthSet interval(int k);   ///< [1, k], k >= 1
    static LengthSet singleton(int m);  ///< {m}, m >= 1
    static LengthSet explicit_set(std::set<int> members);
    static LengthSet all_positive();

    Kind kind() const noexcept { return kind_; }
    bool contains(int len) const noexcept;
    /// Largest member; nullopt for AllPositive.
    std::optional<int> max() const noexcept;
    /// Members in increasing order; AllPositive is not enumerable.
    const std::set<int>& members() const;

    /// `[1,4]`, `{3}`, `{2,4,6}`, `N`.
    std::string to_string() const;

    friend bool operator==(const LengthSet&, const LengthSet&) = default;

private:
    Kind kind_ = Kind::AllPositive;
    std::set<int> members_;
};

/// A finite multiset over a group. Terms are kept as (element index,
/// multiplicity) pairs sorted by index, so equal multisets compare equal
/// regardless of how they were built. The order in which distinct elements
/// were first added is remembered for display only.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(Group g) : group_(std::move(g)) {}

    static Sequence from_elements(const Group& g, const std::vector<Element>& terms);
    /// `1,0^2; 0,1^2; 1,1^1`; an empty string is the empty sequence.
    static Sequence parse(const Group& g, std::string_view text);

    /// Appends `mult` copies of `e`; throws GroupMismatch for foreign elements.
    Sequence& append(const Element& e, int mult = 1);
    Sequence& append_index(std::uint32_t index, int mult = 1);

    const Group& group() const noexcept { return group_; }
    std::size_t length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }
    int multiplicity(const Element& e) const;
    int height() const noexcept;  ///< h(S)
    std::vector<Element> support() const;

    /// (index, multiplicity), sorted by index.
    const std::vector<std::pair<std::uint32_t, int>>& indexed_terms() const noexcept { return terms_; }
    std::vector<std::pair<Element, int>> terms() const;
    /// Every term with repetition, nondecreasing index.
    std::vector<std::uint32_t> expanded_indices() const;

    std::string to_text() const;

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }
    /// Lexicographic on the expanded index vector (shorter prefix first).
    friend bool operator<(const Sequence& a, const Sequence& b);

private:
    Group group_;
    std::vector<std::pair<std::uint32_t, int>> terms_;
    std::vector<std::uint32_t> display_order_;
    std::size_t length_ = 0;
};

Element sigma(const Sequence& s);

/// Default cap on |G| * (|S| + 1) cells for subsequence tables.
inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 28;

/// table[g][l] is true iff some subsequence (possibly empty) of S has sum g and
/// length l.
class FeasibilityTable {
public:
    FeasibilityTable(std::uint64_t group_order, std::size_t max_len)
        : stride_(max_len + 1), cells_(group_order * (max_len + 1), 0) {}

    bool at(std::uint32_t g, std::size_t len) const noexcept {
        return len < stride_ && cells_[g * stride_ + len] != 0;
    }
    void set(std::uint32_t g, std::size_t len) noexcept { cells_[g * stride_ + len] = 1; }
    std::size_t max_length() const noexcept { return stride_ - 1; }

private:
    std::size_t stride_;
    std::vector<std::uint8_t> cells_;
};

FeasibilityTable feasibility(const Sequence& s, std::uint64_t cap = kDefaultTableCap);

/// Least l >= 1 such that S has a zero-sum subsequence of length l.
std::optional<int> min_zero_sum_length(const Sequence& s);
bool has_zero_sum_in(const Sequence& s, const LengthSet& lengths);

/// N_g^k(S): index subsets of size k with sum g. N_0^0 = 1.
BigInt count_subseq(const Sequence& s, const Element& g, int k);
/// N_g^k(S) mod m, m >= 1.
std::uint64_t count_subseq_mod(const Sequence& s, const Element& g, int k, std::uint64_t m);
/// All N_g^l(S), indexed [element index][l], l in [0, |S|].
std::vector<std::vector<BigInt>> count_table(const Sequence& s, std::uint64_t cap = kDefaultTableCap);

/// (N_g^+ mod p, N_g^- mod p): even-length (empty included) and odd-length
/// index subsets with sum g.
std::pair<std::uint64_t, std::uint64_t> n_plus_minus(const Sequence& s, const Element& g, std::uint64_t p);

}  // namespace zsum
