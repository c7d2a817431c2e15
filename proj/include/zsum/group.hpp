#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace zsum {

/// Upper bound on |G| for anything that enumerates the whole group.
inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;

/// An element of a Group: one residue per invariant factor.
struct Element {
    std::vector<int> coords;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

/// A finite abelian group C_{n_1} + ... + C_{n_r} in invariant-factor form,
/// n_1 | n_2 | ... | n_r, every n_i >= 2. The trivial group has r = 0.
///
/// Elements are also addressed by a dense index in [0, |G|): the mixed-radix
/// number with coords[0] most significant. Index order is the lexicographic
/// coordinate order, so index 0 is zero.
class Group {
public:
    Group() = default;

    /// Normal form of the direct sum of cyclic groups of the given orders.
    /// Splits each order into prime powers and re-merges them into a
    /// divisibility chain. Throws Error(InvalidFactor) for entries <= 1.
    static Group make(const std::vector<long long>& raw_factors);

    /// Parses `C3^3`, `C2xC4`, `C2 x C6^2` or `2,4` and normalizes.
    static Group parse(std::string_view text);

    const std::vector<int>& factors() const noexcept { return factors_; }
    int rank() const noexcept { return static_cast<int>(factors_.size()); }
    int exponent() const noexcept { return factors_.empty() ? 1 : factors_.back(); }
    std::uint64_t order() const noexcept { return order_; }
    bool is_homocyclic() const noexcept;
    /// Some prime p with |G| a power of p, or 0 when G is not a p-group.
    /// The trivial group reports 0.
    int p_group_prime() const noexcept;

    int d_star() const noexcept;

    Element zero() const;
    Element basis(int i) const;  ///< e_i, 0-based.
    Element element(std::vector<int> coords) const;  ///< reduces coords mod n_i
    bool contains(const Element& a) const noexcept;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scalar_mul(long long c, const Element& a) const;
    int order_of(const Element& a) const;

    std::uint32_t index_of(const Element& a) const;
    Element element_at(std::uint32_t index) const;

    /// Calls `fn` on every element in index order; enumeration is refused
    /// above `cap` elements with Error(ResourceLimit).
    void for_each_element(const std::function<void(const Element&)>& fn,
                          std::uint64_t cap = kDefaultOrderCap) const;
    std::vector<Element> elements(std::uint64_t cap = kDefaultOrderCap) const;

    /// `C3^3`, `C2xC4`, or `C1` for the trivial group.
    std::string to_string() const;

    friend bool operator==(const Group& a, const Group& b) { return a.factors_ == b.factors_; }

private:
    explicit Group(std::vector<int> factors);
    void check_member(const Element& a) const;

    std::vector<int> factors_;
    std::vector<std::uint32_t> stride_;
    std::uint64_t order_ = 1;
};

/// true when G is in one of the families known to satisfy D(G) = D*(G):
/// rank <= 2, p-groups, p-group + coprime cyclic with D(G') <= 2exp(G')-1,
/// C2+C2m+C2n, C3+C6m+C6n, C2p^a+C2p^b+C2p^c, C2^3+C2n.
/// false means "not known", never "unequal".
bool d_equals_dstar_known(const Group& g);

/// An automorphism of a homocyclic group C_n^r, stored as an r x r matrix
/// acting on coordinate columns.
struct Automorphism {
    int n = 0;
    int r = 0;
    std::vector<int> matrix;  // row-major

    Element apply(const Element& a) const;
    bool is_identity() const noexcept;
};

/// Every invertible r x r matrix mod n, each exactly once, in lexicographic
/// order of the row-major entries (so the identity is not first in general).
/// Throws Error(UnsupportedGroup) unless G is homocyclic; refuses more than
/// `cap` candidate matrices with Error(ResourceLimit).
std::vector<Automorphism> enumerate_automorphisms(const Group& g,
                                                  std::uint64_t cap = 50'000'000);

}  // namespace zsum
