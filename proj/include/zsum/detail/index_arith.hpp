#pragma once

#include "zsum/group.hpp"

#include <cstdint>
#include <vector>

namespace zsum::detail {

// Arithmetic on dense element indices. Coordinates of every index are cached,
// and for small groups the full difference table is too.
class IndexArith {
public:
    static constexpr std::uint64_t kTableLimit = 1024;

    explicit IndexArith(const Group& g, std::uint64_t cap = kDefaultOrderCap);

    std::uint32_t order() const noexcept { return order_; }
    int rank() const noexcept { return rank_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        if (!diff_.empty()) return diff_[std::size_t{neg_[b]} * order_ + a];
        return combine(a, b, +1);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        if (!diff_.empty()) return diff_[std::size_t{b} * order_ + a];
        return combine(a, b, -1);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return neg_[a]; }
    std::uint32_t times(long long c, std::uint32_t a) const noexcept;
    int order_of(std::uint32_t a) const noexcept { return elem_order_[a]; }
    const int* coords(std::uint32_t a) const noexcept { return &coords_[std::size_t{a} * rank_]; }
    /// h - b for every h in index order, or nullptr when the table is not cached.
    const std::uint32_t* minus_row(std::uint32_t b) const noexcept {
        return diff_.empty() ? nullptr : &diff_[std::size_t{b} * order_];
    }
    /// Fills out[h] = h - b.
    void fill_minus_row(std::uint32_t b, std::vector<std::uint32_t>& out) const;

private:
    std::uint32_t combine(std::uint32_t a, std::uint32_t b, int sign) const noexcept;

    std::vector<int> factors_;
    std::vector<std::uint32_t> stride_;
    std::uint32_t order_ = 1;
    int rank_ = 0;
    std::vector<int> coords_;
    std::vector<std::uint32_t> neg_;
    std::vector<int> elem_order_;
    std::vector<std::uint32_t> diff_;  // diff_[b * order + a] = a - b
};

}  // namespace zsum::detail
