#include "zsum/detail/index_arith.hpp"

#include <algorithm>
#include <numeric>

namespace zsum::detail {

IndexArith::IndexArith(const Group& g, std::uint64_t cap)
    : factors_(g.factors()), rank_(g.rank()) {
    std::vector<Element> all = g.elements(cap);
    order_ = static_cast<std::uint32_t>(all.size());
    stride_.assign(factors_.size(), 1);
    std::uint32_t s = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        stride_[i] = s;
        s *= static_cast<std::uint32_t>(factors_[i]);
    }
    coords_.reserve(std::size_t{order_} * rank_);
    neg_.resize(order_);
    elem_order_.resize(order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
        coords_.insert(coords_.end(), all[a].coords.begin(), all[a].coords.end());
        elem_order_[a] = g.order_of(all[a]);
    }
    for (std::uint32_t a = 0; a < order_; ++a) {
        std::uint32_t idx = 0;
        for (int i = 0; i < rank_; ++i) {
            int c = coords(a)[i];
            idx += stride_[static_cast<std::size_t>(i)] *
                   static_cast<std::uint32_t>(c == 0 ? 0 : factors_[static_cast<std::size_t>(i)] - c);
        }
        neg_[a] = idx;
    }
    if (order_ <= kTableLimit) {
        std::vector<std::uint32_t> diff(std::size_t{order_} * order_);
        for (std::uint32_t a = 0; a < order_; ++a)
            for (std::uint32_t b = 0; b < order_; ++b) diff[std::size_t{b} * order_ + a] = combine(a, b, -1);
        diff_ = std::move(diff);
    }
}

std::uint32_t IndexArith::combine(std::uint32_t a, std::uint32_t b, int sign) const noexcept {
    const int* ca = coords(a);
    const int* cb = coords(b);
    std::uint32_t idx = 0;
    for (int i = 0; i < rank_; ++i) {
        const int n = factors_[static_cast<std::size_t>(i)];
        int c = ca[i] + sign * cb[i];
        if (c >= n) c -= n;
        else if (c < 0) c += n;
        idx += stride_[static_cast<std::size_t>(i)] * static_cast<std::uint32_t>(c);
    }
    return idx;
}

void IndexArith::fill_minus_row(std::uint32_t b, std::vector<std::uint32_t>& out) const {
    out.resize(order_);
    if (const std::uint32_t* row = minus_row(b)) {
        std::copy(row, row + order_, out.begin());
        return;
    }
    for (std::uint32_t h = 0; h < order_; ++h) out[h] = combine(h, b, -1);
}

std::uint32_t IndexArith::times(long long c, std::uint32_t a) const noexcept {
    const int* ca = coords(a);
    std::uint32_t idx = 0;
    for (int i = 0; i < rank_; ++i) {
        const long long n = factors_[static_cast<std::size_t>(i)];
        long long v = (c % n) * ca[i] % n;
        if (v < 0) v += n;
        idx += stride_[static_cast<std::size_t>(i)] * static_cast<std::uint32_t>(v);
    }
    return idx;
}

}  // namespace zsum::detail
