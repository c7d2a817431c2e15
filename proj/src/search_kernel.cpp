#include "zsum/detail/search_kernel.hpp"

#include "zsum/error.hpp"

#include <algorithm>

namespace zsum::detail {

namespace {

SymmetryRule pick_symmetry(const Group& g, const SearchConfig& cfg) {
    if (!cfg.symmetry_reduction || cfg.stem || g.rank() == 0 || !g.is_homocyclic())
        return SymmetryRule::None;
    const int n = g.exponent();
    bool prime = n >= 2;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) prime = false;
    return prime ? SymmetryRule::PrimeFlag : SymmetryRule::PinFirst;
}

}  // namespace

int default_horizon(const Group& g, const LengthSet& lengths) {
    if (lengths.kind() == LengthSet::Kind::AllPositive || lengths.kind() == LengthSet::Kind::Interval)
        return 0;
    return 4 * g.d_star() + *lengths.max();
}

KernelSpec::KernelSpec(const Group& g, const LengthSet& l, const SearchConfig& cfg, SearchMode m,
                       int target_length)
    : group(g),
      ar(g),
      lengths(l),
      mode(m),
      target(target_length),
      node_budget(cfg.node_budget),
      time_budget(cfg.time_budget) {
    if (l.kind() == LengthSet::Kind::AllPositive) {
        shift = 0;
        cap_mask = 1;
        check_mask = 1;
    } else {
        const int top = *l.max();
        if (top > 64)
            throw Error(ErrorKind::ResourceLimit, "length sets with members above 64 are not supported");
        cap_mask = top == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top) - 1;
        for (int member : l.members()) check_mask |= std::uint64_t{1} << (member - 1);
    }
    horizon = mode == SearchMode::Maximize ? (cfg.horizon > 0 ? cfg.horizon : default_horizon(g, l)) : 0;

    solo_cap.resize(ar.order());
    for (std::uint32_t h = 0; h < ar.order(); ++h) {
        // h^t has zero-sums exactly at the multiples of ord(h) up to t
        const int o = ar.order_of(h);
        int t = 0;
        while (true) {
            const int next = t + 1;
            if (next % o == 0 && l.contains(next)) break;
            if (next > 4096) break;  // never reached when L hits a multiple of exp
            t = next;
        }
        solo_cap[h] = t;
    }

    symmetry = pick_symmetry(g, cfg);
    if (symmetry == SymmetryRule::PrimeFlag) {
        std::uint32_t p = 1;
        for (int d = 0; d <= g.rank(); ++d) {
            flag_index.push_back(p);
            p *= static_cast<std::uint32_t>(g.exponent());
        }
    }
    if (cfg.stem) {
        if (!(cfg.stem->group() == g))
            throw Error(ErrorKind::GroupMismatch, "stem is not a sequence over " + g.to_string());
        stem = cfg.stem->expanded_indices();
    }
}

Walker::Walker(const KernelSpec& spec, SharedState& shared) : spec_(spec), shared_(shared) {
    reach_.emplace_back(spec_.ar.order(), 0);
    reach_[0][0] = 1;  // empty subsequence
    dim_.push_back(0);
    pinned_.push_back(0);
}

bool Walker::reset_to(const std::vector<std::uint32_t>& path) {
    while (!path_.empty()) pop();
    std::uint32_t last = 0;
    for (std::uint32_t g : path) {
        if (g < last || g >= spec_.ar.order()) return false;
        if (!appendable(g) || !symmetry_allows(g)) return false;
        push(g);
        last = g;
    }
    return true;
}

bool Walker::appendable(std::uint32_t g) const noexcept {
    // a new zero-sum containing the new copy of g needs a prefix subsequence
    // with sum -g and length l - 1, l in L
    return (reach_[path_.size()][spec_.ar.neg(g)] & spec_.check_mask) == 0;
}

bool Walker::symmetry_allows(std::uint32_t g) const noexcept {
    const std::size_t d = path_.size();
    switch (spec_.symmetry) {
    case SymmetryRule::None: return true;
    case SymmetryRule::PrimeFlag: {
        // the span of the flag u_r, ..., u_{r-dim+1} is exactly the indices < n^dim
        const int dim = dim_[d];
        return g < spec_.flag_index[static_cast<std::size_t>(dim)] ||
               (dim < spec_.group.rank() && g == spec_.flag_index[static_cast<std::size_t>(dim)]);
    }
    case SymmetryRule::PinFirst:
        return pinned_[d] || spec_.ar.order_of(g) != spec_.group.exponent() || g == 1;
    }
    return true;
}

void Walker::push(std::uint32_t g) {
    const std::size_t d = path_.size();
    if (reach_.size() <= d + 1) {
        reach_.emplace_back(spec_.ar.order(), 0);
        dim_.push_back(0);
        pinned_.push_back(0);
    }
    const std::uint64_t* src = reach_[d].data();
    std::uint64_t* dst = reach_[d + 1].data();
    const std::uint32_t order = spec_.ar.order();
    const std::uint32_t* minus = spec_.ar.minus_row(g);
    if (minus == nullptr) {
        spec_.ar.fill_minus_row(g, scratch_);
        minus = scratch_.data();
    }
    const std::uint64_t cap = spec_.cap_mask;
    const int shift = spec_.shift;
    for (std::uint32_t h = 0; h < order; ++h) dst[h] = src[h] | ((src[minus[h]] << shift) & cap);

    int dim = dim_[d];
    if (spec_.symmetry == SymmetryRule::PrimeFlag && dim < spec_.group.rank() &&
        g == spec_.flag_index[static_cast<std::size_t>(dim)])
        ++dim;
    dim_[d + 1] = dim;
    pinned_[d + 1] = pinned_[d] || g == 1;
    path_.push_back(g);
}

void Walker::pop() noexcept { path_.pop_back(); }

int Walker::capacity_bound() const noexcept {
    const std::size_t d = path_.size();
    const std::uint32_t last = path_.empty() ? 0 : path_.back();
    int last_count = 0;
    for (std::size_t i = path_.size(); i-- > 0 && path_[i] == last;) ++last_count;
    const auto& reach = reach_[d];
    long long bound = 0;
    for (std::uint32_t h = last; h < spec_.ar.order(); ++h) {
        if ((reach[spec_.ar.neg(h)] & spec_.check_mask) != 0) continue;
        bound += spec_.solo_cap[h] - (h == last ? last_count : 0);
    }
    return static_cast<int>(std::min<long long>(bound, 1 << 30));
}

void Walker::flush() {
    if (pending_nodes_ == 0) return;
    shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
    pending_nodes_ = 0;
}

bool Walker::tick() {
    ++out_.stats.nodes;
    if (++pending_nodes_ >= 1024) {
        const std::uint64_t total =
            shared_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed) + pending_nodes_;
        pending_nodes_ = 0;
        if (total >= spec_.node_budget) shared_.stop.fetch_or(kStopBudget);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - shared_.start).count();
        if (elapsed >= spec_.time_budget) shared_.stop.fetch_or(kStopBudget);
    } else if (spec_.node_budget < 1024 &&
               shared_.nodes.load(std::memory_order_relaxed) + pending_nodes_ >= spec_.node_budget) {
        shared_.stop.fetch_or(kStopBudget);
    }
    return shared_.stop.load(std::memory_order_relaxed) == kStopNone;
}

void Walker::run(int split_depth, std::vector<std::vector<std::uint32_t>>* tasks) {
    dfs(split_depth, tasks);
    flush();
}

void Walker::dfs(int split_depth, std::vector<std::vector<std::uint32_t>>* tasks) {
    const int len = static_cast<int>(path_.size());
    if (tasks != nullptr && len == split_depth) {
        tasks->push_back(path_);
        return;
    }
    if (!tick()) return;

    switch (spec_.mode) {
    case SearchMode::Maximize:
        if (len > out_.best_len) {
            out_.best_len = len;
            out_.best = path_;
            int seen = shared_.global_best.load(std::memory_order_relaxed);
            while (len > seen && !shared_.global_best.compare_exchange_weak(seen, len)) {
            }
        }
        if (spec_.horizon > 0 && len >= spec_.horizon) {
            shared_.stop.fetch_or(kStopHorizon);
            return;
        }
        break;
    case SearchMode::Enumerate:
        if (len == spec_.target) {
            out_.collected.push_back(path_);
            return;
        }
        break;
    case SearchMode::Exists:
        if (len == spec_.target) {
            out_.collected.push_back(path_);
            shared_.stop.fetch_or(kStopFound);
            return;
        }
        break;
    }

    const int bound = capacity_bound();
    if (spec_.mode == SearchMode::Maximize) {
        // local cut keeps the first (lexicographically least) maximum; the
        // cross-task cut is strict so no task loses a tie it could win
        if (len + bound <= out_.best_len ||
            len + bound < shared_.global_best.load(std::memory_order_relaxed)) {
            ++out_.stats.pruned_bound;
            return;
        }
    } else if (len + bound < spec_.target) {
        ++out_.stats.pruned_bound;
        return;
    }

    const std::uint32_t order = spec_.ar.order();
    for (std::uint32_t g = path_.empty() ? 0 : path_.back(); g < order; ++g) {
        if (!appendable(g)) {
            ++out_.stats.pruned_zero_sum;
            continue;
        }
        if (!symmetry_allows(g)) {
            ++out_.stats.pruned_symmetry;
            continue;
        }
        push(g);
        dfs(split_depth, tasks);
        pop();
        if (shared_.stop.load(std::memory_order_relaxed) != kStopNone) return;
    }
}

}  // namespace zsum::detail
