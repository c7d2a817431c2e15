#include "zsum/detail/search_kernel.hpp"
#include "zsum/error.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zsum {

namespace detail {

namespace {

bool better(int len_a, const std::vector<std::uint32_t>& a, int len_b, const std::vector<std::uint32_t>& b) {
    if (len_a != len_b) return len_a > len_b;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

WalkOutcome walk_partitioned(const KernelSpec& spec, SharedState& shared, int depth, int workers) {
    Walker top(spec, shared);
    if (!top.reset_to(spec.stem))
        throw Error(ErrorKind::InvalidInput, "stem already has a zero-sum subsequence with length in L");
    std::vector<std::vector<std::uint32_t>> tasks;
    const int split = static_cast<int>(spec.stem.size()) + std::max(depth, 1);
    top.run(split, &tasks);
    WalkOutcome merged = std::move(top.outcome());
    merged.stats.subtasks = tasks.size();

    std::vector<WalkOutcome> results(tasks.size());
#ifdef _OPENMP
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (shared.stop.load(std::memory_order_relaxed) != kStopNone) continue;
        Walker w(spec, shared);
        w.reset_to(tasks[i]);
        w.run();
        results[i] = std::move(w.outcome());
    }
    (void)workers;

    for (auto& r : results) {
        merged.stats.nodes += r.stats.nodes;
        merged.stats.pruned_bound += r.stats.pruned_bound;
        merged.stats.pruned_symmetry += r.stats.pruned_symmetry;
        merged.stats.pruned_zero_sum += r.stats.pruned_zero_sum;
        if (r.best_len >= 0 && better(r.best_len, r.best, merged.best_len, merged.best)) {
            merged.best_len = r.best_len;
            merged.best = std::move(r.best);
        }
        for (auto& c : r.collected) merged.collected.push_back(std::move(c));
    }
    return merged;
}

}  // namespace detail

SearchResult search_parallel(const Group& g, const LengthSet& lengths, const SearchConfig& cfg) {
    if (is_infinite(g, lengths)) {
        SearchResult r;
        r.kind = ValueKind::Infinite;
        return r;
    }
    const detail::KernelSpec spec(g, lengths, cfg, detail::SearchMode::Maximize, 0);
    detail::SharedState shared;
    auto out = detail::walk_partitioned(spec, shared, cfg.parallel_depth, cfg.workers);
    return detail::finish_maximize(spec, shared, std::move(out));
}

}  // namespace zsum
