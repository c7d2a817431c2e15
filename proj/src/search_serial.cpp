#include "zsum/detail/search_kernel.hpp"
#include "zsum/error.hpp"

namespace zsum {

namespace detail {

// Shared by both kernels: turns the walk outcome into a SearchResult.
SearchResult finish_maximize(const KernelSpec& spec, const SharedState& shared, WalkOutcome&& out) {
    SearchResult r;
    r.stats = out.stats;
    r.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - shared.start).count();
    const int stop = shared.stop.load();
    r.horizon_reached = (stop & kStopHorizon) != 0;
    if (out.best_len >= 0) {
        Sequence w(spec.group);
        for (std::uint32_t idx : out.best) w.append_index(idx);
        r.witness = std::move(w);
    }
    if (stop != kStopNone) {
        r.kind = ValueKind::Unknown;
        return r;
    }
    r.kind = ValueKind::Finite;
    r.value = out.best_len + 1;
    return r;
}

}  // namespace detail

SearchResult search_serial(const Group& g, const LengthSet& lengths, const SearchConfig& cfg) {
    if (is_infinite(g, lengths)) {
        SearchResult r;
        r.kind = ValueKind::Infinite;
        return r;
    }
    const detail::KernelSpec spec(g, lengths, cfg, detail::SearchMode::Maximize, 0);
    detail::SharedState shared;
    detail::Walker walker(spec, shared);
    if (!walker.reset_to(spec.stem))
        throw Error(ErrorKind::InvalidInput, "stem already has a zero-sum subsequence with length in L");
    walker.run();
    return detail::finish_maximize(spec, shared, std::move(walker.outcome()));
}

}  // namespace zsum
