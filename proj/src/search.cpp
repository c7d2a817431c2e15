#include "zsum/search.hpp"

#include "zsum/detail/search_kernel.hpp"
#include "zsum/error.hpp"

#include <algorithm>
#include <set>

namespace zsum {

bool is_infinite(const Group& g, const LengthSet& lengths) {
    if (lengths.kind() == LengthSet::Kind::AllPositive) return false;
    const int e = g.exponent();
    for (int m : lengths.members())
        if (m % e == 0) return false;
    return true;
}

SearchResult s_L(const Group& g, const LengthSet& lengths, const SearchConfig& cfg) {
    if (cfg.parallel_depth < 0) throw Error(ErrorKind::InvalidInput, "parallel_depth must be >= 0");
    if (cfg.node_budget == 0 || !(cfg.time_budget > 0))
        throw Error(ErrorKind::InvalidInput, "search budgets must be positive");
    return cfg.parallel_depth == 0 ? search_serial(g, lengths, cfg) : search_parallel(g, lengths, cfg);
}

SearchResult davenport(const Group& g, const SearchConfig& cfg) {
    return s_L(g, LengthSet::all_positive(), cfg);
}

SearchResult s_leq(const Group& g, int k, const SearchConfig& cfg) {
    return s_L(g, LengthSet::interval(k), cfg);
}

SearchResult eta(const Group& g, const SearchConfig& cfg) {
    return s_L(g, LengthSet::interval(g.exponent()), cfg);
}

SearchResult s_egz(const Group& g, const SearchConfig& cfg) {
    return s_L(g, LengthSet::singleton(g.exponent()), cfg);
}

SearchResult s_kexp(const Group& g, int k, const SearchConfig& cfg) {
    if (k < 1) throw Error(ErrorKind::InvalidInput, "k must be >= 1");
    return s_L(g, LengthSet::singleton(k * g.exponent()), cfg);
}

Sequence canonical_form(const Sequence& s, const std::vector<Automorphism>& autos) {
    const Group& g = s.group();
    std::vector<std::uint32_t> best = s.expanded_indices();
    std::vector<std::uint32_t> img;
    for (const auto& phi : autos) {
        img.clear();
        for (const auto& [e, m] : s.terms()) img.insert(img.end(), static_cast<std::size_t>(m), g.index_of(phi.apply(e)));
        std::sort(img.begin(), img.end());
        if (img < best) best = img;
    }
    Sequence out(g);
    for (std::uint32_t idx : best) out.append_index(idx);
    return out;
}

namespace {

struct Collected {
    std::vector<std::vector<std::uint32_t>> paths;
    bool complete = true;
    bool found = false;
};

Collected collect(const Group& g, const LengthSet& lengths, int length, const SearchConfig& cfg,
                  detail::SearchMode mode) {
    const detail::KernelSpec spec(g, lengths, cfg, mode, length);
    detail::SharedState shared;
    detail::WalkOutcome out;
    if (cfg.parallel_depth > 0 && static_cast<int>(spec.stem.size()) + cfg.parallel_depth < length) {
        out = detail::walk_partitioned(spec, shared, cfg.parallel_depth, cfg.workers);
    } else {
        detail::Walker w(spec, shared);
        if (!w.reset_to(spec.stem)) return Collected{{}, true, false};
        w.run();
        out = std::move(w.outcome());
    }
    Collected c;
    c.paths = std::move(out.collected);
    const int stop = shared.stop.load();
    c.found = !c.paths.empty();
    c.complete = (stop & detail::kStopBudget) == 0;
    return c;
}

ExtremalSet finalize(const Group& g, std::vector<Sequence> seqs, bool up_to_automorphism, bool complete) {
    ExtremalSet set;
    set.complete = complete;
    set.up_to_automorphism = up_to_automorphism;
    if (up_to_automorphism) {
        const auto autos = enumerate_automorphisms(g);
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& s : seqs) {
            Sequence c = canonical_form(s, autos);
            if (seen.insert(c.expanded_indices()).second) set.sequences.push_back(std::move(c));
        }
    } else {
        set.sequences = std::move(seqs);
    }
    std::sort(set.sequences.begin(), set.sequences.end());
    set.sequences.erase(std::unique(set.sequences.begin(), set.sequences.end()), set.sequences.end());
    return set;
}

}  // namespace

ExtremalSet enumerate_extremal(const Group& g, const LengthSet& lengths, int length,
                               const SearchConfig& cfg, bool up_to_automorphism) {
    if (length < 1) throw Error(ErrorKind::InvalidInput, "length must be >= 1");
    if (up_to_automorphism && !g.is_homocyclic())
        throw Error(ErrorKind::UnsupportedGroup, "orbit deduplication needs a homocyclic group");
    SearchConfig c = cfg;
    c.symmetry_reduction = up_to_automorphism && cfg.symmetry_reduction;
    auto found = collect(g, lengths, length, c, detail::SearchMode::Enumerate);
    std::vector<Sequence> seqs;
    seqs.reserve(found.paths.size());
    for (const auto& p : found.paths) {
        Sequence s(g);
        for (std::uint32_t idx : p) s.append_index(idx);
        seqs.push_back(std::move(s));
    }
    return finalize(g, std::move(seqs), up_to_automorphism, found.complete);
}

ExtremalSet enumerate_minimal_zero_sum(const Group& g, int length, const SearchConfig& cfg,
                                       bool up_to_automorphism) {
    if (length < 1) throw Error(ErrorKind::InvalidInput, "length must be >= 1");
    if (up_to_automorphism && !g.is_homocyclic())
        throw Error(ErrorKind::UnsupportedGroup, "orbit deduplication needs a homocyclic group");
    std::vector<Sequence> seqs;
    bool complete = true;
    if (length == 1) {
        seqs.push_back(Sequence(g).append(g.zero()));
    } else {
        // S zero-sum free  <=>  S * (-sigma(S)) minimal zero-sum
        SearchConfig c = cfg;
        c.symmetry_reduction = up_to_automorphism && cfg.symmetry_reduction;
        auto found = collect(g, LengthSet::all_positive(), length - 1, c, detail::SearchMode::Enumerate);
        complete = found.complete;
        for (const auto& p : found.paths) {
            Sequence s(g);
            for (std::uint32_t idx : p) s.append_index(idx);
            s.append(g.neg(sigma(s)));
            seqs.push_back(std::move(s));
        }
    }
    return finalize(g, std::move(seqs), up_to_automorphism, complete);
}

std::optional<bool> exists_free_sequence(const Group& g, const LengthSet& lengths, int length,
                                         const SearchConfig& cfg) {
    if (length < 0) throw Error(ErrorKind::InvalidInput, "length must be >= 0");
    auto found = collect(g, lengths, length, cfg, detail::SearchMode::Exists);
    if (found.found) return true;
    if (!found.complete) return std::nullopt;
    return false;
}

}  // namespace zsum
