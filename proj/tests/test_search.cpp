#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "zsum/error.hpp"
#include "zsum/search.hpp"

using namespace zsum;

namespace {

int oracle_s(const Group& g, const LengthSet& l, int cap = 12) {
    return 1 + oracle::longest_free(g, [&](int len) { return l.contains(len); }, cap);
}

}  // namespace

TEST_CASE("small groups against naive multiset search") {
    const std::vector<Group> groups{Group::make({2, 2}), Group::make({3}), Group::make({2, 4}),
                                    Group::make({3, 3}), Group::make({2, 2, 2}), Group::make({5})};
    for (const auto& g : groups) {
        std::vector<LengthSet> sets{LengthSet::all_positive(), LengthSet::interval(g.exponent()),
                                    LengthSet::singleton(g.exponent())};
        for (int k = 1; k < g.d_star(); ++k) sets.push_back(LengthSet::interval(k));
        for (const auto& l : sets) {
            if (is_infinite(g, l)) continue;
            CAPTURE(g.to_string());
            CAPTURE(l.to_string());
            SearchConfig cfg;
            cfg.horizon = 20;
            const auto r = s_L(g, l, cfg);
            REQUIRE(r.kind == ValueKind::Finite);
            CHECK(r.value == oracle_s(g, l));
            REQUIRE(r.witness);
            CHECK(static_cast<int>(r.witness->length()) == r.value - 1);
            CHECK_FALSE(has_zero_sum_in(*r.witness, l));
            cfg.parallel_depth = 2;
            const auto p = s_L(g, l, cfg);
            CHECK(p.value == r.value);
            CHECK(*p.witness == *r.witness);
            cfg.parallel_depth = 0;
            cfg.symmetry_reduction = true;
            CHECK(s_L(g, l, cfg).value == r.value);
        }
    }
}

TEST_CASE("named invariants") {
    CHECK(davenport(Group::make({2, 2, 2})).value == 4);
    CHECK(davenport(Group::make({2, 4})).value == 5);
    CHECK(eta(Group::make({3, 3})).value == 7);
    CHECK(s_egz(Group::make({3, 3})).value == 9);
    CHECK(s_egz(Group::make({4})).value == 7);
    CHECK(s_kexp(Group::make({2, 2}), 2).value == 6);
}

TEST_CASE("infinite and unknown") {
    const auto g = Group::make({3, 3});
    CHECK(is_infinite(g, LengthSet::singleton(2)));
    CHECK(s_L(g, LengthSet::singleton(2)).kind == ValueKind::Infinite);
    CHECK_FALSE(is_infinite(g, LengthSet::explicit_set({2, 6})));
    SearchConfig cfg;
    cfg.node_budget = 5;
    const auto r = davenport(Group::make({3, 3, 3}), cfg);
    CHECK(r.kind == ValueKind::Unknown);
    CHECK(r.stats.nodes <= 6);
    cfg.node_budget = std::numeric_limits<std::uint64_t>::max();
    cfg.horizon = 3;
    const auto h = s_L(g, LengthSet::singleton(3), cfg);
    CHECK(h.kind == ValueKind::Unknown);
    CHECK(h.horizon_reached);
}

TEST_CASE("stems") {
    const auto g = Group::make({3, 3});
    SearchConfig cfg;
    cfg.stem = Sequence::parse(g, "1,0^2");
    CHECK(davenport(g, cfg).value == 5);
    cfg.stem = Sequence::parse(g, "1,0^3");
    CHECK_THROWS_AS(davenport(g, cfg), Error);
}

TEST_CASE("extremal and minimal zero-sum enumeration") {
    const auto g = Group::make({2, 2});
    // zero-sum free sequences of length 2 over C2^2: pairs of distinct nonzero elements
    const auto all = enumerate_extremal(g, LengthSet::all_positive(), 2);
    CHECK(all.sequences.size() == 3);
    CHECK(all.complete);
    const auto orbits = enumerate_extremal(g, LengthSet::all_positive(), 2, {}, true);
    CHECK(orbits.sequences.size() == 1);
    const auto minimal = enumerate_minimal_zero_sum(g, 3);
    CHECK(minimal.sequences.size() == 1);
    CHECK(enumerate_minimal_zero_sum(g, 1).sequences.size() == 1);
    // C3^2, length D = 5 minimal zero-sum sequences, orbit count by brute force
    const auto g3 = Group::make({3, 3});
    const auto full = enumerate_minimal_zero_sum(g3, 5);
    const auto autos = enumerate_automorphisms(g3);
    std::set<std::vector<std::uint32_t>> reps;
    for (const auto& s : full.sequences) reps.insert(canonical_form(s, autos).expanded_indices());
    SearchConfig sym;
    sym.symmetry_reduction = true;
    CHECK(enumerate_minimal_zero_sum(g3, 5, sym, true).sequences.size() == reps.size());
    CHECK(exists_free_sequence(g3, LengthSet::all_positive(), 4) == std::optional<bool>(true));
    CHECK(exists_free_sequence(g3, LengthSet::all_positive(), 5) == std::optional<bool>(false));
    SearchConfig par;
    par.parallel_depth = 2;
    CHECK(enumerate_extremal(g3, LengthSet::all_positive(), 4, par).sequences ==
          enumerate_extremal(g3, LengthSet::all_positive(), 4).sequences);
}
