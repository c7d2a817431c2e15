#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "zsum/error.hpp"
#include "zsum/search.hpp"
#include "zsum/theorems.hpp"

#include <random>

using namespace zsum;

namespace {

Group G(const char* s) { return Group::parse(s); }

SearchConfig fast() {
    SearchConfig c;
    c.symmetry_reduction = true;
    return c;
}

std::vector<Element> elems_of(const Sequence& s) {
    std::vector<Element> out;
    for (auto i : s.expanded_indices()) out.push_back(s.group().element_at(i));
    return out;
}

std::vector<TheoremClaim> desk_claims(const Group& g) {
    std::vector<TheoremClaim> out{check_thm_1_8(g, fast())};
    if (g.p_group_prime() != 0)
        for (int k = g.exponent() + 1; k <= g.d_star(); ++k) {
            try {
                out.push_back(check_thm_1_9(g, k));
            } catch (const Error&) {
            }
        }
    return out;
}

}  // namespace

TEST_CASE("davenport value source") {
    auto dv = davenport_value(G("C3^2"));
    CHECK(dv.value == 5);
    CHECK(dv.source == DavenportValue::Source::Searched);
    dv = davenport_value(G("C3^4"));
    CHECK(dv.value == 9);
    CHECK(dv.source == DavenportValue::Source::DStarKnown);
    dv = davenport_value(G("C6^4"));
    CHECK(dv.value == 21);
    CHECK(dv.source == DavenportValue::Source::DStarConditional);
}

TEST_CASE("theorem 1.8 claims") {
    auto c = check_thm_1_8(G("C3^3"), fast());
    REQUIRE(c.bound);
    CHECK(c.leq == 5);
    CHECK(*c.bound == 9);
    CHECK(c.equality);
    const auto v = verify_claim(c, fast());
    CHECK(v.result.value == 9);
    CHECK(v.holds);
    CHECK(v.equality);

    for (const char* g : {"C2^3", "C2^4"}) {
        c = check_thm_1_8(G(g), fast());
        CHECK_FALSE(c.all_hold());
        CHECK_FALSE(c.bound);
    }
    CHECK_FALSE(check_thm_1_8(G("C5")).bound);
    CHECK_FALSE(check_thm_1_8(G("C2+C8")).bound);  // D - 2 = 7 < 8
}

TEST_CASE("lemma 5.1") {
    const auto g = G("C3^2");
    // C(5,3) = 10 = 1 mod 3
    const auto s = Sequence::parse(g, "1,0^2; 0,1^2; 1,1^2; 2,1^1");
    CHECK(check_lemma_5_1(g, 4, s));
    CHECK_THROWS_AS(check_lemma_5_1(g, 3, s), Error);
    CHECK_THROWS_AS(check_lemma_5_1(g, 4, Sequence::parse(g, "1,0^6")), Error);
    CHECK_THROWS_AS(check_lemma_5_1(g, 4, Sequence::parse(g, "1,0^7")), Error);  // length 6 zero-sum
    CHECK_THROWS_AS(check_lemma_5_1(G("C6"), 4, Sequence::parse(G("C6"), "1^7")), Error);

    // C_2^3, k = 3: C(4, 2) = 6 = 0 mod 2, no guarantee
    const auto g2 = G("C2^3");
    CHECK_FALSE(check_lemma_5_1(g2, 3, Sequence::parse(g2, "1,0,0^1; 0,1,0^1; 0,0,1^1; 1,1,0^1; 1,1,1^1; 0,1,1^1")));

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint32_t> pick(0, 8);
    int qualifying = 0;
    int violations = 0;
    while (qualifying < 200) {
        Sequence t(g);
        for (int i = 0; i < 7; ++i) t.append_index(pick(rng));
        const auto e = elems_of(t);
        if (oracle::has_zero_sum(g, e, [](int l) { return l >= 6; })) continue;
        ++qualifying;
        if (check_lemma_5_1(g, 4, t) && !oracle::has_zero_sum(g, e, [](int l) { return l <= 3; })) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("theorem 1.9 and 1.10 claims") {
    CHECK_THROWS_AS(check_thm_1_9(G("C3^2"), 2), Error);  // k < p
    CHECK_THROWS_AS(check_thm_1_9(G("C6^2"), 7), Error);
    CHECK_THROWS_AS(check_thm_1_9(G("C3^3"), 12), Error);  // c1 = 4 >= p

    Thm110Params p;
    p.which = Thm110Params::Case::III;
    p.p = 3;
    p.d = 2;
    auto c = check_thm_1_10(p);
    REQUIRE(c.bound);
    CHECK(c.group == G("C3^2"));
    CHECK(c.leq == 3);
    CHECK(*c.bound == 7);
    auto v = verify_claim(c, fast());
    CHECK(v.result.value == 7);
    CHECK(v.equality);

    p.which = Thm110Params::Case::I;
    p.t = 1;
    c = check_thm_1_10(p);
    REQUIRE(c.bound);
    CHECK(c.group == G("C2^2"));
    CHECK(c.leq == 2);
    CHECK(*c.bound == 4);
    v = verify_claim(c, fast());
    CHECK(v.result.value == 4);

    p.which = Thm110Params::Case::II;
    p.p = 5;
    c = check_thm_1_10(p);
    REQUIRE(c.bound);
    CHECK(c.leq == 10);
    CHECK(*c.bound == 24);
    CHECK_FALSE(c.verifiable_at_desk);
    p.p = 3;
    CHECK_FALSE(check_thm_1_10(p).bound);
    p.p = 4;
    CHECK_THROWS_AS(check_thm_1_10(p), Error);

    p.which = Thm110Params::Case::III;
    p.p = 2;
    p.d = 4;  // (d-1)p = 6 > D = 5
    CHECK_FALSE(check_thm_1_10(p).bound);
}

TEST_CASE("soundness harness") {
    std::vector<TheoremClaim> claims;
    for (const char* g : {"C2^2", "C2^3", "C2^4", "C3^2", "C3^3", "C2+C4"})
        for (auto& c : desk_claims(G(g))) claims.push_back(std::move(c));
    Thm110Params p;
    p.which = Thm110Params::Case::I;
    p.t = 1;
    claims.push_back(check_thm_1_10(p));
    p.which = Thm110Params::Case::III;
    for (auto [pp, d] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        p.p = pp;
        p.d = d;
        claims.push_back(check_thm_1_10(p));
    }
    int verified = 0;
    for (const auto& c : claims) {
        if (!c.bound || !c.verifiable_at_desk) continue;
        CAPTURE(c.theorem);
        CAPTURE(c.group.to_string());
        CAPTURE(c.leq);
        const auto v = verify_claim(c, fast());
        REQUIRE(v.result.complete());
        CHECK(v.holds);
        ++verified;
    }
    CHECK(verified >= 8);
}

TEST_CASE("lower bound for p-groups with D <= 2 exp - 1") {
    for (const char* name : {"C2^2", "C3^2", "C2+C4", "C4^2", "C2+C2+C4", "C2+C8", "C5^2"}) {
        const auto g = G(name);
        const int d = g.d_star();
        REQUIRE(d <= 2 * g.exponent() - 1);
        for (int k = 1; d - k >= g.exponent(); ++k) {
            CAPTURE(name);
            CAPTURE(k);
            // a free sequence of length D + k - 1 exists
            CHECK(exists_free_sequence(g, LengthSet::interval(d - k), d + k - 1, fast()) == std::optional<bool>(true));
        }
    }
}

TEST_CASE("lemma 3.6 property") {
    auto rep = lemma_3_6_property(G("C3^2"), 0, 1);
    CHECK(rep.exhaustive);
    CHECK(rep.checked > 0);
    CHECK(rep.violations == 0);
    rep = lemma_3_6_property(G("C2^3"), 500, 3);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.checked == 500 * 8);
    CHECK(rep.violations == 0);
    rep = lemma_3_6_property(G("C3^3"), 100, 5);
    CHECK(rep.violations == 0);
    CHECK_THROWS_AS(lemma_3_6_property(G("C2+C4"), 10, 1), Error);
    CHECK_THROWS_AS(lemma_3_6_property(G("C7"), 10, 1), Error);
}

TEST_CASE("known values file") {
    const auto kv = parse_known_values("# c\nC3^3; s_leq; 4; 10; X\n\n C2^2 ; D ; 0 ; 3 ; Y # tail\n");
    REQUIRE(kv.size() == 2);
    CHECK(kv[0].group == G("C3^3"));
    CHECK(kv[0].value == 10);
    CHECK(kv[1].invariant == "D");
    CHECK(kv[1].source == "Y");
    CHECK_THROWS_AS(parse_known_values("C3; s_leq; 2\n"), Error);
    CHECK_THROWS_AS(parse_known_values("C3; s_leq; x; 2; y\n"), Error);
    CHECK_THROWS_AS(load_known_values("/nonexistent/file"), Error);

    const auto all = load_known_values(ZSUM_DATA_DIR "/known_values.txt");
    CHECK(all.size() > 30);
    // rank-2 rows follow s_{<=D-k} = D+k
    for (const auto& v : all)
        if (v.group.rank() == 2 && v.invariant == "s_leq") CHECK(v.value == 2 * v.group.d_star() - v.param);
}

TEST_CASE("conjecture harness") {
    const auto data = load_known_values(ZSUM_DATA_DIR "/known_values.txt");
    auto rep = conjecture_harness_bundled(G("C5^3"), data);
    CHECK(rep.d == 13);
    REQUIRE(rep.rows.size() == 8);
    CHECK(rep.rows[5].leq == 7);
    CHECK(rep.rows[5].value == std::optional<int>(19));
    CHECK(rep.rows[6].value == std::optional<int>(24));
    CHECK(rep.k_g == std::optional<int>(7));
    CHECK(rep.k_g_is_half);
    CHECK(rep.monotone);

    const auto computed = conjecture_harness_computed(G("C3^3"), fast(), false);
    const auto bundled = conjecture_harness_bundled(G("C3^3"), data);
    CHECK(computed.k_g == std::optional<int>(4));
    CHECK(computed.k_g_is_half);
    REQUIRE(computed.rows.size() == bundled.rows.size());
    for (std::size_t i = 0; i < computed.rows.size(); ++i) CHECK(computed.rows[i].value == bundled.rows[i].value);
    CHECK(bundled.k_g == std::optional<int>(4));
    REQUIRE(bundled.kexp_rows.size() == 2);
    CHECK(bundled.kexp_rows[1].value == std::optional<int>(13));
    CHECK(bundled.kexp_rows[1].on_conjectured_side == std::optional<bool>(true));

    rep = conjecture_harness_computed(G("C3^2"), fast());
    CHECK(rep.k_g == std::optional<int>(3));
    for (const auto& r : rep.rows) CHECK(r.value == std::optional<int>(r.bound));

    // missing crossing stays unknown
    rep = conjecture_harness_bundled(G("C7^3"), data);
    CHECK_FALSE(rep.k_g);

    SearchConfig tiny = fast();
    tiny.node_budget = 10;
    rep = conjecture_harness_computed(G("C3^3"), tiny, false);
    CHECK_FALSE(rep.k_g);
}
