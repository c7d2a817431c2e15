#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zsum/error.hpp"
#include "zsum/group.hpp"

#include <numeric>
#include <set>

using namespace zsum;

TEST_CASE("normal form") {
    CHECK(Group::make({6, 4}).factors() == std::vector<int>{2, 12});
    CHECK(Group::make({2, 3, 4}).factors() == std::vector<int>{2, 12});
    CHECK(Group::make({3, 3, 3}).factors() == std::vector<int>{3, 3, 3});
    CHECK(Group::make({}).rank() == 0);
    CHECK_THROWS_AS(Group::make({1, 3}), Error);
    CHECK(Group::parse("C3^3") == Group::make({3, 3, 3}));
    CHECK(Group::parse("C2xC4") == Group::make({2, 4}));
    CHECK(Group::parse("C2 x C6^2") == Group::make({2, 6, 6}));
    CHECK(Group::parse("2,4") == Group::make({2, 4}));
    CHECK(Group::parse("C1").order() == 1);
    CHECK(Group::make({6, 4}).to_string() == "C2xC12");
    CHECK(Group::make({3, 3, 3}).to_string() == "C3^3");
}

TEST_CASE("invariants") {
    const auto g = Group::make({2, 4});
    CHECK(g.order() == 8);
    CHECK(g.exponent() == 4);
    CHECK(g.d_star() == 5);
    CHECK(g.p_group_prime() == 2);
    CHECK(Group::make({6}).p_group_prime() == 0);
    CHECK(Group::make({3, 3, 3}).d_star() == 7);
    CHECK(Group::make({3, 3}).is_homocyclic());
    CHECK_FALSE(g.is_homocyclic());
}

TEST_CASE("arithmetic and indexing") {
    const auto g = Group::make({2, 6});
    std::set<std::uint32_t> seen;
    std::uint32_t prev = 0;
    bool first = true;
    g.for_each_element([&](const Element& a) {
        const auto i = g.index_of(a);
        CHECK(g.element_at(i) == a);
        if (!first) CHECK(i == prev + 1);
        first = false;
        prev = i;
        seen.insert(i);
        CHECK(g.add(a, g.neg(a)) == g.zero());
        // order by repeated addition
        int o = 1;
        Element m = a;
        while (!(m == g.zero())) {
            m = g.add(m, a);
            ++o;
        }
        CHECK(g.order_of(a) == o);
        CHECK(g.scalar_mul(o, a) == g.zero());
        CHECK(g.scalar_mul(-1, a) == g.neg(a));
    });
    CHECK(seen.size() == 12);
    CHECK(g.index_of(g.zero()) == 0);
    CHECK(g.element({3, -1}) == g.element({1, 5}));
    CHECK_THROWS_AS(g.add(g.zero(), Group::make({3}).zero()), Error);
}

TEST_CASE("known D = D* families") {
    CHECK(d_equals_dstar_known(Group::make({4, 8})));
    CHECK(d_equals_dstar_known(Group::make({3, 3, 3, 3})));
    CHECK(d_equals_dstar_known(Group::make({2, 2, 6})));
    CHECK(d_equals_dstar_known(Group::make({3, 6, 6})));
}

TEST_CASE("automorphisms") {
    // |GL_2(F_3)| = 48, |GL_3(F_2)| = 168, |Aut(C_4^2)| = 96
    CHECK(enumerate_automorphisms(Group::make({3, 3})).size() == 48);
    CHECK(enumerate_automorphisms(Group::make({2, 2, 2})).size() == 168);
    const auto g = Group::make({4, 4});
    const auto autos = enumerate_automorphisms(g);
    CHECK(autos.size() == 96);
    for (const auto& a : autos) {
        std::set<std::uint32_t> img;
        g.for_each_element([&](const Element& x) { img.insert(g.index_of(a.apply(x))); });
        CHECK(img.size() == g.order());
    }
    CHECK_THROWS_AS(enumerate_automorphisms(Group::make({2, 4})), Error);
}
