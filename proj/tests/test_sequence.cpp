#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "zsum/error.hpp"
#include "zsum/sequence.hpp"

#include <random>

using namespace zsum;

namespace {

std::vector<Element> random_terms(const Group& g, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
    std::vector<Element> out;
    for (int i = 0; i < len; ++i) out.push_back(g.element_at(pick(rng)));
    return out;
}

}  // namespace

TEST_CASE("length sets") {
    CHECK(LengthSet::interval(4).to_string() == "[1,4]");
    CHECK(LengthSet::singleton(3).to_string() == "{3}");
    CHECK(LengthSet::all_positive().to_string() == "N");
    CHECK(LengthSet::explicit_set({2, 4}).contains(4));
    CHECK_FALSE(LengthSet::explicit_set({2, 4}).contains(3));
    CHECK(*LengthSet::interval(5).max() == 5);
    CHECK_FALSE(LengthSet::all_positive().max().has_value());
    CHECK_THROWS_AS(LengthSet::interval(0), Error);
}

TEST_CASE("parse and print") {
    const auto g = Group::make({2, 2});
    const auto s = Sequence::parse(g, "1,0^2; 0,1^2; 1,1^1");
    CHECK(s.length() == 5);
    CHECK(s.height() == 2);
    CHECK(s.to_text() == "1,0^2; 0,1^2; 1,1^1");
    CHECK(Sequence::parse(g, s.to_text()) == s);
    CHECK(sigma(s) == g.element({1, 1}));
    CHECK(Sequence::parse(g, "").empty());
    CHECK_THROWS_AS(Sequence::parse(g, "1,0,1"), Error);
    CHECK_THROWS_AS(Sequence::parse(g, "1,0^x"), Error);
}

TEST_CASE("subsequence tables against subset enumeration") {
    std::mt19937_64 rng(7);
    for (const auto& g : {Group::make({3, 3}), Group::make({2, 4}), Group::make({2, 2, 2})}) {
        for (int trial = 0; trial < 40; ++trial) {
            const int len = 1 + static_cast<int>(rng() % 9);
            const auto terms = random_terms(g, len, rng);
            const auto s = Sequence::from_elements(g, terms);
            const auto table = count_table(s);
            const auto feas = feasibility(s);
            g.for_each_element([&](const Element& x) {
                for (int k = 0; k <= len; ++k) {
                    const auto want = oracle::count(g, terms, x, k);
                    CHECK(table[g.index_of(x)][static_cast<std::size_t>(k)] == want);
                    CHECK(count_subseq(s, x, k) == want);
                    CHECK(count_subseq_mod(s, x, k, 5) == want % 5);
                    CHECK(feas.at(g.index_of(x), static_cast<std::size_t>(k)) == (want > 0));
                }
                std::uint64_t even = 0, odd = 0;
                for (int k = 0; k <= len; ++k) (k % 2 == 0 ? even : odd) += oracle::count(g, terms, x, k);
                const auto pm = n_plus_minus(s, x, 3);
                CHECK(pm.first == even % 3);
                CHECK(pm.second == odd % 3);
            });
            int min_len = 0;
            for (int k = len; k >= 1; --k)
                if (oracle::count(g, terms, g.zero(), k) > 0) min_len = k;
            const auto got = min_zero_sum_length(s);
            CHECK(got.value_or(0) == min_len);
            CHECK(has_zero_sum_in(s, LengthSet::all_positive()) == (min_len > 0));
        }
    }
    CHECK_THROWS_AS(n_plus_minus(Sequence(Group::make({2})), Group::make({2}).zero(), 4), Error);
}
