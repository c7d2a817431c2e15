#include "zsum/sweeps.hpp"

#include "zsum/modp.hpp"
#include "zsum/sequence.hpp"

#include <random>

namespace zsum {

SweepSummary sweep_i0(const std::vector<int>& primes, int max_t_len) {
    SweepLine exact{"l4_6_exact"}, needs{"l4_6_needs_l0"}, lower{"l4_6_lower_bound"};
    SweepLine l47{"l4_7"}, c48{"c4_8_implies_l4_7"}, l49{"l4_9"};
    SweepLine d0{"l4_7_literal_d0", 0, 0, true};
    for (int p : primes) {
        const long long d_g = p;
        const auto pp = static_cast<std::uint64_t>(p);
        for (long long t_len = 2; t_len <= max_t_len; ++t_len) {
            for (long long k = 1; 2 * k <= t_len; ++k) {
                if (2 * k < d_g + 2) continue;
                const auto i0 = compute_i0(t_len, k, pp, d_g);
                const long long range = 2 * k - d_g;
                const auto dec = decompose(p, t_len, k);
                // a prediction past the scanned range must come with no i0 at all
                auto agrees = [&](long long predicted) {
                    return predicted <= range ? (i0 && *i0 == predicted) : !i0.has_value();
                };
                const auto pr = predict_i0(dec);
                switch (pr.kind) {
                case I0Prediction::Kind::Exact:
                    ++exact.checked;
                    if (!agrees(pr.value)) ++exact.violations;
                    break;
                case I0Prediction::Kind::NeedsL0:
                    ++needs.checked;
                    if (!agrees(pr.value)) ++needs.violations;
                    break;
                case I0Prediction::Kind::LowerBound:
                    ++lower.checked;
                    if (i0 && *i0 < pr.value) ++lower.violations;
                    break;
                case I0Prediction::Kind::NoPrediction:
                    break;
                }
                if (dec.level && dec.level->t <= 1 && range >= p + dec.d - dec.v) {
                    const bool f47 = check_4_7(dec);
                    if (f47) {
                        ++l47.checked;
                        if (!i0 || *i0 > p + dec.d - dec.v) ++l47.violations;
                    }
                    if (dec.d == 0 && check_4_7_literal(dec)) {
                        ++d0.checked;
                        if (!i0 || *i0 > p + dec.d - dec.v) ++d0.violations;
                    }
                    if (check_4_8(dec)) {
                        ++c48.checked;
                        if (!f47) ++c48.violations;
                    }
                }
                if (dec.k_one && range >= 2 && check_4_9(dec)) {
                    ++l49.checked;
                    if (!i0 || *i0 != 2) ++l49.violations;
                }
            }
        }
    }
    return SweepSummary{{exact, needs, lower, l47, c48, l49, d0}};
}

SweepLine sweep_row_transform(int count, std::uint64_t seed) {
    SweepLine line{"l4_3_row_transform"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> xs(-5, 5), ps(1, 12);
    for (int i = 0; i < count; ++i) {
        const long long x = xs(rng), c = ps(rng), k = ps(rng), u1 = ps(rng), u2 = ps(rng), lambda = ps(rng);
        ++line.checked;
        if (!row_transform_verify(x, c, k, u1, u2, lambda)) ++line.violations;
    }
    return line;
}

namespace {

Sequence random_sequence(const Group& g, int len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
    Sequence s(g);
    for (int i = 0; i < len; ++i) s.append_index(pick(rng));
    return s;
}

}  // namespace

SweepLine sweep_congruence(const Group& g, int count, std::uint64_t seed) {
    SweepLine line{"l4_2_congruence_" + g.to_string()};
    const auto p = static_cast<std::uint64_t>(g.p_group_prime());
    std::mt19937_64 rng(seed);
    const int d = g.d_star();
    std::uniform_int_distribution<int> len(d, d + 4);
    const auto elements = g.elements();
    for (int i = 0; i < count; ++i) {
        const auto s = random_sequence(g, len(rng), rng);
        ++line.checked;
        for (const auto& x : elements) {
            const auto [plus, minus] = n_plus_minus(s, x, p);
            if (plus != minus) {
                ++line.violations;
                break;
            }
        }
    }
    return line;
}

SweepLine sweep_zerosub(const Group& g, int count, std::uint64_t seed) {
    SweepLine line{"l4_4_zerosub_" + g.to_string()};
    const int p = g.p_group_prime();
    const int d = g.d_star();
    std::mt19937_64 rng(seed);
    const int k_min = (d + 3) / 2;  // 2k >= D + 2
    std::uniform_int_distribution<int> kk(k_min, k_min + 2), extra(0, 3);
    while (static_cast<int>(line.checked) < count) {
        const int k = kk(rng);
        const int len = 2 * k + extra(rng);
        // zero-sum by construction: last term is minus the sum of the rest
        auto t = random_sequence(g, len - 1, rng);
        t.append(g.neg(sigma(t)));
        const auto rep = zerosub_guarantee(t, k, static_cast<std::uint64_t>(p), d);
        ++line.checked;
        if (!rep.guarantees_short) continue;
        const auto m = min_zero_sum_length(t);
        if (!m || *m > k - 1) ++line.violations;
    }
    return line;
}

}  // namespace zsum
