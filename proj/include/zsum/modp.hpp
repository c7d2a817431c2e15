#pragma once

#include "zsum/bigint.hpp"
#include "zsum/sequence.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace zsum {

bool is_prime(long long n) noexcept;

/// Exact C(a, b), with C(a, b) = 0 for b < 0 or b > a >= 0.
BigInt binom(long long a, long long b);

/// C(a, b) mod p by Lucas' theorem. Throws InvalidInput unless p is prime.
std::uint64_t binom_mod_p(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// n (n-1) ... (n-j+1) / j! for any integer n.
BigInt gen_binom(long long n, long long j);

/// a_i = C(|T|-k, k-i) + (-1)^i C(|T|-k+i-1, k-1).
BigInt a_i(long long t_len, long long k, long long i);
std::uint64_t a_i_mod(long long t_len, long long k, long long i, std::uint64_t p);

/// Least i in [1, 2k-D] with a_i != 0 mod p. Throws InvalidInput when 2k < D+2.
std::optional<int> compute_i0(long long t_len, long long k, std::uint64_t p, long long d_g);

/// |T| - k = u p + v and k = c p + d, plus the optional refinements used
/// by the p^t-level lemmas.
struct PDecomposition {
    long long p = 0;
    long long t_len = 0;
    long long k = 0;
    long long u = 0, v = 0, c = 0, d = 0;

    /// k = c1 p^{t+1} + d, u = u1 p^t + u2, c1, u1 in [1, p-1], u2 in [0, p^t - 1]
    struct Level {
        int t = 0;
        long long c1 = 0, u1 = 0, u2 = 0;
    };
    std::optional<Level> level;

    /// k = c1 p^t + 1, |T| - k = u1 p^t + v1 with t >= 1, c1, u1 in [1, p-1]
    struct KOne {
        int t = 0;
        long long c1 = 0, u1 = 0, v1 = 0;
    };
    std::optional<KOne> k_one;
};

PDecomposition decompose(long long p, long long t_len, long long k);

struct I0Prediction {
    enum class Kind { Exact, NeedsL0, LowerBound, NoPrediction };
    Kind kind = Kind::NoPrediction;
    long long value = 0;  ///< Exact / NeedsL0: predicted i0; LowerBound: p + d - v
    long long l0 = 0;     ///< NeedsL0 only
};

/// Case analysis for d >= v + 1. The (1)(iii) branch predicts d - v + l0 p.
I0Prediction predict_i0(const PDecomposition& dec);

/// Binomial condition of the p + d - v lemma, together with d >= 1; throws
/// InvalidInput without `level`. For d = 0 the conclusion i0 <= p + d - v
/// can fail, so the flag stays false there.
bool check_4_7(const PDecomposition& dec);
/// The binomial condition alone, including d = 0.
bool check_4_7_literal(const PDecomposition& dec);
/// u1 + c1 + 1 < p and d >= 1; throws InvalidInput without `level`.
bool check_4_8(const PDecomposition& dec);
/// C(u1, c1-1) + C(u1+1, c1) != 0 mod p; throws InvalidInput without `k_one`.
bool check_4_9(const PDecomposition& dec);

/// Builds the binomial matrix, applies c passes of "row i+1 -= row i, top
/// to bottom" and compares with the closed form, all in exact arithmetic.
bool row_transform_verify(long long x, long long c, long long k, long long u1, long long u2, long long lambda);

struct CriterionReport {
    long long p = 0, t_len = 0, k = 0, d_g = 0;
    std::vector<std::pair<int, std::uint64_t>> a_values;  ///< (i, a_i mod p), i in [1, 2k-D]
    std::optional<int> i0;
    bool guarantees_short = false;
    bool l4_7 = false;  ///< shape, range 2k-D >= p+d-v and binomial condition
    bool c4_8 = false;
    bool l4_9 = false;  ///< shape, 2k-D >= 2 and binomial condition
};

/// The report from the numbers alone.
CriterionReport criterion_report(long long p, long long t_len, long long k, long long d_g);

/// Checks that T is a zero-sum sequence over a p-group with |T| >= 2k and
/// 2k >= D+2, then reports. guarantees_short promises a zero-sum
/// subsequence of length <= k-1.
CriterionReport zerosub_guarantee(const Sequence& t, long long k, std::uint64_t p, long long d_g);

}  // namespace zsum
