#pragma once

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

#include <optional>
#include <vector>

namespace zsum {

struct LowerCnrParams {
    int n = 2;
    int r = 2;
    int k = 0;  ///< in [0, n-1]
};

/// Sequence over C_n^r of length 2^{r-1}(n-1) + k whose zero-sum
/// subsequences all have length >= 2n - k. Base r = 2 is
/// e_1^{n-1} e_2^{n-1} (e_1+e_2)^k; each step doubles the non-g_0 part by
/// adding e_r, with g_0 = e_1 + e_2.
Sequence build_lowercnr(const LowerCnrParams& p);

struct LowerGeneralParams {
    Group group;
    int k = 0;
};

/// e_r^x * prod_{i<r} e_i^{n_i-1} (e_r - e_i)^{n_i-1} with
/// x = exp(G) + k - D*(H), H the sum of all but the last factor.
/// Requires rank >= 2 and exp(G) <= D*(G) - k <= 2 exp(G) - 1.
Sequence build_lower_general(const LowerGeneralParams& p);

/// The x parameter of build_lower_general.
int lower_general_x(const LowerGeneralParams& p);

struct Inv2Params {
    std::vector<int> xs;  ///< k in {0, 1}: x_1..x_n, sum = 1 mod n; empty means (0,...,0,1)
    int x = 1;            ///< k = n - 1: gcd(x, n) = 1
};

/// Family member over C_n^2 with |S| = 2n - 2 + k:
///   k = 0        : e_1^{n-1} prod_{i<n} (x_i e_1 + e_2)   (the k = 1 form minus its last term)
///   k = 1        : e_1^{n-1} prod_{i<=n} (x_i e_1 + e_2)
///   2 <= k <= n-2: e_1^{n-1} e_2^{n-1} (e_1 + e_2)^k
///   k = n - 1    : e_1^{n-1} e_2^{n-1} (x e_1 + e_2)^k
/// n = 2, k = 1 takes the last form with x = 1.
Sequence build_inv2(int n, int k, const Inv2Params& params = {});

struct ConstructionReport {
    std::size_t length = 0;
    std::size_t expected_length = 0;
    std::optional<int> min_zero_sum;  ///< nullopt: zero-sum free
    int required_min = 0;
    bool length_ok = false;
    bool min_ok = false;
    bool pass() const noexcept { return length_ok && min_ok; }
};

ConstructionReport verify_construction(const Sequence& s, std::size_t expected_length, int min_zs);

/// Whether some automorphism of C_n^2 carries S onto a family member of
/// build_inv2 for this k (for k = 0 the test is applied to S * (-sigma(S))).
bool match_inverse_structure(const Sequence& s, int n, int k);

}  // namespace zsum
