#pragma once

#include "zsum/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zsum {

struct SweepLine {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    bool informational = false;  ///< reported, not part of pass()
};

struct SweepSummary {
    std::vector<SweepLine> lines;
    bool pass() const noexcept {
        for (const auto& l : lines)
            if (!l.informational && l.violations != 0) return false;
        return true;
    }
};

/// Every (|T|, k) with 2 <= 2k <= |T| <= max_t_len and 2k >= p + 2, per
/// prime, with D = p. Compares the i0 predictions and the three lemma
/// conclusions against a direct scan of a_i. The informational line
/// l4_7_literal_d0 counts d = 0 tuples where the binomial condition holds
/// but i0 <= p + d - v does not.
SweepSummary sweep_i0(const std::vector<int>& primes, int max_t_len);

/// `count` seeded tuples x in [-5, 5], c, k, u1, u2, lambda in [1, 12].
SweepLine sweep_row_transform(int count, std::uint64_t seed);

/// `count` seeded sequences with |S| in [D, D+4]: N_g^+ = N_g^- mod p for all g.
SweepLine sweep_congruence(const Group& g, int count, std::uint64_t seed);

/// `count` seeded zero-sum T with |T| >= 2k and 2k >= D+2: a short zero-sum
/// subsequence exists whenever some a_i is a unit.
SweepLine sweep_zerosub(const Group& g, int count, std::uint64_t seed);

}  // namespace zsum
