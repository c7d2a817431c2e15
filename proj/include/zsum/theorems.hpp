#pragma once

#include "zsum/group.hpp"
#include "zsum/search.hpp"
#include "zsum/sequence.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zsum {

/// Groups up to this order count as searchable at a desk.
inline constexpr std::uint64_t kDeskOrder = 32;

struct DavenportValue {
    enum class Source { Searched, DStarKnown, DStarConditional };
    int value = 0;
    Source source = Source::Searched;
};

/// D(G) by search for |G| <= kDeskOrder, otherwise D*(G), marked
/// conditional unless d_equals_dstar_known(G).
DavenportValue davenport_value(const Group& g, const SearchConfig& cfg = {});
const char* to_string(DavenportValue::Source s);

/// A bound s_{<= leq}(G) <= bound, emitted only when every hypothesis holds.
struct TheoremClaim {
    std::string theorem;
    Group group;
    int k = 0;    ///< the theorem's own k
    int leq = 0;  ///< the claim is about s_{<= leq}(G)
    int d = 0;    ///< D(G) used
    DavenportValue::Source d_source = DavenportValue::Source::Searched;
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::optional<int> bound;
    bool equality = false;  ///< the claim is s_{<= leq}(G) = bound
    bool verifiable_at_desk = false;

    bool all_hold() const noexcept;
};

/// s_{<= D-2}(G) <= D+2 for rank >= 2, G not C_2^3 or C_2^4, D-2 >= exp;
/// equality when D = D* and 2 exp >= D - 1.
TheoremClaim check_thm_1_8(const Group& g, const SearchConfig& cfg = {});

/// p-group G, k in [exp+1, D], |S| = 2D-k+1 and N^i(S) = 0 for
/// i in [D+1, |S|]. true when C(D, k-1) != 0 mod p, which promises a
/// zero-sum subsequence of length <= k-1.
bool check_lemma_5_1(const Group& g, int k, const Sequence& s);

/// p-group G, k = c1 p^{t+1} + d. Flags: k in [exp+1, D]; 2k-D >= p+d-v for
/// every |T| in [2k, 2D-k+1]; 2D-2k+1 < (p-1)/2 p^{t+1}; C(D, k-1) != 0 mod p;
/// d >= 1. Claim s_{<= k-1}(G) <= 2D-k+1.
TheoremClaim check_thm_1_9(const Group& g, int k);

struct Thm110Params {
    enum class Case { I, II, III };
    Case which = Case::III;
    int t = 1;  ///< case I: r = 2^{t+1} - 2
    int p = 3;  ///< cases II, III
    int d = 2;  ///< case III: rank
};

/// Claim s_{<= k-1}(G) <= 2D-k+1 for
///   I:   C_2^r, r = 2^{t+1}-2, k-1 = (r+2)/2, t >= 1
///   II:  C_p^4, k-1 = 2p, p >= 5
///   III: C_p^d, k-1 = (d-1)p in [p, D]
TheoremClaim check_thm_1_10(const Thm110Params& params);

/// Search-backed check of a claim: s_{<= leq}(G) <= bound.
struct ClaimCheck {
    SearchResult result;
    bool holds = false;      ///< value <= bound
    bool equality = false;   ///< value == bound
};
ClaimCheck verify_claim(const TheoremClaim& claim, const SearchConfig& cfg = {});

struct PropertyReport {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    bool exhaustive = false;
    std::optional<Sequence> first_violation;
};

/// S = T g^2 with T zero-sum of length D-1: S has a zero-sum subsequence of
/// length <= D-2. Exhaustive over all (T, g) when `trials` is 0 and the
/// space is small, otherwise `trials` seeded samples.
PropertyReport lemma_3_6_property(const Group& g, int trials, std::uint64_t seed,
                                  const SearchConfig& cfg = {});

/// One row of the bundled values file.
struct KnownValue {
    Group group;
    std::string invariant;  ///< s_leq, s_kexp, D
    int param = 0;
    int value = 0;
    std::string source;
};

/// Parses `group; invariant; param; value; source` rows, '#' comments.
std::vector<KnownValue> load_known_values(const std::string& path);
std::vector<KnownValue> parse_known_values(const std::string& text);

struct ConjectureRow {
    int j = 0;
    int leq = 0;  ///< D - j
    std::optional<int> value;
    int bound = 0;  ///< D + j
    std::optional<bool> holds;
    std::string source;  ///< computed, the citation, or empty when missing
};

struct KexpRow {
    int k = 0;
    int kexp = 0;
    std::optional<int> value;
    int bound = 0;       ///< 2D - 1
    bool upper_side = false;  ///< k exp in [(D+1)/2, D]: conjectured <= bound
    std::optional<bool> on_conjectured_side;
    std::string source;
};

struct ConjectureReport {
    Group group;
    int d = 0;
    std::string source;  ///< computed | bundled
    std::vector<ConjectureRow> rows;  ///< D - j from D - 1 down to exp
    std::optional<int> k_g;
    bool k_g_is_half = false;  ///< k_G = (D+1)/2
    bool monotone = true;      ///< holds column is true...true false...false
    std::vector<KexpRow> kexp_rows;
};

/// Computed: runs the searches with cfg (budget-limited rows stay unknown).
ConjectureReport conjecture_harness_computed(const Group& g, const SearchConfig& cfg, bool with_kexp = true);
/// Bundled: reads the rows for g from `values`.
ConjectureReport conjecture_harness_bundled(const Group& g, const std::vector<KnownValue>& values);

}  // namespace zsum
