#include "zsum/theorems.hpp"

#include "zsum/error.hpp"
#include "zsum/modp.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

namespace zsum {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

Group homocyclic(int n, int r) { return Group::make(std::vector<long long>(static_cast<std::size_t>(r), n)); }

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

const char* to_string(DavenportValue::Source s) {
    switch (s) {
    case DavenportValue::Source::Searched: return "searched";
    case DavenportValue::Source::DStarKnown: return "dstar_known";
    case DavenportValue::Source::DStarConditional: return "dstar_conditional";
    }
    return "?";
}

DavenportValue davenport_value(const Group& g, const SearchConfig& cfg) {
    if (g.order() <= kDeskOrder) {
        SearchConfig c = cfg;
        c.symmetry_reduction = true;
        const auto r = davenport(g, c);
        if (r.kind == ValueKind::Finite) return {r.value, DavenportValue::Source::Searched};
    }
    return {g.d_star(), d_equals_dstar_known(g) ? DavenportValue::Source::DStarKnown
                                                 : DavenportValue::Source::DStarConditional};
}

bool TheoremClaim::all_hold() const noexcept {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.second; });
}

TheoremClaim check_thm_1_8(const Group& g, const SearchConfig& cfg) {
    TheoremClaim c;
    c.theorem = "1.8";
    c.group = g;
    c.k = 2;
    const auto dv = davenport_value(g, cfg);
    c.d = dv.value;
    c.d_source = dv.source;
    c.leq = c.d - 2;
    const bool excluded = g == homocyclic(2, 3) || g == homocyclic(2, 4);
    c.hypotheses = {{"rank_at_least_2", g.rank() >= 2},
                    {"not_C2^3_or_C2^4", !excluded},
                    {"D-2_at_least_exp", c.d - 2 >= g.exponent()}};
    c.verifiable_at_desk = g.order() <= kDeskOrder;
    if (c.all_hold()) {
        c.bound = c.d + 2;
        c.equality = c.d == g.d_star() && dv.source != DavenportValue::Source::DStarConditional &&
                     2 * g.exponent() >= c.d - 1;
    }
    return c;
}

bool check_lemma_5_1(const Group& g, int k, const Sequence& s) {
    const int p = g.p_group_prime();
    if (p == 0) bad("lemma 5.1 needs a p-group");
    if (!(s.group() == g)) bad("sequence is not over " + g.to_string());
    const int d = g.d_star();
    if (k < g.exponent() + 1 || k > d) bad("k must lie in [exp(G)+1, D(G)]");
    if (static_cast<int>(s.length()) != 2 * d - k + 1) bad("|S| must be 2D(G) - k + 1");
    const auto table = count_table(s);
    for (std::size_t i = static_cast<std::size_t>(d) + 1; i <= s.length(); ++i)
        if (table[0][i] != 0) bad("S has a zero-sum subsequence of length above D(G)");
    return binom_mod_p(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(k - 1),
                       static_cast<std::uint64_t>(p)) != 0;
}

TheoremClaim check_thm_1_9(const Group& g, int k) {
    const int p = g.p_group_prime();
    if (p == 0) bad("theorem 1.9 needs a p-group");
    if (k < 1) bad("k must be positive");
    const long long c = k / p;
    const long long d = k % p;
    int t = 0;
    long long c1 = c;
    while (c1 > 0 && c1 % p == 0) {
        c1 /= p;
        ++t;
    }
    if (c1 < 1 || c1 > p - 1) bad("k is not of the form c1 p^{t+1} + d with c1 in [1, p-1]");

    TheoremClaim cl;
    cl.theorem = "1.9";
    cl.group = g;
    cl.k = k;
    cl.leq = k - 1;
    cl.d = g.d_star();  // p-groups have D = D*
    cl.d_source = DavenportValue::Source::DStarKnown;
    const int dg = cl.d;

    bool range_ok = true;
    for (long long tl = 2LL * k; tl <= 2LL * dg - k + 1; ++tl) {
        const long long v = (tl - k) % p;
        if (2LL * k - dg < p + d - v) range_ok = false;
    }
    const long long pt1 = ipow(p, t + 1);
    cl.hypotheses = {{"k_in_[exp+1,D]", k >= g.exponent() + 1 && k <= dg},
                     {"2k-D_at_least_p+d-v", range_ok},
                     {"2D-2k+1_below_(p-1)/2*p^(t+1)", 2 * (2LL * dg - 2LL * k + 1) < (p - 1) * pt1},
                     {"binom(D,k-1)_unit_mod_p",
                      binom_mod_p(static_cast<std::uint64_t>(dg), static_cast<std::uint64_t>(k - 1),
                                  static_cast<std::uint64_t>(p)) != 0},
                     {"d_at_least_1", d >= 1}};
    cl.verifiable_at_desk = g.order() <= kDeskOrder;
    if (cl.all_hold()) cl.bound = 2 * dg - k + 1;
    return cl;
}

TheoremClaim check_thm_1_10(const Thm110Params& prm) {
    TheoremClaim cl;
    Group g;
    int k = 0;
    switch (prm.which) {
    case Thm110Params::Case::I: {
        if (prm.t < 1 || prm.t > 4) bad("case (i) needs t in [1, 4]");
        const int r = (1 << (prm.t + 1)) - 2;
        g = homocyclic(2, r);
        k = (r + 2) / 2 + 1;
        cl.theorem = "1.10(i)";
        cl.hypotheses = {{"r=2^(t+1)-2", true}, {"t_at_least_1", prm.t >= 1}};
        break;
    }
    case Thm110Params::Case::II:
        if (!is_prime(prm.p)) bad("case (ii) needs a prime p");
        g = homocyclic(prm.p, 4);
        k = 2 * prm.p + 1;
        cl.theorem = "1.10(ii)";
        cl.hypotheses = {{"p_at_least_5", prm.p >= 5}};
        break;
    case Thm110Params::Case::III: {
        if (!is_prime(prm.p)) bad("case (iii) needs a prime p");
        if (prm.d < 1) bad("case (iii) needs d >= 1");
        g = homocyclic(prm.p, prm.d);
        k = (prm.d - 1) * prm.p + 1;
        cl.theorem = "1.10(iii)";
        const int dg = g.d_star();
        cl.hypotheses = {{"(d-1)p_in_[p,D]", k - 1 >= prm.p && k - 1 <= dg}};
        break;
    }
    }
    cl.group = g;
    cl.k = k;
    cl.leq = k - 1;
    cl.d = g.d_star();
    cl.d_source = DavenportValue::Source::DStarKnown;
    cl.verifiable_at_desk = g.order() <= kDeskOrder;
    if (cl.all_hold()) cl.bound = 2 * cl.d - k + 1;
    return cl;
}

ClaimCheck verify_claim(const TheoremClaim& claim, const SearchConfig& cfg) {
    if (!claim.bound) bad("claim carries no bound");
    ClaimCheck out;
    SearchConfig c = cfg;
    c.symmetry_reduction = true;
    out.result = s_leq(claim.group, claim.leq, c);
    if (out.result.kind == ValueKind::Finite) {
        out.holds = out.result.value <= *claim.bound;
        out.equality = out.result.value == *claim.bound;
    }
    return out;
}

namespace {

bool is_c2_c2m(const Group& g) { return g.rank() == 2 && g.factors()[0] == 2; }

// has a zero-sum subsequence of length in [1, limit]
bool short_zero_sum(const Sequence& s, int limit) {
    const auto m = min_zero_sum_length(s);
    return m && *m <= limit;
}

}  // namespace

PropertyReport lemma_3_6_property(const Group& g, int trials, std::uint64_t seed, const SearchConfig& cfg) {
    if (g.rank() < 2) bad("lemma 3.6 needs rank >= 2");
    if (is_c2_c2m(g)) bad("lemma 3.6 excludes C2 + C2m");
    PropertyReport rep;
    rep.name = "lemma_3_6_" + g.to_string();
    const int d = davenport_value(g, cfg).value;
    const auto order = static_cast<std::uint32_t>(g.order());
    const int tlen = d - 1;

    auto check = [&](const Sequence& t) {
        for (std::uint32_t gi = 0; gi < order; ++gi) {
            Sequence s = t;
            s.append_index(gi, 2);
            ++rep.checked;
            if (!short_zero_sum(s, d - 2)) {
                ++rep.violations;
                if (!rep.first_violation) rep.first_violation = s;
            }
        }
    };

    // multisets of size tlen over |G| elements
    double space = 1;
    for (int i = 1; i <= tlen; ++i) space = space * (order + i - 1) / i;
    if (trials == 0 && space <= 2e5) {
        rep.exhaustive = true;
        std::vector<std::uint32_t> cur;
        std::function<void(std::uint32_t, Element)> rec = [&](std::uint32_t from, Element sum) {
            if (static_cast<int>(cur.size()) == tlen) {
                if (!(sum == g.zero())) return;
                Sequence t(g);
                for (auto i : cur) t.append_index(i);
                check(t);
                return;
            }
            for (std::uint32_t i = from; i < order; ++i) {
                cur.push_back(i);
                rec(i, g.add(sum, g.element_at(i)));
                cur.pop_back();
            }
        };
        rec(0, g.zero());
        return rep;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, order - 1);
    const int n = trials > 0 ? trials : 500;
    for (int i = 0; i < n; ++i) {
        Sequence t(g);
        for (int j = 0; j + 1 < tlen; ++j) t.append_index(pick(rng));
        t.append(g.neg(sigma(t)));
        check(t);
    }
    return rep;
}

std::vector<KnownValue> parse_known_values(const std::string& text) {
    std::vector<KnownValue> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string col;
        while (std::getline(ls, col, ';')) cols.push_back(trim(col));
        if (cols.size() != 5)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 5 ';'-separated fields");
        try {
            out.push_back({Group::parse(cols[0]), cols[1], std::stoi(cols[2]), std::stoi(cols[3]), cols[4]});
        } catch (const std::invalid_argument&) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad number");
        }
    }
    return out;
}

std::vector<KnownValue> load_known_values(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_known_values(ss.str());
}

namespace {

void finish(ConjectureReport& rep) {
    // k_G: walk down from D-1 while rows hold
    bool crossed = false;
    bool unknown = false;
    std::optional<int> last_true;
    for (const auto& row : rep.rows) {
        if (!row.holds) {
            if (!crossed) unknown = true;
            continue;
        }
        if (*row.holds) {
            if (crossed) rep.monotone = false;
            if (!crossed && !unknown) last_true = row.leq;
        } else {
            crossed = true;
        }
    }
    if (!unknown && last_true) {
        rep.k_g = *last_true;
    }
    if (unknown) rep.k_g.reset();
    rep.k_g_is_half = rep.k_g && rep.d % 2 == 1 && *rep.k_g == (rep.d + 1) / 2;
}

ConjectureReport skeleton(const Group& g, int d, std::string source) {
    ConjectureReport rep;
    rep.group = g;
    rep.d = d;
    rep.source = std::move(source);
    for (int j = 1; d - j >= g.exponent(); ++j) {
        ConjectureRow row;
        row.j = j;
        row.leq = d - j;
        row.bound = d + j;
        rep.rows.push_back(row);
    }
    for (int k = 1; k * g.exponent() <= d; ++k) {
        KexpRow row;
        row.k = k;
        row.kexp = k * g.exponent();
        row.bound = 2 * d - 1;
        row.upper_side = 2 * row.kexp >= d + 1;
        rep.kexp_rows.push_back(row);
    }
    return rep;
}

void fill_kexp(KexpRow& row) {
    if (row.value) row.on_conjectured_side = row.upper_side ? *row.value <= row.bound : *row.value > row.bound;
}

}  // namespace

ConjectureReport conjecture_harness_computed(const Group& g, const SearchConfig& cfg, bool with_kexp) {
    const auto dv = davenport_value(g, cfg);
    auto rep = skeleton(g, dv.value, "computed");
    SearchConfig c = cfg;
    c.symmetry_reduction = true;
    for (auto& row : rep.rows) {
        const auto r = s_leq(g, row.leq, c);
        if (r.kind == ValueKind::Finite) {
            row.value = r.value;
            row.holds = r.value <= row.bound;
            row.source = "computed";
        }
    }
    if (with_kexp) {
        for (auto& row : rep.kexp_rows) {
            const auto r = s_kexp(g, row.k, c);
            if (r.kind == ValueKind::Finite) {
                row.value = r.value;
                row.source = "computed";
                fill_kexp(row);
            }
        }
    }
    finish(rep);
    return rep;
}

ConjectureReport conjecture_harness_bundled(const Group& g, const std::vector<KnownValue>& values) {
    std::optional<int> d;
    for (const auto& kv : values)
        if (kv.group == g && kv.invariant == "D") d = kv.value;
    if (!d) d = g.d_star();
    auto rep = skeleton(g, *d, "bundled");
    for (const auto& kv : values) {
        if (!(kv.group == g)) continue;
        if (kv.invariant == "s_leq") {
            for (auto& row : rep.rows)
                if (row.leq == kv.param) {
                    row.value = kv.value;
                    row.holds = kv.value <= row.bound;
                    row.source = kv.source;
                }
        } else if (kv.invariant == "s_kexp") {
            for (auto& row : rep.kexp_rows)
                if (row.k == kv.param) {
                    row.value = kv.value;
                    row.source = kv.source;
                    fill_kexp(row);
                }
        }
    }
    finish(rep);
    return rep;
}

}  // namespace zsum
