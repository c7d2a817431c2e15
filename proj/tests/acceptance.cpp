// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "zsum/constructions.hpp"
#include "zsum/modp.hpp"
#include "zsum/search.hpp"
#include "zsum/sweeps.hpp"
#include "zsum/theorems.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace zsum;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail, double secs) {
    std::printf("%s %2d  %s  [%s] (%.2fs)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

void run(int id, const std::string& what, const std::function<bool(std::ostringstream&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, ok, what, detail.str(), secs);
}

Group G(const char* s) { return Group::parse(s); }

SearchConfig sym() {
    SearchConfig c;
    c.symmetry_reduction = true;
    return c;
}

// exact value of s_{<=k}(G) or -1
int sleq(const Group& g, int k, const SearchConfig& cfg = {}) {
    const auto r = s_leq(g, k, cfg);
    return r.kind == ValueKind::Finite ? r.value : -1;
}

bool expect(std::ostringstream& d, const std::string& label, int got, int want) {
    if (got != want) {
        d << label << "=" << got << " want " << want << "; ";
        return false;
    }
    return true;
}

// every invariant-factor chain of rank >= 2 with order <= cap
void chains(std::vector<long long>& cur, long long order, long long cap, std::vector<Group>& out) {
    if (cur.size() >= 2) out.push_back(Group::make(cur));
    const long long start = cur.empty() ? 2 : cur.back();
    for (long long n = start; order * n <= cap; n += start) {
        if (!cur.empty() && n % cur.back() != 0) continue;
        cur.push_back(n);
        chains(cur, order * n, cap, out);
        cur.pop_back();
    }
}

}  // namespace

int main() {
    run(1, "s_<=k(C3^3) for k = 7,6,5,4,3", [](auto& d) {
        const auto g = G("C3^3");
        bool ok = true;
        const int want[] = {17, 10, 9, 8, 7};
        for (int k = 3; k <= 7; ++k) {
            ok &= expect(d, "s" + std::to_string(k), sleq(g, k), want[k - 3]);
            ok &= expect(d, "s" + std::to_string(k) + "_sym", sleq(g, k, sym()), want[k - 3]);
        }
        d << "10, 9, 8, 7 and 17; symmetry on and off agree";
        return ok;
    });

    run(2, "C2^r family values", [](auto& d) {
        bool ok = true;
        for (int r = 2; r <= 4; ++r) {
            const auto g = Group::make(std::vector<long long>(static_cast<std::size_t>(r), 2));
            ok &= expect(d, "s2(C2^" + std::to_string(r) + ")", sleq(g, 2), 1 << r);
        }
        ok &= expect(d, "s3(C2^3)", sleq(G("C2^3"), 3), 5);
        ok &= expect(d, "s3(C2^4)", sleq(G("C2^4"), 3), 9);
        int rows = 0;
        for (int r = 3; r <= 4; ++r) {
            const auto g = Group::make(std::vector<long long>(static_cast<std::size_t>(r), 2));
            for (int m = r; m >= (2 * r + 2 + 2) / 3; --m, ++rows)
                ok &= expect(d, "s" + std::to_string(m) + "(C2^" + std::to_string(r) + ")", sleq(g, m), r + 2);
        }
        d << "2^r for r=2..4, 5, 9, and " << rows << " rows equal to r+2";
        return ok;
    });

    run(3, "s_<=D-k(Cn^2) = D+k, n = 3, 4", [](auto& d) {
        bool ok = true;
        int rows = 0;
        for (int n = 3; n <= 4; ++n) {
            const auto g = Group::make({n, n});
            const int dd = 2 * n - 1;
            for (int k = 0; dd - k >= n; ++k, ++rows)
                ok &= expect(d, g.to_string() + " k=" + std::to_string(k), sleq(g, dd - k), dd + k);
        }
        d << rows << " rows";
        return ok;
    });

    run(4, "Davenport constants by search", [](auto& d) {
        bool ok = true;
        ok &= expect(d, "D(C2^3)", davenport(G("C2^3")).value, 4);
        ok &= expect(d, "D(C3^3)", davenport(G("C3^3")).value, 7);
        ok &= expect(d, "D(C2xC4)", davenport(G("C2xC4")).value, 5);
        ok &= expect(d, "D*(C2xC4)", G("C2xC4").d_star(), 5);
        d << "4, 7, 5";
        return ok;
    });

    run(5, "lower-bound constructions", [](auto& d) {
        int checked = 0, bad = 0;
        for (int n = 2; n <= 4; ++n)
            for (int r = 2; r <= 4; ++r)
                for (int k = 0; k <= n - 1; ++k) {
                    const auto s = build_lowercnr({n, r, k});
                    if (s.length() > 20) continue;
                    ++checked;
                    if (!verify_construction(s, (std::size_t{1} << (r - 1)) * (n - 1) + k, 2 * n - k).pass()) {
                        ++bad;
                        d << "lowercnr(" << n << "," << r << "," << k << ") ";
                    }
                }
        std::vector<Group> groups;
        std::vector<long long> cur;
        chains(cur, 1, 64, groups);
        int general = 0;
        for (const auto& g : groups) {
            const int ds = g.d_star();
            const int e = g.exponent();
            for (int k = ds - 2 * e + 1; k <= ds - e; ++k) {
                ++general;
                const auto s = build_lower_general({g, k});
                if (!verify_construction(s, static_cast<std::size_t>(ds + k - 1), ds - k + 1).pass()) {
                    ++bad;
                    d << "general(" << g.to_string() << "," << k << ") ";
                }
            }
        }
        d << checked << " lowercnr, " << general << " general over " << groups.size() << " groups, " << bad
          << " failures";
        return bad == 0 && checked > 0 && general > 0;
    });

    run(6, "inverse structure over C3^2", [](auto& d) {
        const auto g = G("C3^2");
        bool ok = true;
        for (int k = 0; k <= 2; ++k) {
            const auto set = enumerate_extremal(g, LengthSet::interval(5 - k), 4 + k);
            int bad = 0;
            for (const auto& s : set.sequences)
                if (!match_inverse_structure(s, 3, k)) ++bad;
            d << "k=" << k << ": " << set.sequences.size() << " seqs, " << bad << " unmatched; ";
            ok &= set.complete && !set.sequences.empty() && bad == 0;
        }
        return ok;
    });

    run(7, "N+ = N- mod p congruence", [](auto& d) {
        bool ok = true;
        for (const char* name : {"C2^3", "C3^2", "C3^3"}) {
            const auto l = sweep_congruence(G(name), 500, 7);
            d << name << " " << l.checked << "/" << l.violations << " ";
            ok &= l.checked == 500 && l.violations == 0;
        }
        return ok;
    });

    run(8, "row transform closed form", [](auto& d) {
        const auto l = sweep_row_transform(200, 7);
        d << l.checked << " tuples, " << l.violations << " mismatches";
        return l.checked == 200 && l.violations == 0;
    });

    run(9, "a_i criterion soundness", [](auto& d) {
        bool ok = true;
        for (const char* name : {"C3^2", "C2^3"}) {
            const auto l = sweep_zerosub(G(name), 500, 7);
            d << name << " " << l.checked << "/" << l.violations << " ";
            ok &= l.checked == 500 && l.violations == 0;
        }
        return ok;
    });

    run(10, "i0 predictions and lemma assertions, p in {3,5,7}, |T| <= 400", [](auto& d) {
        const auto s = sweep_i0({3, 5, 7}, 400);
        for (const auto& l : s.lines)
            d << l.name << " " << l.checked << "/" << l.violations << (l.informational ? " (info)" : "") << "; ";
        return s.pass();
    });

    run(11, "desk cases of the s_<=k-1 <= 2D-k+1 theorem", [](auto& d) {
        bool ok = true;
        Thm110Params p;
        p.which = Thm110Params::Case::III;
        p.p = 3;
        p.d = 2;
        auto c = check_thm_1_10(p);
        auto v = verify_claim(c, sym());
        ok &= c.bound == std::optional<int>(7) && v.result.value == 7;
        d << "iii: s3(C3^2)=" << v.result.value << " <= " << c.bound.value_or(-1) << "; ";
        p.which = Thm110Params::Case::I;
        p.t = 1;
        c = check_thm_1_10(p);
        v = verify_claim(c, sym());
        ok &= c.bound == std::optional<int>(4) && v.result.value == 4;
        d << "i: s2(C2^2)=" << v.result.value << " <= " << c.bound.value_or(-1) << "; ";
        p.which = Thm110Params::Case::II;
        p.p = 5;
        c = check_thm_1_10(p);
        ok &= c.all_hold() && c.bound == std::optional<int>(24) && !c.verifiable_at_desk;
        d << "ii: C5^4 flags only, claim s10 <= " << c.bound.value_or(-1);
        return ok;
    });

    run(12, "s_<=D-2(C3^3) = D+2", [](auto& d) {
        const auto c = check_thm_1_8(G("C3^3"));
        const auto v = verify_claim(c, sym());
        d << "s5=" << v.result.value << ", bound " << c.bound.value_or(-1) << ", equality clause "
          << (c.equality ? "on" : "off");
        return c.bound == std::optional<int>(9) && c.equality && v.holds && v.equality;
    });

    run(13, "conjecture harness k_G", [](auto& d) {
        const auto data = load_known_values(ZSUM_DATA_DIR "/known_values.txt");
        const auto b5 = conjecture_harness_bundled(G("C5^3"), data);
        const auto c3 = conjecture_harness_computed(G("C3^3"), SearchConfig{}, false);
        const int c5_rows[] = {14, 14, 15, 17, 18, 19, 24, 33};  // s_<=12 .. s_<=5
        const int c3_rows[] = {8, 9, 10, 17};                     // s_<=6 .. s_<=3
        bool ok = b5.rows.size() == 8 && c3.rows.size() == 4;
        for (std::size_t i = 0; ok && i < 8; ++i) ok &= b5.rows[i].value == std::optional<int>(c5_rows[i]);
        for (std::size_t i = 0; ok && i < 4; ++i) ok &= c3.rows[i].value == std::optional<int>(c3_rows[i]);
        ok &= b5.k_g == std::optional<int>(7) && b5.k_g_is_half && b5.monotone;
        ok &= c3.k_g == std::optional<int>(4) && c3.k_g_is_half && c3.monotone;
        d << "bundled C5^3 k_G=" << (b5.k_g ? std::to_string(*b5.k_g) : "?") << ", computed C3^3 k_G="
          << (c3.k_g ? std::to_string(*c3.k_g) : "?");
        return ok;
    });

    run(14, "results outside desk scale", [](auto& d) {
        d << "s_<=k(C5^3) rows are bundled, not searched (s_<=12 alone ~1 min, lower rows beyond budget); "
             "the general p-group range of the short zero-sum theorem, its C5^4 case and asymptotic statements are "
             "hypothesis flags only";
        return true;
    });

    std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
