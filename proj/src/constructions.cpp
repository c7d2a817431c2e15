#include "zsum/constructions.hpp"

#include "zsum/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace zsum {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidParams, msg); }

Group homocyclic(int n, int r) { return Group::make(std::vector<long long>(static_cast<std::size_t>(r), n)); }

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

Sequence build_lowercnr(const LowerCnrParams& p) {
    if (p.n < 2 || p.r < 2) bad("lowercnr needs n >= 2 and r >= 2");
    if (p.k < 0 || p.k > p.n - 1) bad("lowercnr needs k in [0, n-1]");
    const Group g = homocyclic(p.n, p.r);
    std::vector<int> g0(static_cast<std::size_t>(p.r), 0);
    g0[0] = g0[1] = 1;
    // the g_i, each carried with multiplicity n - 1
    std::vector<std::vector<int>> base;
    for (int i = 0; i < 2; ++i) {
        std::vector<int> e(static_cast<std::size_t>(p.r), 0);
        e[static_cast<std::size_t>(i)] = 1;
        base.push_back(e);
    }
    for (int level = 2; level < p.r; ++level) {
        const std::size_t m = base.size();
        for (std::size_t i = 0; i < m; ++i) {
            auto shifted = base[i];
            shifted[static_cast<std::size_t>(level)] = 1;
            base.push_back(shifted);
        }
    }
    Sequence s(g);
    for (const auto& c : base) s.append(g.element(c), p.n - 1);
    if (p.k > 0) s.append(g.element(g0), p.k);
    return s;
}

int lower_general_x(const LowerGeneralParams& p) {
    const Group& g = p.group;
    if (g.rank() < 2) bad("lower_general needs rank >= 2");
    const int d = g.d_star();
    const int e = g.exponent();
    if (d - p.k < e || d - p.k > 2 * e - 1) bad("lower_general needs exp(G) <= D*(G) - k <= 2 exp(G) - 1");
    const int dh = d - (e - 1);
    return e + p.k - dh;
}

Sequence build_lower_general(const LowerGeneralParams& p) {
    const int x = lower_general_x(p);
    const Group& g = p.group;
    const int r = g.rank();
    const Element er = g.basis(r - 1);
    Sequence s(g);
    if (x > 0) s.append(er, x);
    for (int i = 0; i + 1 < r; ++i) {
        const int ni = g.factors()[static_cast<std::size_t>(i)];
        s.append(g.basis(i), ni - 1);
        s.append(g.sub(er, g.basis(i)), ni - 1);
    }
    return s;
}

Sequence build_inv2(int n, int k, const Inv2Params& params) {
    if (n < 2) bad("inv2 needs n >= 2");
    if (k < 0 || k > n - 1) bad("inv2 needs k in [0, n-1]");
    const Group g = homocyclic(n, 2);
    const Element e1 = g.basis(0);
    const Element e2 = g.basis(1);
    Sequence s(g);
    if (k == n - 1 && k >= 1 && (k != 1 || n == 2)) {
        const int x = params.x;
        if (x < 1 || x > n - 1 || std::gcd(x, n) != 1) bad("inv2 needs x in [1, n-1] with gcd(x, n) = 1");
        s.append(e1, n - 1).append(e2, n - 1).append(g.element({x, 1}), k);
        return s;
    }
    if (k >= 2) {
        s.append(e1, n - 1).append(e2, n - 1).append(g.add(e1, e2), k);
        return s;
    }
    std::vector<int> xs = params.xs;
    if (xs.empty()) {
        xs.assign(static_cast<std::size_t>(n), 0);
        xs.back() = 1;
    }
    if (static_cast<int>(xs.size()) != n) bad("inv2 needs exactly n values x_i");
    long long total = 0;
    for (int v : xs) {
        if (v < 0 || v > n - 1) bad("inv2 needs every x_i in [0, n-1]");
        total += v;
    }
    if (mod(total, n) != 1 % n) bad("inv2 needs x_1 + ... + x_n = 1 mod n");
    s.append(e1, n - 1);
    const int terms = k == 1 ? n : n - 1;
    for (int i = 0; i < terms; ++i) s.append(g.element({xs[static_cast<std::size_t>(i)], 1}));
    return s;
}

ConstructionReport verify_construction(const Sequence& s, std::size_t expected_length, int min_zs) {
    ConstructionReport rep;
    rep.length = s.length();
    rep.expected_length = expected_length;
    rep.required_min = min_zs;
    rep.min_zero_sum = min_zero_sum_length(s);
    rep.length_ok = rep.length == expected_length;
    rep.min_ok = !rep.min_zero_sum || *rep.min_zero_sum >= min_zs;
    return rep;
}

namespace {

// family tests in the standard basis; `terms` is (element, multiplicity)
using Terms = std::vector<std::pair<Element, int>>;

int mult_of(const Terms& t, const std::vector<int>& c) {
    for (const auto& [e, m] : t)
        if (e.coords == c) return m;
    return 0;
}

bool item2(const Terms& t, int n) {
    // e_1^{n-1} and n terms with second coordinate 1, first coordinates summing to 1
    if (mult_of(t, {1 % n, 0}) < n - 1) return false;
    long long sum = 0;
    int count = 0;
    for (const auto& [e, m] : t) {
        if (e.coords == std::vector<int>{1 % n, 0}) {
            if (m != n - 1) return false;
            continue;
        }
        if (e.coords[1] != 1 % n) return false;
        sum += static_cast<long long>(e.coords[0]) * m;
        count += m;
    }
    return count == n && mod(sum, n) == 1 % n;
}

bool item3(const Terms& t, int n, int k) {
    return t.size() == 3 && mult_of(t, {1, 0}) == n - 1 && mult_of(t, {0, 1}) == n - 1 &&
           mult_of(t, {1 % n, 1 % n}) == k;
}

bool item4(const Terms& t, int n, int k) {
    if (t.size() != 3 || mult_of(t, {1 % n, 0}) != n - 1 || mult_of(t, {0, 1 % n}) != n - 1) return false;
    for (const auto& [e, m] : t) {
        if (e.coords[1] != 1 % n || e.coords[0] == 0) continue;
        return m == k && std::gcd(e.coords[0], n) == 1;
    }
    return false;
}

bool matches_family(const Terms& t, int n, int k) {
    if (k == 1 && item2(t, n)) return true;
    if (k >= 2 && k <= n - 2 && item3(t, n, k)) return true;
    if (k == n - 1 && k >= 1 && item4(t, n, k)) return true;
    return false;
}

}  // namespace

bool match_inverse_structure(const Sequence& s, int n, int k) {
    const Group g = homocyclic(n, 2);
    if (!(s.group() == g)) throw Error(ErrorKind::InvalidInput, "sequence is not over " + g.to_string());
    if (k < 0 || k > n - 1) throw Error(ErrorKind::InvalidInput, "k must lie in [0, n-1]");
    if (static_cast<int>(s.length()) != 2 * n - 2 + k)
        throw Error(ErrorKind::InvalidInput, "length must be 2n - 2 + k");
    Sequence target = s;
    int family_k = k;
    if (k == 0) {
        target.append(g.neg(sigma(s)));
        family_k = 1;
    }
    if (target.multiplicity(g.zero()) > 0) return false;
    const auto autos = enumerate_automorphisms(g);
    const auto terms = target.terms();
    const long long count = static_cast<long long>(autos.size());
    bool found = false;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i) {
        bool done;
#pragma omp atomic read
        done = found;
        if (done) continue;
        Terms img;
        img.reserve(terms.size());
        for (const auto& [e, m] : terms) img.emplace_back(autos[static_cast<std::size_t>(i)].apply(e), m);
        if (matches_family(img, n, family_k)) {
#pragma omp atomic write
            found = true;
        }
    }
    return found;
}

}  // namespace zsum
