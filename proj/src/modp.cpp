#include "zsum/modp.hpp"

#include "zsum/error.hpp"

#include <string>

namespace zsum {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

void require_prime(std::uint64_t p) {
    if (!is_prime(static_cast<long long>(p))) bad(std::to_string(p) + " is not prime");
}

std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (b > a) return 0;
    // a, b < p: numerator and denominator are units mod p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // Fermat inverse
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return num * inv % p;
}

std::uint64_t binom_mod_signed(long long a, long long b, std::uint64_t p) {
    if (b < 0 || a < 0 || b > a) return 0;
    return binom_mod_p(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b), p);
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::uint64_t sum_mod(std::uint64_t a, std::uint64_t b, int sign, std::uint64_t p) {
    return sign > 0 ? (a + b) % p : (a + p - b) % p;
}

}  // namespace

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

BigInt binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

std::uint64_t binom_mod_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    require_prime(p);
    std::uint64_t r = 1;
    while (b > 0 || a > 0) {
        const std::uint64_t ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        r = r * small_binom_mod(ad, bd, p) % p;
        a /= p;
        b /= p;
    }
    return r % p;
}

BigInt gen_binom(long long n, long long j) {
    if (j < 0) return 0;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < j; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

BigInt a_i(long long t_len, long long k, long long i) {
    const BigInt second = binom(t_len - k + i - 1, k - 1);
    return binom(t_len - k, k - i) + (i % 2 == 0 ? second : BigInt(-second));
}

std::uint64_t a_i_mod(long long t_len, long long k, long long i, std::uint64_t p) {
    require_prime(p);
    return sum_mod(binom_mod_signed(t_len - k, k - i, p), binom_mod_signed(t_len - k + i - 1, k - 1, p),
                   i % 2 == 0 ? 1 : -1, p);
}

std::optional<int> compute_i0(long long t_len, long long k, std::uint64_t p, long long d_g) {
    require_prime(p);
    if (2 * k < d_g + 2) bad("compute_i0 needs 2k >= D + 2");
    for (long long i = 1; i <= 2 * k - d_g; ++i)
        if (a_i_mod(t_len, k, i, p) != 0) return static_cast<int>(i);
    return std::nullopt;
}

PDecomposition decompose(long long p, long long t_len, long long k) {
    if (!is_prime(p)) bad(std::to_string(p) + " is not prime");
    if (k < 1 || t_len < k) bad("decomposition needs 1 <= k <= |T|");
    PDecomposition dec;
    dec.p = p;
    dec.t_len = t_len;
    dec.k = k;
    dec.u = (t_len - k) / p;
    dec.v = (t_len - k) % p;
    dec.c = k / p;
    dec.d = k % p;

    if (dec.c > 0) {
        int t = 0;
        long long c = dec.c;
        while (c % p == 0) {
            c /= p;
            ++t;
        }
        const long long pt = ipow(p, t);
        const long long u1 = dec.u / pt;
        if (c <= p - 1 && u1 >= 1 && u1 <= p - 1) dec.level = PDecomposition::Level{t, c, u1, dec.u % pt};
    }
    if (k > 1) {
        long long pt = p;
        for (int t = 1; pt <= k - 1; ++t, pt *= p) {
            if ((k - 1) % pt != 0) break;
            const long long c1 = (k - 1) / pt;
            const long long u1 = (t_len - k) / pt;
            if (c1 >= 1 && c1 <= p - 1 && u1 >= 1 && u1 <= p - 1)
                dec.k_one = PDecomposition::KOne{t, c1, u1, (t_len - k) % pt};
        }
    }
    return dec;
}

I0Prediction predict_i0(const PDecomposition& dec) {
    I0Prediction out;
    const long long p = dec.p, u = dec.u, c = dec.c, d = dec.d, v = dec.v;
    const auto pp = static_cast<std::uint64_t>(p);
    if (d < v + 1) return out;
    if (binom_mod_signed(u, c, pp) == 0) {
        out.kind = I0Prediction::Kind::LowerBound;
        out.value = p + d - v;
        return out;
    }
    if ((d - v) % 2 == 0) {
        out.kind = I0Prediction::Kind::Exact;
        out.value = d - v;
    } else if (v + d != p) {
        out.kind = I0Prediction::Kind::Exact;
        out.value = d - v + 1;
    } else {
        // C(u, c-l) vanishes for l > c while C(u+l, c) is eventually a unit
        const long long limit = c + 4 * (u + c + 2) * p + 16;
        for (long long l = 1; l <= limit; ++l) {
            const int sign = l % 2 == 1 ? 1 : -1;  // (-1)^{1+l}
            if (sum_mod(binom_mod_signed(u, c - l, pp), binom_mod_signed(u + l, c, pp), sign, pp) != 0) {
                out.kind = I0Prediction::Kind::NeedsL0;
                out.l0 = l;
                out.value = d - v + l * p;
                return out;
            }
        }
    }
    return out;
}

bool check_4_7(const PDecomposition& dec) {
    if (!dec.level) bad("k is not of the form c1 p^{t+1} + d with the required ranges");
    const auto& lv = *dec.level;
    // the Lucas step on C((u+1)p+d-1, cp+d-1) needs the digit d-1 >= 0
    if (dec.d < 1) return false;
    const auto p = static_cast<std::uint64_t>(dec.p);
    const int sign = (dec.p + dec.d - dec.v) % 2 == 0 ? 1 : -1;
    return sum_mod(binom_mod_signed(lv.u1, lv.c1 - 1, p), binom_mod_signed(lv.u1 + 1, lv.c1, p), sign, p) != 0;
}

bool check_4_7_literal(const PDecomposition& dec) {
    if (!dec.level) bad("k is not of the form c1 p^{t+1} + d with the required ranges");
    const auto& lv = *dec.level;
    const auto p = static_cast<std::uint64_t>(dec.p);
    const int sign = (dec.p + dec.d - dec.v) % 2 == 0 ? 1 : -1;
    return sum_mod(binom_mod_signed(lv.u1, lv.c1 - 1, p), binom_mod_signed(lv.u1 + 1, lv.c1, p), sign, p) != 0;
}

bool check_4_8(const PDecomposition& dec) {
    if (!dec.level) bad("k is not of the form c1 p^{t+1} + d with the required ranges");
    if (dec.d < 1) return false;
    return dec.level->u1 + dec.level->c1 + 1 < dec.p;
}

bool check_4_9(const PDecomposition& dec) {
    if (!dec.k_one) bad("k is not of the form c1 p^t + 1 with t >= 1 and the required ranges");
    const auto& ko = *dec.k_one;
    const auto p = static_cast<std::uint64_t>(dec.p);
    return sum_mod(binom_mod_signed(ko.u1, ko.c1 - 1, p), binom_mod_signed(ko.u1 + 1, ko.c1, p), 1, p) != 0;
}

bool row_transform_verify(long long x, long long c, long long k, long long u1, long long u2, long long lambda) {
    if (c < 0 || k < 0 || u1 < 0 || u2 < 0 || lambda < 0) return false;
    const auto rows = static_cast<std::size_t>(lambda + 1);
    const auto cols = static_cast<std::size_t>(k + 3);
    // column tops: c+u1, c+u2, c+k, c+k-1, ..., c
    std::vector<long long> top{c + u1, c + u2};
    for (long long m = k; m >= 0; --m) top.push_back(c + m);
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t col = 0; col < cols; ++col) a[j][col] = binom(top[col], static_cast<long long>(j));
    a[0][0] += x;

    for (long long pass = 0; pass < c; ++pass)
        for (std::size_t i = 0; i + 1 < rows; ++i)
            for (std::size_t col = 0; col < cols; ++col) a[i + 1][col] -= a[i][col];

    for (std::size_t j = 0; j < rows; ++j) {
        const auto jj = static_cast<long long>(j);
        BigInt first = binom(u1, jj) + BigInt(x) * gen_binom(jj + c - 1, jj) * (j % 2 == 0 ? 1 : -1);
        if (a[j][0] != first) return false;
        if (a[j][1] != binom(u2, jj)) return false;
        for (std::size_t col = 2; col < cols; ++col)
            if (a[j][col] != binom(top[col] - c, jj)) return false;
    }
    return true;
}

CriterionReport criterion_report(long long p, long long t_len, long long k, long long d_g) {
    if (!is_prime(p)) bad(std::to_string(p) + " is not prime");
    if (k < 1) bad("k must be >= 1");
    if (t_len < 2 * k) bad("criterion needs |T| >= 2k");
    if (2 * k < d_g + 2) bad("criterion needs 2k >= D + 2");
    CriterionReport rep;
    rep.p = p;
    rep.t_len = t_len;
    rep.k = k;
    rep.d_g = d_g;
    const auto pp = static_cast<std::uint64_t>(p);
    for (long long i = 1; i <= 2 * k - d_g; ++i) {
        const auto r = a_i_mod(t_len, k, i, pp);
        rep.a_values.emplace_back(static_cast<int>(i), r);
        if (r != 0 && !rep.i0) rep.i0 = static_cast<int>(i);
    }
    rep.guarantees_short = rep.i0.has_value();
    const auto dec = decompose(p, t_len, k);
    if (dec.level && 2 * k - d_g >= p + dec.d - dec.v) {
        rep.l4_7 = check_4_7(dec);
        rep.c4_8 = check_4_8(dec);
    }
    if (dec.k_one && 2 * k - d_g >= 2) rep.l4_9 = check_4_9(dec);
    return rep;
}

CriterionReport zerosub_guarantee(const Sequence& t, long long k, std::uint64_t p, long long d_g) {
    if (t.group().p_group_prime() != static_cast<int>(p)) bad("T must lie in a " + std::to_string(p) + "-group");
    if (!(sigma(t) == t.group().zero())) bad("T must be a zero-sum sequence");
    return criterion_report(static_cast<long long>(p), static_cast<long long>(t.length()), k, d_g);
}

}  // namespace zsum
