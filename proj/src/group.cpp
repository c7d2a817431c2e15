#include "zsum/group.hpp"

#include "zsum/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace zsum {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidFactor: return "invalid-factor";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::UnsupportedGroup: return "unsupported-group";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::InvalidParams: return "invalid-params";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime_power(long long n, long long* base = nullptr) {
    if (n < 2) return false;
    auto f = factorize(n);
    if (f.size() != 1) return false;
    if (base) *base = f[0].first;
    return true;
}

}  // namespace

Group::Group(std::vector<int> factors) : factors_(std::move(factors)) {
    stride_.assign(factors_.size(), 1);
    order_ = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        stride_[i] = static_cast<std::uint32_t>(order_);
        order_ *= static_cast<std::uint64_t>(factors_[i]);
    }
}

Group Group::make(const std::vector<long long>& raw_factors) {
    // prime -> list of exponents, one per cyclic factor containing that prime
    std::map<long long, std::vector<int>> primary;
    for (long long n : raw_factors) {
        if (n <= 1)
            throw Error(ErrorKind::InvalidFactor,
                        "cyclic factor must be >= 2, got " + std::to_string(n));
        if (n > (1LL << 31))
            throw Error(ErrorKind::InvalidFactor, "cyclic factor too large: " + std::to_string(n));
        for (auto [p, e] : factorize(n)) primary[p].push_back(e);
    }
    std::size_t rank = 0;
    for (auto& [p, exps] : primary) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        rank = std::max(rank, exps.size());
    }
    // largest invariant factor collects the largest power of every prime, etc.
    std::vector<long long> chain(rank, 1);
    for (const auto& [p, exps] : primary) {
        for (std::size_t j = 0; j < exps.size(); ++j) {
            long long pe = 1;
            for (int t = 0; t < exps[j]; ++t) pe *= p;
            chain[rank - 1 - j] *= pe;
        }
    }
    std::vector<int> factors;
    factors.reserve(rank);
    for (long long c : chain) {
        if (c > (1LL << 31) - 1)
            throw Error(ErrorKind::InvalidFactor, "invariant factor exceeds 32 bits");
        factors.push_back(static_cast<int>(c));
    }
    return Group(std::move(factors));
}

Group Group::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error(ErrorKind::Parse, "empty group spec");

    auto parse_int = [&](std::size_t& pos) -> long long {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || pos - start > 12)
            throw Error(ErrorKind::Parse, "expected a number in group spec '" + s + "'");
        return std::stoll(s.substr(start, pos - start));
    };

    std::vector<long long> raw;
    if (std::isdigit(static_cast<unsigned char>(s[0]))) {
        std::size_t pos = 0;
        while (true) {
            raw.push_back(parse_int(pos));
            if (pos == s.size()) break;
            if (s[pos] != ',') throw Error(ErrorKind::Parse, "bad group spec '" + s + "'");
            ++pos;
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            if (pos >= s.size() || (s[pos] != 'C' && s[pos] != 'c'))
                throw Error(ErrorKind::Parse, "bad group spec '" + s + "'");
            ++pos;
            long long n = parse_int(pos);
            long long r = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                r = parse_int(pos);
            }
            if (n == 1 && raw.empty() && pos == s.size()) return Group{};
            if (r > 64) throw Error(ErrorKind::Parse, "rank too large in '" + s + "'");
            for (long long i = 0; i < r; ++i) raw.push_back(n);
            if (pos == s.size()) break;
            if (s[pos] != 'x' && s[pos] != 'X' && s[pos] != '+')
                throw Error(ErrorKind::Parse, "bad separator in group spec '" + s + "'");
            ++pos;
        }
    }
    return make(raw);
}

bool Group::is_homocyclic() const noexcept {
    return factors_.empty() || factors_.front() == factors_.back();
}

int Group::p_group_prime() const noexcept {
    long long p = 0;
    if (factors_.empty() || !is_prime_power(factors_.back(), &p)) return 0;
    return static_cast<int>(p);  // every n_i divides n_r
}

int Group::d_star() const noexcept {
    int d = 1;
    for (int n : factors_) d += n - 1;
    return d;
}

Element Group::zero() const { return Element{std::vector<int>(factors_.size(), 0)}; }

Element Group::basis(int i) const {
    if (i < 0 || i >= rank()) throw Error(ErrorKind::InvalidInput, "basis index out of range");
    Element e = zero();
    e.coords[static_cast<std::size_t>(i)] = 1;
    return e;
}

Element Group::element(std::vector<int> coords) const {
    if (coords.size() != factors_.size())
        throw Error(ErrorKind::GroupMismatch, "coordinate count does not match group rank");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] %= factors_[i];
        if (coords[i] < 0) coords[i] += factors_[i];
    }
    return Element{std::move(coords)};
}

bool Group::contains(const Element& a) const noexcept {
    if (a.coords.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (a.coords[i] < 0 || a.coords[i] >= factors_[i]) return false;
    return true;
}

void Group::check_member(const Element& a) const {
    if (!contains(a)) throw Error(ErrorKind::GroupMismatch, "element does not belong to " + to_string());
}

Element Group::add(const Element& a, const Element& b) const {
    check_member(a);
    check_member(b);
    Element out = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out.coords[i] += b.coords[i];
        if (out.coords[i] >= factors_[i]) out.coords[i] -= factors_[i];
    }
    return out;
}

Element Group::neg(const Element& a) const {
    check_member(a);
    Element out = a;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (out.coords[i] != 0) out.coords[i] = factors_[i] - out.coords[i];
    return out;
}

Element Group::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Group::scalar_mul(long long c, const Element& a) const {
    check_member(a);
    Element out = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long v = (c % factors_[i]) * a.coords[i] % factors_[i];
        if (v < 0) v += factors_[i];
        out.coords[i] = static_cast<int>(v);
    }
    return out;
}

int Group::order_of(const Element& a) const {
    check_member(a);
    long long ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long n = factors_[i];
        long long oi = n / std::gcd(n, static_cast<long long>(a.coords[i]));
        ord = std::lcm(ord, oi);
    }
    return static_cast<int>(ord);
}

std::uint32_t Group::index_of(const Element& a) const {
    check_member(a);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx += std::uint64_t{stride_[i]} * a.coords[i];
    return static_cast<std::uint32_t>(idx);
}

Element Group::element_at(std::uint32_t index) const {
    if (index >= order_) throw Error(ErrorKind::InvalidInput, "element index out of range");
    Element e = zero();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        e.coords[i] = static_cast<int>(index / stride_[i]);
        index %= stride_[i];
    }
    return e;
}

void Group::for_each_element(const std::function<void(const Element&)>& fn,
                             std::uint64_t cap) const {
    if (order_ > cap)
        throw Error(ErrorKind::ResourceLimit,
                    "group order " + std::to_string(order_) + " exceeds enumeration cap");
    Element e = zero();
    for (std::uint64_t k = 0; k < order_; ++k) {
        fn(e);
        for (std::size_t i = factors_.size(); i-- > 0;) {
            if (++e.coords[i] < factors_[i]) break;
            e.coords[i] = 0;
        }
    }
}

std::vector<Element> Group::elements(std::uint64_t cap) const {
    std::vector<Element> out;
    if (order_ <= cap) out.reserve(order_);
    for_each_element([&](const Element& e) { out.push_back(e); }, cap);
    return out;
}

std::string Group::to_string() const {
    if (factors_.empty()) return "C1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < factors_.size()) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!first) os << 'x';
        first = false;
        os << 'C' << factors_[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

bool d_equals_dstar_known(const Group& g) {
    const auto& f = g.factors();
    const int r = g.rank();
    if (r <= 2) return true;                  // (a)
    if (g.p_group_prime() != 0) return true;  // (b)

    // (c) p-primary part G' with D*(G') <= 2 exp(G') - 1, cyclic complement
    std::map<long long, std::vector<int>> primary;  // p -> exponents per factor
    for (int n : f)
        for (auto [p, e] : factorize(n)) primary[p].push_back(e);
    for (const auto& [p, exps] : primary) {
        bool complement_cyclic = true;
        for (const auto& [q, qe] : primary)
            if (q != p && qe.size() > 1) complement_cyclic = false;
        if (!complement_cyclic) continue;
        long long dstar = 1, expo = 1;
        for (int e : exps) {
            long long pe = 1;
            for (int t = 0; t < e; ++t) pe *= p;
            dstar += pe - 1;
            expo = std::max(expo, pe);
        }
        if (dstar <= 2 * expo - 1) return true;
    }

    if (r == 3) {
        if (f[0] == 2) return true;                     // (d)
        if (f[0] == 3 && f[1] % 6 == 0) return true;    // (e)
        bool all_even = f[0] % 2 == 0;                  // (f)
        long long base = 0;
        bool same_prime = all_even;
        for (int n : f) {
            if (!same_prime) break;
            long long half = n / 2;
            if (half == 1) continue;
            long long b = 0;
            if (!is_prime_power(half, &b) || (base != 0 && b != base)) same_prime = false;
            else base = b;
        }
        if (same_prime) return true;
    }
    if (r == 4 && f[0] == 2 && f[1] == 2 && f[2] == 2) return true;  // (g)
    return false;
}

Element Automorphism::apply(const Element& a) const {
    Element out{std::vector<int>(static_cast<std::size_t>(r), 0)};
    for (int i = 0; i < r; ++i) {
        long long acc = 0;
        for (int j = 0; j < r; ++j)
            acc += static_cast<long long>(matrix[static_cast<std::size_t>(i * r + j)]) *
                   a.coords[static_cast<std::size_t>(j)];
        out.coords[static_cast<std::size_t>(i)] = static_cast<int>(acc % n);
    }
    return out;
}

bool Automorphism::is_identity() const noexcept {
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (matrix[static_cast<std::size_t>(i * r + j)] != (i == j ? 1 % n : 0)) return false;
    return true;
}

namespace {

// Determinant mod n by cofactor expansion; r is tiny here.
long long det_mod(const std::vector<int>& m, int r, int n) {
    if (r == 1) return m[0] % n;
    long long acc = 0;
    std::vector<int> minor(static_cast<std::size_t>((r - 1) * (r - 1)));
    for (int col = 0; col < r; ++col) {
        if (m[static_cast<std::size_t>(col)] == 0) continue;
        std::size_t k = 0;
        for (int i = 1; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (j != col) minor[k++] = m[static_cast<std::size_t>(i * r + j)];
        long long term = m[static_cast<std::size_t>(col)] * det_mod(minor, r - 1, n) % n;
        acc = (col % 2 == 0) ? acc + term : acc - term;
        acc %= n;
    }
    return (acc % n + n) % n;
}

}  // namespace

std::vector<Automorphism> enumerate_automorphisms(const Group& g, std::uint64_t cap) {
    if (!g.is_homocyclic() || g.rank() == 0)
        throw Error(ErrorKind::UnsupportedGroup,
                    "automorphisms are only enumerated for homocyclic groups, got " + g.to_string());
    const int n = g.exponent();
    const int r = g.rank();
    const std::size_t cells = static_cast<std::size_t>(r * r);
    double candidates = 1;
    for (std::size_t i = 0; i < cells; ++i) candidates *= n;
    if (candidates > static_cast<double>(cap))
        throw Error(ErrorKind::ResourceLimit, "too many candidate matrices for " + g.to_string());

    std::vector<Automorphism> out;
    std::vector<int> m(cells, 0);
    while (true) {
        if (std::gcd(det_mod(m, r, n), static_cast<long long>(n)) == 1)
            out.push_back(Automorphism{n, r, m});
        std::size_t i = cells;
        while (i > 0) {
            --i;
            if (++m[i] < n) break;
            m[i] = 0;
            if (i == 0) return out;
        }
    }
}

}  // namespace zsum
