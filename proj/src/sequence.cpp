#include "zsum/sequence.hpp"

#include "zsum/detail/index_arith.hpp"
#include "zsum/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace zsum {

LengthSet LengthSet::interval(int k) {
    if (k < 1) throw Error(ErrorKind::InvalidInput, "interval [1,k] needs k >= 1");
    LengthSet l;
    l.kind_ = Kind::Interval;
    for (int i = 1; i <= k; ++i) l.members_.insert(i);
    return l;
}

LengthSet LengthSet::singleton(int m) {
    if (m < 1) throw Error(ErrorKind::InvalidInput, "length set members must be >= 1");
    LengthSet l;
    l.kind_ = Kind::Singleton;
    l.members_ = {m};
    return l;
}

LengthSet LengthSet::explicit_set(std::set<int> members) {
    if (members.empty()) throw Error(ErrorKind::InvalidInput, "length set must be nonempty");
    if (*members.begin() < 1) throw Error(ErrorKind::InvalidInput, "length set members must be >= 1");
    LengthSet l;
    l.kind_ = Kind::Explicit;
    l.members_ = std::move(members);
    return l;
}

LengthSet LengthSet::all_positive() { return LengthSet{}; }

bool LengthSet::contains(int len) const noexcept {
    if (kind_ == Kind::AllPositive) return len >= 1;
    return members_.count(len) != 0;
}

std::optional<int> LengthSet::max() const noexcept {
    if (kind_ == Kind::AllPositive) return std::nullopt;
    return *members_.rbegin();
}

const std::set<int>& LengthSet::members() const {
    if (kind_ == Kind::AllPositive)
        throw Error(ErrorKind::InvalidInput, "AllPositive length set is not enumerable");
    return members_;
}

std::string LengthSet::to_string() const {
    switch (kind_) {
    case Kind::AllPositive: return "N";
    case Kind::Interval: return "[1," + std::to_string(*members_.rbegin()) + "]";
    default: {
        std::string s = "{";
        bool first = true;
        for (int m : members_) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(m);
        }
        return s + "}";
    }
    }
}

Sequence Sequence::from_elements(const Group& g, const std::vector<Element>& terms) {
    Sequence s(g);
    for (const auto& e : terms) s.append(e);
    return s;
}

Sequence& Sequence::append(const Element& e, int mult) {
    if (!group_.contains(e))
        throw Error(ErrorKind::GroupMismatch, "term does not belong to " + group_.to_string());
    return append_index(group_.index_of(e), mult);
}

Sequence& Sequence::append_index(std::uint32_t index, int mult) {
    if (mult < 0) throw Error(ErrorKind::InvalidInput, "negative multiplicity");
    if (index >= group_.order()) throw Error(ErrorKind::GroupMismatch, "element index out of range");
    if (mult == 0) return *this;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), std::make_pair(index, 0),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != terms_.end() && it->first == index) {
        it->second += mult;
    } else {
        terms_.insert(it, {index, mult});
        display_order_.push_back(index);
    }
    length_ += static_cast<std::size_t>(mult);
    return *this;
}

Sequence Sequence::parse(const Group& g, std::string_view text) {
    Sequence s(g);
    std::string item;
    auto flush = [&](std::string raw) {
        raw.erase(std::remove_if(raw.begin(), raw.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  raw.end());
        if (raw.empty()) return;
        int mult = 1;
        auto caret = raw.find('^');
        std::string coords_text = raw.substr(0, caret);
        try {
            if (caret != std::string::npos) {
                std::size_t used = 0;
                std::string m = raw.substr(caret + 1);
                mult = std::stoi(m, &used);
                if (used != m.size() || mult < 1) throw std::invalid_argument("mult");
            }
            std::vector<int> coords;
            std::stringstream ss(coords_text);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                std::size_t used = 0;
                coords.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument("coord");
            }
            if (coords.size() != static_cast<std::size_t>(g.rank()))
                throw Error(ErrorKind::Parse, "term '" + raw + "' has wrong number of coordinates for " +
                                                  g.to_string());
            s.append(g.element(std::move(coords)), mult);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "cannot parse sequence term '" + raw + "'");
        }
    };
    for (char ch : text) {
        if (ch == ';') {
            flush(item);
            item.clear();
        } else {
            item.push_back(ch);
        }
    }
    flush(item);
    return s;
}

int Sequence::multiplicity(const Element& e) const {
    if (!group_.contains(e)) throw Error(ErrorKind::GroupMismatch, "element does not belong to group");
    const auto idx = group_.index_of(e);
    for (const auto& [i, m] : terms_)
        if (i == idx) return m;
    return 0;
}

int Sequence::height() const noexcept {
    int h = 0;
    for (const auto& t : terms_) h = std::max(h, t.second);
    return h;
}

std::vector<Element> Sequence::support() const {
    std::vector<Element> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(group_.element_at(t.first));
    return out;
}

std::vector<std::pair<Element, int>> Sequence::terms() const {
    std::vector<std::pair<Element, int>> out;
    out.reserve(terms_.size());
    for (const auto& [i, m] : terms_) out.emplace_back(group_.element_at(i), m);
    return out;
}

std::vector<std::uint32_t> Sequence::expanded_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(length_);
    for (const auto& [i, m] : terms_) out.insert(out.end(), static_cast<std::size_t>(m), i);
    return out;
}

std::string Sequence::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t idx : display_order_) {
        int mult = 0;
        for (const auto& t : terms_)
            if (t.first == idx) mult = t.second;
        if (!first) os << "; ";
        first = false;
        const Element e = group_.element_at(idx);
        for (std::size_t i = 0; i < e.coords.size(); ++i) os << (i ? "," : "") << e.coords[i];
        os << '^' << mult;
    }
    return os.str();
}

bool operator<(const Sequence& a, const Sequence& b) {
    const auto ea = a.expanded_indices();
    const auto eb = b.expanded_indices();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Element sigma(const Sequence& s) {
    const Group& g = s.group();
    Element acc = g.zero();
    for (const auto& [e, m] : s.terms()) acc = g.add(acc, g.scalar_mul(m, e));
    return acc;
}

namespace {

void check_cells(const Sequence& s, std::uint64_t cap) {
    const std::uint64_t cells = s.group().order() * (s.length() + 1);
    if (s.group().order() > kDefaultOrderCap || cells > cap)
        throw Error(ErrorKind::ResourceLimit,
                    "subsequence table of " + std::to_string(cells) + " cells exceeds the cap");
}

}  // namespace

FeasibilityTable feasibility(const Sequence& s, std::uint64_t cap) {
    check_cells(s, cap);
    const detail::IndexArith ar(s.group());
    const std::size_t maxlen = s.length();
    FeasibilityTable cur(ar.order(), maxlen);
    cur.set(0, 0);
    std::size_t used = 0;
    for (const auto& [g, mult] : s.indexed_terms()) {
        FeasibilityTable next = cur;
        // add j copies of g, j in [1, mult]
        std::uint32_t jg = 0;
        for (int j = 1; j <= mult; ++j) {
            jg = ar.add(jg, g);
            for (std::uint32_t h = 0; h < ar.order(); ++h) {
                const std::uint32_t src = ar.sub(h, jg);
                for (std::size_t l = 0; l <= used; ++l)
                    if (cur.at(src, l)) next.set(h, l + static_cast<std::size_t>(j));
            }
        }
        used += static_cast<std::size_t>(mult);
        cur = std::move(next);
    }
    return cur;
}

std::optional<int> min_zero_sum_length(const Sequence& s) {
    if (s.empty()) return std::nullopt;
    const auto table = feasibility(s);
    for (std::size_t l = 1; l <= s.length(); ++l)
        if (table.at(0, l)) return static_cast<int>(l);
    return std::nullopt;
}

bool has_zero_sum_in(const Sequence& s, const LengthSet& lengths) {
    if (s.empty()) return false;
    const auto table = feasibility(s);
    for (std::size_t l = 1; l <= s.length(); ++l)
        if (table.at(0, l) && lengths.contains(static_cast<int>(l))) return true;
    return false;
}

namespace {

// Generic per-term DP on counts: next[h][l] = sum_j C(m, j) cur[h - j g][l - j].
template <typename Value, typename MulAdd>
std::vector<std::vector<Value>> count_dp(const Sequence& s, std::size_t max_len, const Value& one,
                                         MulAdd muladd, const std::vector<std::vector<Value>>& binom) {
    const detail::IndexArith ar(s.group());
    std::vector<std::vector<Value>> cur(ar.order(), std::vector<Value>(max_len + 1, Value{}));
    cur[0][0] = one;
    for (const auto& [g, mult] : s.indexed_terms()) {
        auto next = cur;
        std::uint32_t jg = 0;
        for (int j = 1; j <= mult; ++j) {
            jg = ar.add(jg, g);
            const Value& c = binom[static_cast<std::size_t>(mult)][static_cast<std::size_t>(j)];
            for (std::uint32_t h = 0; h < ar.order(); ++h) {
                const auto& src = cur[ar.sub(h, jg)];
                for (std::size_t l = static_cast<std::size_t>(j); l <= max_len; ++l)
                    muladd(next[h][l], c, src[l - static_cast<std::size_t>(j)]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

template <typename Value, typename Reduce>
std::vector<std::vector<Value>> pascal(int n, Reduce reduce) {
    std::vector<std::vector<Value>> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, Value{});
        c[static_cast<std::size_t>(i)][0] = reduce(Value{1});
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = reduce(Value{1});
        for (int j = 1; j < i; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                reduce(c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                       c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
    }
    return c;
}

}  // namespace

std::vector<std::vector<BigInt>> count_table(const Sequence& s, std::uint64_t cap) {
    check_cells(s, cap);
    const auto binom = pascal<BigInt>(s.height(), [](const BigInt& v) { return v; });
    return count_dp<BigInt>(s, s.length(), BigInt{1},
                            [](BigInt& acc, const BigInt& c, const BigInt& v) {
                                if (!v.is_zero()) acc += c * v;
                            },
                            binom);
}

BigInt count_subseq(const Sequence& s, const Element& g, int k) {
    if (!s.group().contains(g)) throw Error(ErrorKind::GroupMismatch, "target not in group");
    if (k < 0) throw Error(ErrorKind::InvalidInput, "negative subsequence length");
    if (static_cast<std::size_t>(k) > s.length()) return 0;
    check_cells(s, kDefaultTableCap);
    const auto binom = pascal<BigInt>(s.height(), [](const BigInt& v) { return v; });
    const auto table = count_dp<BigInt>(s, static_cast<std::size_t>(k), BigInt{1},
                                        [](BigInt& acc, const BigInt& c, const BigInt& v) {
                                            if (!v.is_zero()) acc += c * v;
                                        },
                                        binom);
    return table[s.group().index_of(g)][static_cast<std::size_t>(k)];
}

std::uint64_t count_subseq_mod(const Sequence& s, const Element& g, int k, std::uint64_t m) {
    if (m == 0) throw Error(ErrorKind::InvalidInput, "modulus must be >= 1");
    if (!s.group().contains(g)) throw Error(ErrorKind::GroupMismatch, "target not in group");
    if (k < 0) throw Error(ErrorKind::InvalidInput, "negative subsequence length");
    if (static_cast<std::size_t>(k) > s.length()) return 0;
    check_cells(s, kDefaultTableCap);
    using U = unsigned __int128;
    auto reduce = [m](std::uint64_t v) { return v % m; };
    const auto binom = pascal<std::uint64_t>(s.height(), reduce);
    const auto table = count_dp<std::uint64_t>(
        s, static_cast<std::size_t>(k), 1 % m,
        [m](std::uint64_t& acc, std::uint64_t c, std::uint64_t v) {
            acc = static_cast<std::uint64_t>((U{acc} + U{c} * v) % m);
        },
        binom);
    return table[s.group().index_of(g)][static_cast<std::size_t>(k)];
}

std::pair<std::uint64_t, std::uint64_t> n_plus_minus(const Sequence& s, const Element& g, std::uint64_t p) {
    if (p < 2) throw Error(ErrorKind::InvalidInput, "modulus must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error(ErrorKind::InvalidInput, "modulus must be prime");
    if (!s.group().contains(g)) throw Error(ErrorKind::GroupMismatch, "target not in group");
    const detail::IndexArith ar(s.group());
    using U = unsigned __int128;
    const auto binom = pascal<std::uint64_t>(s.height(), [p](std::uint64_t v) { return v % p; });
    // parity[h][0] even-length count, parity[h][1] odd-length count
    std::vector<std::array<std::uint64_t, 2>> cur(ar.order(), {0, 0});
    cur[0][0] = 1 % p;
    for (const auto& [t, mult] : s.indexed_terms()) {
        auto next = cur;
        std::uint32_t jt = 0;
        for (int j = 1; j <= mult; ++j) {
            jt = ar.add(jt, t);
            const std::uint64_t c = binom[static_cast<std::size_t>(mult)][static_cast<std::size_t>(j)];
            for (std::uint32_t h = 0; h < ar.order(); ++h) {
                const auto& src = cur[ar.sub(h, jt)];
                for (int par = 0; par < 2; ++par) {
                    auto& dst = next[h][static_cast<std::size_t>(par ^ (j & 1))];
                    dst = static_cast<std::uint64_t>((U{dst} + U{c} * src[static_cast<std::size_t>(par)]) % p);
                }
            }
        }
        cur = std::move(next);
    }
    const auto& cell = cur[s.group().index_of(g)];
    return {cell[0], cell[1]};
}

}  // namespace zsum
