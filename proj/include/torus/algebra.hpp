#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torus/ring.hpp"

namespace torus {

// Labels 1..4, cyclic.
inline int mod4(int x) { return ((x - 1) % 4 + 4) % 4 + 1; }

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// U^u times an idempotent (len == 0, pos = idempotent index) or a chord
// rho_{pos, pos+1, ..., pos+len-1} (len >= 1, pos in 1..4).
struct Basic {
    int u = 0;
    int len = 0;
    int pos = 0;

    static Basic idempotent(int i, int u = 0) { return Basic{u, 0, i & 1}; }
    static Basic chord(int start, int len, int u = 0) {
        if (len < 1) throw std::invalid_argument("chord length must be positive");
        return Basic{u, len, mod4(start)};
    }

    bool is_idempotent() const { return len == 0; }
    bool is_chord() const { return len > 0; }
    int start() const { return pos; }
    int end() const { return mod4(pos + len - 1); }
    // Idempotent on the left: a chord starting at s sits in iota_{(s+1) mod 2}.
    int left() const { return is_idempotent() ? pos : (pos + 1) % 2; }
    int right() const { return is_idempotent() ? pos : end() % 2; }
    int length() const { return len + 4 * u; }
    int wingr() const { return is_idempotent() ? u : u + (pos - 1 + len) / 4; }
    std::array<int, 4> support() const {
        std::array<int, 4> s{u, u, u, u};
        if (is_chord())
            for (int t = 0; t < len; ++t) s[(pos - 1 + t) % 4] += 1;
        return s;
    }
    Basic without_u() const { return Basic{0, len, pos}; }
    Basic times_u(int k) const { return Basic{u + k, len, pos}; }

    // Canonical order: U power, idempotents before chords, start, length.
    auto key() const { return std::tuple(u, len > 0 ? 1 : 0, pos, len); }
    friend bool operator==(const Basic& x, const Basic& y) = default;
    friend bool operator<(const Basic& x, const Basic& y) { return x.key() < y.key(); }
};

// Product of basics; nullopt when zero.
inline std::optional<Basic> multiply(const Basic& x, const Basic& y) {
    if (x.right() != y.left()) return std::nullopt;
    int u = x.u + y.u;
    if (x.is_idempotent()) return y.times_u(x.u);
    if (y.is_idempotent()) return x.times_u(y.u);
    if (mod4(x.end() + 1) != y.start()) return std::nullopt;
    return Basic{u, x.len + y.len, x.pos};
}

// All length-4 chords in the given idempotent, or all four if idem < 0.
inline std::vector<Basic> length_four_chords(int idem = -1) {
    std::vector<Basic> out;
    for (int s = 1; s <= 4; ++s) {
        Basic c = Basic::chord(s, 4);
        if (idem < 0 || c.left() == idem) out.push_back(c);
    }
    return out;
}

inline std::string to_string(const Basic& b) {
    std::string s;
    if (b.u == 1) s = "U*";
    else if (b.u > 1) s = "U^" + std::to_string(b.u) + "*";
    if (b.is_idempotent()) return s + "i" + std::to_string(b.pos);
    s += "r";
    for (int t = 0; t < b.len; ++t) s += char('0' + mod4(b.pos + t));
    return s;
}

template <class R>
class Element {
public:
    using coeff = typename R::coeff;
    using Term = std::pair<Basic, coeff>;

    Element() = default;
    explicit Element(const Basic& b, coeff c = R::one()) { add(b, c); }

    static Element unit() {
        Element e;
        e.add(Basic::idempotent(0));
        e.add(Basic::idempotent(1));
        return e;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    coeff coefficient(const Basic& b) const {
        auto it = find(b);
        return (it != terms_.end() && it->first == b) ? it->second : R::zero();
    }

    void add(const Basic& b, coeff c = R::one()) {
        if (R::is_zero(c)) return;
        auto it = find(b);
        if (it != terms_.end() && it->first == b) {
            it->second = R::add(it->second, c);
            if (R::is_zero(it->second)) terms_.erase(it);
        } else {
            terms_.insert(it, Term{b, c});
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [b, c] : o.terms_) add(b, R::neg(c));
        return *this;
    }
    friend Element operator+(Element x, const Element& y) { return x += y; }
    friend Element operator-(Element x, const Element& y) { return x -= y; }
    Element scaled(coeff c) const {
        Element e;
        for (const auto& [b, d] : terms_) e.add(b, R::mul(c, d));
        return e;
    }
    Element times_u(int k) const {
        Element e;
        for (const auto& [b, c] : terms_) e.add(b.times_u(k), c);
        return e;
    }
    friend bool operator==(const Element& x, const Element& y) { return x.terms_ == y.terms_; }

private:
    typename std::vector<Term>::iterator find(const Basic& b) {
        return std::lower_bound(terms_.begin(), terms_.end(), b,
                                [](const Term& t, const Basic& k) { return t.first < k; });
    }
    typename std::vector<Term>::const_iterator find(const Basic& b) const {
        return std::lower_bound(terms_.begin(), terms_.end(), b,
                                [](const Term& t, const Basic& k) { return t.first < k; });
    }
    std::vector<Term> terms_;
};

template <class R>
Element<R> multiply(const Element<R>& x, const Element<R>& y) {
    Element<R> out;
    for (const auto& [a, c] : x.terms())
        for (const auto& [b, d] : y.terms())
            if (auto p = multiply(a, b)) out.add(*p, R::mul(c, d));
    return out;
}

template <class R>
std::string to_string(const Element<R>& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : e.terms()) {
        std::int64_t v = R::to_int(c);
        if (R::signed_ring && v < 0) {
            s += first ? "-" : " - ";
            v = -v;
        } else if (!first) {
            s += " + ";
        }
        if (v != 1) s += std::to_string(v) + "*";
        s += to_string(b);
        first = false;
    }
    return s;
}

namespace detail {

inline std::string strip_spaces(std::string_view in) {
    std::string s;
    for (char ch : in)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    return s;
}

inline std::int64_t parse_uint(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("malformed " + what + ": '" + s + "'");
    if (s.size() > 15) throw ParseError(what + " too large: '" + s + "'");
    return std::stoll(s);
}

inline Basic parse_body(const std::string& s) {
    if (s.size() == 2 && s[0] == 'i' && (s[1] == '0' || s[1] == '1')) return Basic::idempotent(s[1] - '0');
    if (s.size() >= 2 && s[0] == 'r') {
        std::vector<int> d;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '1' || s[i] > '4') throw ParseError("malformed chord: '" + s + "'");
            d.push_back(s[i] - '0');
        }
        for (std::size_t i = 1; i < d.size(); ++i)
            if (d[i] != mod4(d[i - 1] + 1)) throw ParseError("chord indices not consecutive mod 4: '" + s + "'");
        return Basic::chord(d[0], static_cast<int>(d.size()));
    }
    throw ParseError("malformed token: '" + s + "'");
}

// monomial := [coef '*'] ['U' ['^' k] '*'] body
inline std::pair<Basic, std::int64_t> parse_monomial(const std::string& m) {
    if (m.empty()) throw ParseError("empty term");
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (true) {
        std::size_t j = m.find('*', i);
        parts.push_back(m.substr(i, j == std::string::npos ? std::string::npos : j - i));
        if (j == std::string::npos) break;
        i = j + 1;
    }
    std::int64_t coef = 1;
    int u = 0;
    std::size_t k = 0;
    if (k < parts.size() && !parts[k].empty() && std::isdigit(static_cast<unsigned char>(parts[k][0]))) {
        coef = parse_uint(parts[k], "coefficient");
        ++k;
    }
    if (k < parts.size() && !parts[k].empty() && parts[k][0] == 'U') {
        const std::string& p = parts[k];
        if (p == "U") u = 1;
        else if (p.size() > 2 && p[1] == '^') {
            if (p[2] == '-') throw ParseError("negative U exponent: '" + p + "'");
            u = static_cast<int>(parse_uint(p.substr(2), "U exponent"));
        } else throw ParseError("malformed U power: '" + p + "'");
        ++k;
    }
    if (k + 1 != parts.size()) throw ParseError("malformed term: '" + m + "'");
    return {parse_body(parts[k]).times_u(u), coef};
}

}  // namespace detail

// Grammar: terms separated by '+' or '-', each [n*][U^k*]body; "0" is zero.
template <class R>
Element<R> parse_element(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty element");
    Element<R> out;
    if (s == "0") return out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw ParseError("malformed element");
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') {
            if (s[j] == '^' && j + 1 < s.size() && s[j + 1] == '-')
                throw ParseError("negative U exponent");
            ++j;
        }
        auto [b, c] = detail::parse_monomial(s.substr(i, j - i));
        out.add(b, R::from_int(sign * c));
        i = j;
    }
    return out;
}

inline Basic parse_basic(std::string_view text) {
    auto e = parse_element<Z>(text);
    if (e.size() != 1 || e.terms()[0].second != 1) throw ParseError("expected a single basic element: '" + std::string(text) + "'");
    return e.terms()[0].first;
}

// Comma-separated list of basics.
inline std::vector<Basic> parse_basic_list(std::string_view text) {
    std::vector<Basic> out;
    std::string s = detail::strip_spaces(text);
    if (s.empty()) return out;
    std::size_t i = 0;
    while (true) {
        std::size_t j = s.find(',', i);
        out.push_back(parse_basic(s.substr(i, j == std::string::npos ? std::string::npos : j - i)));
        if (j == std::string::npos) break;
        i = j + 1;
    }
    return out;
}

// Every basic of A[U] with total length <= max_len.
inline std::vector<Basic> all_basics(int max_len, bool with_u = true) {
    std::vector<Basic> out;
    for (int u = 0; 4 * u <= max_len; ++u) {
        if (!with_u && u > 0) break;
        for (int i = 0; i < 2; ++i) out.push_back(Basic::idempotent(i, u));
        for (int len = 1; len + 4 * u <= max_len; ++len)
            for (int s = 1; s <= 4; ++s) out.push_back(Basic::chord(s, len, u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace torus
