#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torus/ainfty.hpp"
#include "torus/algebra.hpp"
#include "torus/tiling.hpp"

namespace torus {

// A U-linear k-bimodule map on tuples of basics, defined for tuples of total
// length <= cutoff. Evaluation outside the domain returns nullopt.
template <class R>
struct Cochain {
    using Value = std::optional<Element<R>>;
    std::optional<int> arity;  // nullopt: all arities
    int cutoff = 0;
    std::function<Value(const std::vector<Basic>&)> fn;

    Value operator()(const std::vector<Basic>& in) const {
        if (total_length(in) > cutoff) return std::nullopt;
        if (arity && static_cast<int>(in.size()) != *arity) return Element<R>();
        int u = 0;
        std::vector<Basic> s(in.size());
        for (std::size_t i = 0; i < in.size(); ++i) {
            u += in[i].u;
            s[i] = in[i].without_u();
        }
        auto v = fn(s);
        if (!v) return v;
        return u ? v->times_u(u) : *v;
    }
    bool has_arity(int n) const { return !arity || *arity == n; }
};

// mu_n^w as a cochain; all arities when n is nullopt.
template <class R>
Cochain<R> mu_cochain(int w, std::optional<int> n, int cutoff) {
    Cochain<R> c;
    c.arity = n;
    c.cutoff = cutoff;
    c.fn = [w](const std::vector<Basic>& in) -> typename Cochain<R>::Value {
        Element<R> out;
        for (const auto& [b, k] : mu_counts(w, in)) out.add(b, R::from_int(static_cast<std::int64_t>(k)));
        return out;
    };
    return c;
}

template <class R>
Cochain<R> zero_cochain(std::optional<int> n, int cutoff) {
    Cochain<R> c;
    c.arity = n;
    c.cutoff = cutoff;
    c.fn = [](const std::vector<Basic>&) -> typename Cochain<R>::Value { return Element<R>(); };
    return c;
}

// Arity-zero cochain with value the unit.
template <class R>
Cochain<R> unit_cochain(int cutoff) {
    Cochain<R> c;
    c.arity = 0;
    c.cutoff = cutoff;
    c.fn = [](const std::vector<Basic>&) -> typename Cochain<R>::Value { return Element<R>::unit(); };
    return c;
}

template <class R>
Cochain<R> identity_cochain(int cutoff) {
    Cochain<R> c;
    c.arity = 1;
    c.cutoff = cutoff;
    c.fn = [](const std::vector<Basic>& in) -> typename Cochain<R>::Value { return Element<R>(in[0]); };
    return c;
}

template <class R>
Cochain<R> linear_combination(std::vector<std::pair<typename R::coeff, Cochain<R>>> terms) {
    Cochain<R> c;
    c.cutoff = 1 << 30;
    std::optional<int> ar;
    bool mixed = false;
    for (const auto& [k, f] : terms) {
        c.cutoff = std::min(c.cutoff, f.cutoff);
        if (!f.arity) mixed = true;
        else if (ar && *ar != *f.arity) mixed = true;
        else ar = f.arity;
    }
    c.arity = (mixed || terms.empty()) ? std::nullopt : ar;
    auto shared = std::make_shared<std::vector<std::pair<typename R::coeff, Cochain<R>>>>(std::move(terms));
    c.fn = [shared](const std::vector<Basic>& in) -> typename Cochain<R>::Value {
        Element<R> out;
        for (const auto& [k, f] : *shared) {
            auto v = f(in);
            if (!v) return std::nullopt;
            out += v->scaled(k);
        }
        return out;
    };
    return c;
}

// (f * g)(a) = sum (-1)^{r + s t} f(a_1..a_r, g(a_{r+1}..a_{r+s}), ...).
template <class R>
Cochain<R> star(const Cochain<R>& f, const Cochain<R>& g) {
    Cochain<R> c;
    if (f.arity && g.arity) c.arity = *f.arity + *g.arity - 1;
    c.cutoff = std::min(f.cutoff, g.cutoff);
    auto F = std::make_shared<Cochain<R>>(f);
    auto G = std::make_shared<Cochain<R>>(g);
    c.fn = [F, G](const std::vector<Basic>& a) -> typename Cochain<R>::Value {
        Element<R> out;
        const int n = static_cast<int>(a.size());
        for (int s = 0; s <= n; ++s) {
            if (!G->has_arity(s) || !F->has_arity(n - s + 1)) continue;
            for (int r = 0; r + s <= n; ++r) {
                std::vector<Basic> inner(a.begin() + r, a.begin() + r + s);
                auto gv = (*G)(inner);
                if (!gv) return std::nullopt;
                const auto sign = R::from_int(sign_pow(r + static_cast<long>(s) * (n - r - s)));
                for (const auto& [b, k] : gv->terms()) {
                    std::vector<Basic> outer(a.begin(), a.begin() + r);
                    outer.push_back(b);
                    outer.insert(outer.end(), a.begin() + r + s, a.end());
                    auto fv = (*F)(outer);
                    if (!fv) return std::nullopt;
                    out += fv->scaled(R::mul(sign, k));
                }
            }
        }
        return out;
    };
    return c;
}

// Cup product (f u g)(a) = sum_p f(a_1..a_p) g(a_{p+1}..a_n).
template <class R>
Cochain<R> cup(const Cochain<R>& f, const Cochain<R>& g) {
    Cochain<R> c;
    if (f.arity && g.arity) c.arity = *f.arity + *g.arity;
    c.cutoff = std::min(f.cutoff, g.cutoff);
    auto F = std::make_shared<Cochain<R>>(f);
    auto G = std::make_shared<Cochain<R>>(g);
    c.fn = [F, G](const std::vector<Basic>& a) -> typename Cochain<R>::Value {
        Element<R> out;
        const int n = static_cast<int>(a.size());
        for (int p = 0; p <= n; ++p) {
            if (!F->has_arity(p) || !G->has_arity(n - p)) continue;
            auto x = (*F)(std::vector<Basic>(a.begin(), a.begin() + p));
            auto y = (*G)(std::vector<Basic>(a.begin() + p, a.end()));
            if (!x || !y) return std::nullopt;
            out += multiply(*x, *y);
        }
        return out;
    };
    return c;
}

// Hochschild differential with respect to a base operation m (mu_2 or mu^0).
template <class R>
Cochain<R> cochain_delta(const Cochain<R>& f, const Cochain<R>& m) {
    return linear_combination<R>({{R::one(), star(m, f)}, {R::one(), star(f, m)}});
}

template <class R>
Cochain<R> cochain_delta(const Cochain<R>& f) {
    return cochain_delta(f, mu_cochain<R>(0, 2, f.cutoff + 8));
}

// O_n = -sum_{i+j=n+2, i,j>=3} mu_i * mu_j, so that delta mu_n = O_n.
template <class R>
Cochain<R> obstruction(int n, int cutoff) {
    std::vector<std::pair<typename R::coeff, Cochain<R>>> terms;
    for (int i = 3; i <= n - 1; ++i) {
        int j = n + 2 - i;
        if (j < 3) continue;
        terms.push_back({R::from_int(-1), star(mu_cochain<R>(0, i, cutoff), mu_cochain<R>(0, j, cutoff))});
    }
    if (terms.empty()) return zero_cochain<R>(n + 1, cutoff);
    return linear_combination<R>(std::move(terms));
}

// O^W = -sum_{u+v=W, u,v>=1} mu^u * mu^v over all arities.
template <class R>
Cochain<R> weighted_obstruction(int W, int cutoff) {
    std::vector<std::pair<typename R::coeff, Cochain<R>>> terms;
    for (int u = 1; u < W; ++u)
        terms.push_back({R::from_int(-1), star(mu_cochain<R>(u, std::nullopt, cutoff), mu_cochain<R>(W - u, std::nullopt, cutoff))});
    if (terms.empty()) return zero_cochain<R>(std::nullopt, cutoff);
    return linear_combination<R>(std::move(terms));
}

struct IdentityReport {
    long tuples = 0;
    long checked = 0;
    long undefined = 0;
    long failures = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return failures == 0 && checked > 0; }
};

// Compare two cochains on every composable Reeb tuple of the given arities
// and total length <= max_len; tuples where either side is undefined are skipped.
template <class R>
IdentityReport compare_cochains(const Cochain<R>& x, const Cochain<R>& y, int min_arity, int max_arity, int max_len) {
    IdentityReport rep;
    for_each_reeb_sequence(max_len, [&](const std::vector<Basic>& seq) {
        int n = static_cast<int>(seq.size());
        if (n < min_arity || n > max_arity) return;
        ++rep.tuples;
        auto a = x(seq), b = y(seq);
        if (!a || !b) {
            ++rep.undefined;
            return;
        }
        ++rep.checked;
        if (!(*a == *b)) {
            ++rep.failures;
            note_counterexample(rep.counterexamples, to_string(seq) + ": " + to_string(*a) + " vs " + to_string(*b));
        }
    });
    return rep;
}

// Deterministic pseudo-random normalized cochain respecting idempotents.
template <class R>
Cochain<R> random_cochain(int arity, std::uint64_t seed, int cutoff, int max_out_len = 8) {
    Cochain<R> c;
    c.arity = arity;
    c.cutoff = cutoff;
    c.fn = [seed, max_out_len](const std::vector<Basic>& in) -> typename Cochain<R>::Value {
        Element<R> out;
        std::uint64_t hsh = seed * 0x9E3779B97F4A7C15ull + 0x1234567ull;
        auto mix = [&hsh](std::uint64_t v) {
            hsh ^= v + 0x9E3779B97F4A7C15ull + (hsh << 6) + (hsh >> 2);
            hsh *= 0xBF58476D1CE4E5B9ull;
            hsh ^= hsh >> 31;
        };
        int li = 0, ri = 0;
        for (const auto& b : in) {
            if (b.is_idempotent()) return out;
            mix(static_cast<std::uint64_t>(b.pos * 64 + b.len));
        }
        for (std::size_t i = 0; i + 1 < in.size(); ++i)
            if (in[i].right() != in[i + 1].left()) return out;
        if (in.empty()) {
            li = ri = static_cast<int>(hsh & 1);
        } else {
            li = in.front().left();
            ri = in.back().right();
        }
        for (const auto& x : all_basics(max_out_len, false)) {
            if (x.left() != li || x.right() != ri) continue;
            mix(static_cast<std::uint64_t>(x.pos * 64 + x.len + 7));
            if ((hsh >> 17) % 5 == 0) out.add(x, R::from_int(static_cast<std::int64_t>((hsh >> 40) % 3) + 1));
        }
        return out;
    };
    return c;
}

}  // namespace torus
