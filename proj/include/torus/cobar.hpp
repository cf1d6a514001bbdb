#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "torus/ainfty.hpp"
#include "torus/algebra.hpp"
#include "torus/grading.hpp"

namespace torus {

// a_1^* (x) ... (x) a_n^* = (a_n (x) ... (x) a_1)^*; the empty word carries an idempotent.
struct CobarWord {
    std::vector<Basic> letters;
    int idem = 0;  // only meaningful when letters is empty

    static CobarWord empty(int i) { return CobarWord{{}, i & 1}; }
    std::size_t size() const { return letters.size(); }
    auto key() const {
        std::vector<std::tuple<int, int>> k;
        for (const auto& b : letters) k.emplace_back(b.pos, b.len);
        return std::tuple(letters.size(), k, letters.empty() ? idem : 0);
    }
    friend bool operator==(const CobarWord& x, const CobarWord& y) { return x.key() == y.key(); }
    friend bool operator<(const CobarWord& x, const CobarWord& y) { return x.key() < y.key(); }
    int winding() const {
        int w = 0;
        for (const auto& b : letters) w += b.wingr();
        return w;
    }
};

inline std::string to_string(const CobarWord& w) {
    if (w.letters.empty()) return "[" + to_string(Basic::idempotent(w.idem)) + "]";
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) s += (i ? "(x)" : "") + to_string(w.letters[i]) + "*";
    return s;
}

// Adjacent letters a_i, a_{i+1} need right(a_{i+1}) = left(a_i).
inline bool composable(const CobarWord& w) {
    for (const auto& b : w.letters)
        if (!b.is_chord() || b.u != 0) return false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (w.letters[i + 1].right() != w.letters[i].left()) return false;
    return true;
}

template <class R>
using CobarChain = std::map<CobarWord, typename R::coeff>;

template <class R>
void cobar_add(CobarChain<R>& c, const CobarWord& w, typename R::coeff v) {
    if (R::is_zero(v)) return;
    auto it = c.find(w);
    if (it == c.end()) c.emplace(w, v);
    else {
        it->second = R::add(it->second, v);
        if (R::is_zero(it->second)) c.erase(it);
    }
}

// delta(a_1^*...a_n^*) = sum_i (-1)^{i-1} a_1^*...mu_2^*(a_i^*)...a_n^*,
// with mu_2^*(a^*) = sum_{a = xy} y^* (x) x^*.
template <class R>
CobarChain<R> cobar_differential(const CobarWord& w) {
    CobarChain<R> out;
    const auto& L = w.letters;
    for (std::size_t i = 0; i < L.size(); ++i)
        for (int k = 1; k < L[i].len; ++k) {
            Basic x = Basic::chord(L[i].start(), k), y = Basic::chord(L[i].start() + k, L[i].len - k);
            CobarWord v;
            v.letters.assign(L.begin(), L.begin() + i);
            v.letters.push_back(y);
            v.letters.push_back(x);
            v.letters.insert(v.letters.end(), L.begin() + i + 1, L.end());
            cobar_add<R>(out, v, R::from_int(sign_pow(static_cast<long>(i))));
        }
    return out;
}

// phi kills letters of length > 1 and multiplies the [rho_i]; phi(iota_i) = iota_{1-i}.
template <class R>
Element<R> koszul_phi(const CobarWord& w) {
    if (w.letters.empty()) return Element<R>(Basic::idempotent(1 - w.idem));
    Basic acc = w.letters.front();
    if (acc.len != 1) return {};
    for (std::size_t i = 1; i < w.letters.size(); ++i) {
        if (w.letters[i].len != 1) return {};
        auto p = multiply(acc, w.letters[i]);
        if (!p) return {};
        acc = *p;
    }
    return Element<R>(acc);
}

// j(rho_i...rho_l) = rho_i^* (x) ... (x) rho_l^*; j(iota_i) = empty word at iota_{1-i}.
inline CobarWord koszul_j(const Basic& b) {
    if (b.u != 0) throw std::invalid_argument("koszul_j: U is not in the associative algebra");
    if (b.is_idempotent()) return CobarWord::empty(1 - b.pos);
    CobarWord w;
    for (int t = 0; t < b.len; ++t) w.letters.push_back(Basic::chord(b.start() + t, 1));
    return w;
}

// Absorb the last letter of the leading run rho_i^*...rho_l^* into the next letter.
template <class R>
CobarChain<R> homotopy_H(const CobarWord& w) {
    CobarChain<R> out;
    const auto& L = w.letters;
    std::size_t k = 0;
    while (k < L.size() && L[k].len == 1 && (k == 0 || L[k].start() == mod4(L[k - 1].start() + 1))) ++k;
    if (k == 0 || k == L.size()) return out;
    auto p = multiply(L[k], L[k - 1]);
    if (!p) return out;
    CobarWord v;
    v.letters.assign(L.begin(), L.begin() + (k - 1));
    v.letters.push_back(*p);
    v.letters.insert(v.letters.end(), L.begin() + k + 1, L.end());
    cobar_add<R>(out, v, R::from_int(sign_pow(static_cast<long>(k) - 1)));
    return out;
}

template <class R, class F>
CobarChain<R> apply_linear(const CobarChain<R>& c, F&& f) {
    CobarChain<R> out;
    for (const auto& [w, x] : c)
        for (const auto& [v, y] : f(w)) cobar_add<R>(out, v, R::mul(x, y));
    return out;
}

// lambda^{-n} gamma(a_1)^{-1} ... gamma(a_n)^{-1}
inline GammaGrading cobar_grading(const CobarWord& w) {
    GammaGrading g = GammaGrading::lambda_d().pow(-static_cast<long>(w.letters.size()));
    for (const auto& b : w.letters) g = g * gamma(b).inverse();
    return g;
}

// Every composable word with at most max_letters letters and winding <= max_winding.
inline void for_each_cobar_word(int max_letters, int max_winding, const std::function<void(const CobarWord&)>& f) {
    f(CobarWord::empty(0));
    f(CobarWord::empty(1));
    std::vector<Basic> letters;
    for (int len = 1;; ++len) {
        bool any = false;
        for (int s = 1; s <= 4; ++s) {
            Basic b = Basic::chord(s, len);
            if (b.wingr() <= max_winding) {
                letters.push_back(b);
                any = true;
            }
        }
        if (!any) break;
    }
    CobarWord cur;
    std::function<void(int)> rec = [&](int wind) {
        if (!cur.letters.empty()) f(cur);
        if (static_cast<int>(cur.letters.size()) == max_letters) return;
        for (const auto& b : letters) {
            if (wind + b.wingr() > max_winding) continue;
            if (!cur.letters.empty() && b.right() != cur.letters.back().left()) continue;
            cur.letters.push_back(b);
            rec(wind + b.wingr());
            cur.letters.pop_back();
        }
    };
    rec(0);
}

struct CobarReport {
    long words = 0;
    long square_failures = 0;
    long chain_map_failures = 0;
    long grading_failures = 0;
    long homotopy_failures = 0;
    long phij_failures = 0;
    std::vector<std::string> counterexamples;
    bool ok() const {
        return square_failures == 0 && chain_map_failures == 0 && grading_failures == 0 && homotopy_failures == 0 &&
               phij_failures == 0 && words > 0;
    }
};

// delta H + H delta = Id - j phi (equal to Id + j phi over F2), delta^2 = 0,
// phi delta = 0 and the grading identity on every word within the bounds.
template <class R>
CobarReport verify_homotopy(int max_letters, int max_winding) {
    CobarReport rep;
    auto d = [](const CobarWord& w) { return cobar_differential<R>(w); };
    auto H = [](const CobarWord& w) { return homotopy_H<R>(w); };
    for_each_cobar_word(max_letters, max_winding, [&](const CobarWord& w) {
        ++rep.words;
        CobarChain<R> unit;
        cobar_add<R>(unit, w, R::one());
        auto dw = apply_linear<R>(unit, d);
        if (!apply_linear<R>(dw, d).empty()) {
            ++rep.square_failures;
            note_counterexample(rep.counterexamples, "delta^2 " + to_string(w));
        }
        for (const auto& [v, c] : dw)
            if (!koszul_phi<R>(v).is_zero()) {
                ++rep.chain_map_failures;
                note_counterexample(rep.counterexamples, "phi delta " + to_string(w));
                break;
            }
        auto phi = koszul_phi<R>(w);
        if (!phi.is_zero()) {
            const Basic b = phi.terms()[0].first;
            if (!(cobar_grading(w) == alpha(gamma(b))) && !w.letters.empty()) {
                ++rep.grading_failures;
                note_counterexample(rep.counterexamples, "grading " + to_string(w));
            }
            if (!(koszul_phi<R>(koszul_j(b)) == Element<R>(b))) ++rep.phij_failures;
        }
        auto lhs = apply_linear<R>(apply_linear<R>(unit, H), d);
        for (const auto& [v, c] : apply_linear<R>(dw, H)) cobar_add<R>(lhs, v, c);
        CobarChain<R> rhs = unit;
        for (const auto& [b, c] : phi.terms()) cobar_add<R>(rhs, koszul_j(b), R::neg(c));
        if (lhs != rhs) {
            ++rep.homotopy_failures;
            note_counterexample(rep.counterexamples, "homotopy " + to_string(w));
        }
    });
    return rep;
}

}  // namespace torus
