#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "torus/grading.hpp"
#include "torus/tiling.hpp"

namespace torus {

struct Bounds {
    int max_total_length = 10;
    int max_weight = 2;
    int max_idempotent_insertions = 1;
};

class BoundsError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline std::string to_string(const std::vector<Basic>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + to_string(seq[i]);
    return s;
}

inline int total_length(const std::vector<Basic>& seq) {
    int t = 0;
    for (const auto& b : seq) t += b.length();
    return t;
}

// Sum of mu^u(a_1..a_i, mu^v(a_{i+1}..a_{i+q}), ..., a_n) over u+v = w,
// with sign (-1)^{i + q(n-i-q)} over Z. The callback sees every nonzero
// composite term (outer, inner, position, output, coefficient).
template <class R>
Element<R> ainfty_residual(int w, const std::vector<Basic>& a,
                           const std::function<void(int, int, int, int, const Basic&)>& on_term = {}) {
    Element<R> res;
    const int n = static_cast<int>(a.size());
    int u_total = 0;
    std::vector<Basic> s(a.size());
    for (int i = 0; i < n; ++i) {
        s[i] = a[i].without_u();
        u_total += a[i].u;
    }
    std::vector<Basic> inner, outer;
    for (int v = 0; v <= w; ++v)
        for (int q = 0; q <= n; ++q)
            for (int i = 0; i + q <= n; ++i) {
                inner.assign(s.begin() + i, s.begin() + i + q);
                auto ic = mu_counts(v, inner);
                if (ic.empty()) continue;
                const long sign = sign_pow(i + static_cast<long>(q) * (n - i - q));
                for (const auto& [b, k] : ic) {
                    outer.assign(s.begin(), s.begin() + i);
                    outer.push_back(b.without_u());
                    outer.insert(outer.end(), s.begin() + i + q, s.end());
                    for (const auto& [c, k2] : mu_counts(w - v, outer)) {
                        Basic out = c.times_u(b.u + u_total);
                        if (on_term) on_term(w - v, v, i, q, out);
                        std::int64_t coef = checked_mul(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k2));
                        res.add(out, R::from_int(sign * coef));
                    }
                }
            }
    return res;
}

// Idempotent-composable Reeb sequences with total length <= max_len.
inline void for_each_reeb_sequence(int max_len, const std::function<void(const std::vector<Basic>&)>& f) {
    std::vector<Basic> cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (!cur.empty()) f(cur);
        for (int len = 1; len <= remaining; ++len)
            for (int s = 1; s <= 4; ++s) {
                Basic c = Basic::chord(s, len);
                if (!cur.empty() && cur.back().right() != c.left()) continue;
                cur.push_back(c);
                rec(remaining - len);
                cur.pop_back();
            }
    };
    rec(max_len);
}

// Relation instances: Reeb sequences, optionally with one idempotent at an end.
inline void for_each_instance(const Bounds& b, const std::function<void(const std::vector<Basic>&)>& f) {
    if (b.max_idempotent_insertions > 0)
        for (int i = 0; i < 2; ++i) f({Basic::idempotent(i)});
    for_each_reeb_sequence(b.max_total_length, [&](const std::vector<Basic>& seq) {
        f(seq);
        if (b.max_idempotent_insertions > 0) {
            std::vector<Basic> x;
            x.push_back(Basic::idempotent(seq.front().left()));
            x.insert(x.end(), seq.begin(), seq.end());
            f(x);
            x.assign(seq.begin(), seq.end());
            x.push_back(Basic::idempotent(seq.back().right()));
            f(x);
        }
    });
}

struct RelationReport {
    long instances = 0;
    long failures = 0;
    long mod2_mismatches = 0;
    std::vector<std::string> counterexamples;
    bool ok() const { return failures == 0 && mod2_mismatches == 0; }
};

inline void note_counterexample(std::vector<std::string>& out, const std::string& s) {
    if (out.size() < 20) out.push_back(s);
}

// Residuals over F2 and Z for every instance within the bounds.
inline RelationReport verify_relations(const Bounds& b, bool over_f2 = true, bool over_z = true) {
    RelationReport rep;
    for_each_instance(b, [&](const std::vector<Basic>& seq) {
        for (int w = 0; w <= b.max_weight; ++w) {
            ++rep.instances;
            Element<F2> r2;
            Element<Z> rz;
            if (over_f2) r2 = ainfty_residual<F2>(w, seq);
            if (over_z) rz = ainfty_residual<Z>(w, seq);
            if (!r2.is_zero() || !rz.is_zero()) {
                ++rep.failures;
                note_counterexample(rep.counterexamples, "w=" + std::to_string(w) + " inputs=" + to_string(seq) +
                                                             " residual_z=" + to_string(rz) + " residual_f2=" + to_string(r2));
            }
            if (over_f2 && over_z) {
                Element<F2> red;
                for (const auto& [x, c] : rz.terms()) red.add(x, F2::from_int(c));
                if (!(red == r2)) ++rep.mod2_mismatches;
            }
        }
    });
    return rep;
}

// gr'(b) = lambda_w^w lambda^{n-2} prod gr'(a_i), also after projection and refinement.
inline bool graded_term(int w, const std::vector<Basic>& in, const Basic& out, std::string* why = nullptr) {
    const long n = static_cast<long>(in.size());
    BigGrading rhs = BigGrading::lambda_w().pow(w) * BigGrading::lambda().pow(n - 2);
    for (const auto& a : in) rhs = rhs * gr_prime(a);
    if (!(gr_prime(out) == rhs)) {
        if (why) *why = "G' mismatch " + gr_prime(out).str() + " vs " + rhs.str();
        return false;
    }
    Grading g = Grading::lambda().pow(n - 2);
    for (const auto& a : in) g = g * gr(a);
    if (!(gr(out) == g)) {
        if (why) *why = "G mismatch";
        return false;
    }
    if (!in.empty()) {
        SmallGrading s{HalfInt::whole(n - 2), 0, 0};
        for (const auto& a : in) s = s * gr_psi(a);
        if (!(gr_psi(out) == s) || out.left() != in.front().left() || out.right() != in.back().right()) {
            if (why) *why = "refined mismatch";
            return false;
        }
    }
    return true;
}

struct OperationReport {
    long operations = 0;
    long nonzero_terms = 0;
    long grading_violations = 0;
    long odd_arity_violations = 0;
    long u_power_violations = 0;
    long length_violations = 0;
    long factor_violations = 0;
    long diet_violations = 0;
    long unitality_violations = 0;
    long mod2_mismatches = 0;
    long composite_terms = 0;
    long composite_u_violations = 0;
    std::vector<std::string> counterexamples;
    bool graded_ok() const { return grading_violations == 0; }
    bool structure_ok() const {
        return odd_arity_violations == 0 && u_power_violations == 0 && length_violations == 0 && factor_violations == 0 &&
               diet_violations == 0 && unitality_violations == 0 && composite_u_violations == 0;
    }
};

// b is a term of mu^{w-1}_{n+2}(..., rho, c, rho', ...) for some split a_i = rho rho'
// and some length-four chord c.
inline bool diet_holds(int w, const std::vector<Basic>& in, const Basic& b) {
    for (std::size_t i = 0; i < in.size(); ++i)
        for (int k = 1; k < in[i].len; ++k) {
            Basic x = Basic::chord(in[i].start(), k), y = Basic::chord(in[i].start() + k, in[i].len - k);
            for (const auto& c : length_four_chords()) {
                std::vector<Basic> s(in.begin(), in.begin() + i);
                s.push_back(x);
                s.push_back(c);
                s.push_back(y);
                s.insert(s.end(), in.begin() + i + 1, in.end());
                for (const auto& [t, cnt] : mu_counts(w - 1, s))
                    if (t == b) return true;
            }
        }
    return false;
}

// Structural lemmas on every operation within the bounds, and the U-power law
// on every two-corolla composite.
inline OperationReport check_operations(const Bounds& b, bool composites = true) {
    OperationReport rep;
    auto bad = [&](long& counter, const std::string& what, int w, const std::vector<Basic>& seq) {
        ++counter;
        note_counterexample(rep.counterexamples, what + " w=" + std::to_string(w) + " inputs=" + to_string(seq));
    };
    for_each_instance(b, [&](const std::vector<Basic>& seq) {
        const int n = static_cast<int>(seq.size());
        bool has_idem = false;
        for (const auto& a : seq) has_idem |= a.is_idempotent();
        for (int w = 0; w <= b.max_weight; ++w) {
            ++rep.operations;
            std::vector<Element<Z>> zin;
            std::vector<Element<F2>> fin;
            for (const auto& a : seq) {
                zin.emplace_back(a);
                fin.emplace_back(a);
            }
            auto outz = mu<Z>(w, zin);
            auto outf = mu<F2>(w, fin);
            Element<F2> red;
            for (const auto& [x, c] : outz.terms()) red.add(x, F2::from_int(c));
            if (!(red == outf)) bad(rep.mod2_mismatches, "mod2", w, seq);
            if (outz.is_zero()) continue;
            if (n % 2 != 0) bad(rep.odd_arity_violations, "odd arity", w, seq);
            if (has_idem && !(n == 2 && w == 0)) bad(rep.unitality_violations, "unitality", w, seq);
            if (has_idem) continue;
            for (const auto& [out, c] : outz.terms()) {
                ++rep.nonzero_terms;
                std::string why;
                if (!graded_term(w, seq, out, &why)) bad(rep.grading_violations, "grading " + why, w, seq);
                if (!(n == 2 && w == 0) && out.u != w + n / 2 - 1) bad(rep.u_power_violations, "U power", w, seq);
                if (out.length() != 4 * w + total_length(seq)) bad(rep.length_violations, "length", w, seq);
                if (n + 2 * w > 4) {
                    int f = 0;
                    for (const auto& a : seq) f += a.len >= 2;
                    if (f < 2) bad(rep.factor_violations, "factor", w, seq);
                }
                if (w > 0 && !diet_holds(w, seq, out)) bad(rep.diet_violations, "diet", w, seq);
            }
        }
        if (!composites || has_idem) return;
        // Two-corolla composites: exponent (n + 2w - 3)/2.
        for (int w = 0; w <= b.max_weight; ++w)
            ainfty_residual<Z>(w, seq, [&](int, int, int, int, const Basic& out) {
                ++rep.composite_terms;
                if (2 * out.u != n + 2 * w - 3) bad(rep.composite_u_violations, "composite U power", w, seq);
            });
    });
    return rep;
}

// mu_2(mu_0^1, a) = mu_2(a, mu_0^1) for every basic a of length <= max_len.
template <class R>
bool check_central_curvature(int max_len = 12, std::vector<std::string>* failures = nullptr) {
    Element<R> c;
    for (const auto& x : length_four_chords()) c.add(x);
    bool ok = true;
    for (const auto& a : all_basics(max_len)) {
        Element<R> x(a);
        if (!(multiply(c, x) == multiply(x, c))) {
            ok = false;
            if (failures) failures->push_back(to_string(a));
        }
    }
    return ok;
}

}  // namespace torus
