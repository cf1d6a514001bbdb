#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "torus/grading.hpp"
#include "torus/linalg.hpp"
#include "torus/tiling.hpp"

namespace torus {

enum class Model { assoc, weighted };

// a[b] with a in A[U] and b in A, or a[h b] in the weighted model.
struct HGen {
    Basic a;
    bool h = false;
    Basic b;

    auto key() const { return std::tuple(a.key(), h, b.key()); }
    friend bool operator==(const HGen& x, const HGen& y) = default;
    friend bool operator<(const HGen& x, const HGen& y) { return x.key() < y.key(); }
};

inline std::string to_string(const HGen& g) {
    return to_string(g.a) + "[" + (g.h ? std::string("h*") : std::string()) + to_string(g.b) + "]";
}

class HochschildError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool complementary(const HGen& g) {
    return g.b.u == 0 && g.a.left() != g.b.right() && g.a.right() != g.b.left();
}

// "a[b]", "a[h*b]"; an empty bracket stands for the complementary idempotent.
inline HGen parse_hgen(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    auto open = s.find('[');
    if (open == std::string::npos || s.back() != ']' || s.find('[', open + 1) != std::string::npos)
        throw ParseError("malformed generator: '" + s + "'");
    HGen g;
    std::string head = s.substr(0, open);
    // A bare U power on the left carries the complementary idempotent.
    const bool bare_u = !head.empty() && head[0] == 'U' && head.find('*') == std::string::npos;
    if (!bare_u) g.a = parse_basic(head);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    if (inner == "h" || inner.rfind("h*", 0) == 0) {
        g.h = true;
        inner = inner.size() > 1 ? inner.substr(2) : std::string();
    }
    if (bare_u) {
        if (inner.empty()) throw ParseError("malformed generator: '" + s + "'");
        g.b = parse_basic(inner);
        if (g.b.left() != g.b.right()) throw ParseError("bare U needs a loop: '" + s + "'");
        g.a = parse_basic(head + "*i" + std::to_string(1 - g.b.left()));
    } else if (inner.empty()) {
        if (g.a.left() != g.a.right()) throw ParseError("empty bracket needs a loop: '" + s + "'");
        g.b = Basic::idempotent(1 - g.a.left());
    } else {
        g.b = parse_basic(inner);
    }
    if (!complementary(g)) throw ParseError("generator is not complementary: '" + s + "'");
    return g;
}

// Z/2 degree of b: length plus one for h.
inline int parity(const HGen& g) { return (g.b.len + (g.h ? 1 : 0)) % 2; }

inline GammaGrading gamma_h() { return GammaGrading{Grading{HalfInt::whole(1), {}, {}}, -1}; }

inline GammaGrading gamma_prime(bool h, const Basic& b) {
    GammaGrading g = alpha(gamma(b));
    return h ? gamma_h() * g : g;
}

// lambda gamma(a) gamma'(b).
inline GammaGrading total_grading(const HGen& g) {
    return GammaGrading::lambda_d() * gamma(g.a) * gamma_prime(g.h, g.b);
}

struct Bigrading {
    int first = 0;   // n (assoc) or W (weighted)
    int second = 0;  // k or l
    friend bool operator==(const Bigrading&, const Bigrading&) = default;
    friend bool operator<(const Bigrading& x, const Bigrading& y) {
        return std::tie(x.first, x.second) < std::tie(y.first, y.second);
    }
};

// Bigrading, or nullopt if the total grading is not of the required form.
inline std::optional<Bigrading> bigrading(Model model, const HGen& g) {
    GammaGrading t = total_grading(g);
    if (t.g.a.twice != 0 || t.g.b.twice != 0 || !t.g.m.is_integer()) return std::nullopt;
    if (model == Model::assoc) {
        if (g.h || t.w != 0) return std::nullopt;
        return Bigrading{g.b.len, static_cast<int>(t.g.m.twice / 2)};
    }
    return Bigrading{static_cast<int>(t.w), static_cast<int>(t.g.m.twice / 2)};
}

template <class R>
using HChain = std::map<HGen, typename R::coeff>;

template <class R>
void chain_add(HChain<R>& c, const HGen& g, typename R::coeff v) {
    if (R::is_zero(v)) return;
    auto it = c.find(g);
    if (it == c.end()) c.emplace(g, v);
    else {
        it->second = R::add(it->second, v);
        if (R::is_zero(it->second)) c.erase(it);
    }
}

// Signed sum of generators, e.g. "r1234[r4123] - r4123[r1234]"; "0" is zero.
template <class R>
HChain<R> parse_hchain(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    HChain<R> out;
    if (s == "0") return out;
    if (s.empty()) throw ParseError("empty chain");
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
        else if (i != 0) throw ParseError("malformed chain");
        std::size_t j = i;
        int depth = 0;
        while (j < s.size() && (depth > 0 || (s[j] != '+' && s[j] != '-'))) {
            depth += s[j] == '[' ? 1 : s[j] == ']' ? -1 : 0;
            ++j;
        }
        std::string term = s.substr(i, j - i);
        std::int64_t coef = 1;
        auto star = term.find('*');
        if (star != std::string::npos && star > 0 && star < term.find('[') &&
            std::all_of(term.begin(), term.begin() + static_cast<long>(star), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            coef = detail::parse_uint(term.substr(0, star), "coefficient");
            term = term.substr(star + 1);
        }
        chain_add<R>(out, parse_hgen(term), R::from_int(sign * coef));
        i = j;
    }
    return out;
}

namespace hh_detail {

inline Basic rho(int i) { return Basic::chord(i, 1); }
inline Basic rho(int i, int len) { return Basic::chord(i, len); }

// x * (h^e b) = (-1)^{e|x|} h^e (x b)
template <class R>
std::optional<std::pair<Basic, typename R::coeff>> left_mul(const Basic& x, bool h, const Basic& b) {
    auto p = multiply(x, b);
    if (!p) return std::nullopt;
    return std::pair{*p, R::from_int(h ? sign_pow(x.length()) : 1)};
}

inline std::optional<Basic> right_mul(const Basic& b, const Basic& x) { return multiply(b, x); }

// mu_4^0 with U factors pulled out of the inputs.
inline std::vector<std::pair<Basic, std::uint64_t>> mu4(std::vector<Basic> in) {
    int u = 0;
    for (auto& x : in) {
        u += x.u;
        x = x.without_u();
    }
    auto r = mu_counts(0, in);
    for (auto& [b, k] : r) b = b.times_u(u);
    return r;
}

}  // namespace hh_detail

template <class R>
HChain<R> assoc_differential(const HGen& g) {
    using namespace hh_detail;
    if (g.h || !complementary(g)) throw HochschildError("not an associative small-model generator: " + to_string(g));
    HChain<R> out;
    const auto s1 = R::from_int(sign_pow(g.b.len));
    for (int i = 1; i <= 4; ++i) {
        auto x = multiply(rho(i), g.a), y = multiply(g.b, rho(i));
        if (x && y) chain_add<R>(out, HGen{*x, false, *y}, s1);
        x = multiply(g.a, rho(i));
        y = multiply(rho(i), g.b);
        if (x && y) chain_add<R>(out, HGen{*x, false, *y}, R::one());
    }
    return out;
}

template <class R>
HChain<R> weighted_differential(const HGen& g) {
    using namespace hh_detail;
    if (!complementary(g)) throw HochschildError("not a weighted small-model generator: " + to_string(g));
    HChain<R> out;
    const auto sb = R::from_int(sign_pow(parity(g)));
    // a[d'b]: d'(h b) = c b with c the sum of the length-four chords.
    if (g.h)
        for (const auto& c : length_four_chords())
            if (auto p = multiply(c, g.b)) chain_add<R>(out, HGen{g.a, false, *p}, R::one());
    // Hooks.
    for (int i = 1; i <= 4; ++i) {
        auto x = multiply(rho(i), g.a);
        auto y = right_mul(g.b, rho(i));
        if (x && y) chain_add<R>(out, HGen{*x, g.h, *y}, sb);
        x = multiply(g.a, rho(i));
        auto z = left_mul<R>(rho(i), g.h, g.b);
        if (x && z) chain_add<R>(out, HGen{*x, g.h, z->first}, z->second);
    }
    // Higher corrections through mu_4.
    auto emit = [&](const std::vector<Basic>& in, const std::optional<Basic>& lf, const std::optional<Basic>& rt,
                    typename R::coeff s) {
        auto terms = mu4(in);
        if (terms.empty()) return;
        Basic b = g.b;
        typename R::coeff sign = s;
        if (lf) {
            auto z = left_mul<R>(*lf, g.h, b);
            if (!z) return;
            b = z->first;
            sign = R::mul(sign, z->second);
        }
        if (rt) {
            auto z = right_mul(b, *rt);
            if (!z) return;
            b = *z;
        }
        for (const auto& [o, k] : terms)
            chain_add<R>(out, HGen{o, g.h, b}, R::mul(sign, R::from_int(static_cast<std::int64_t>(k))));
    };
    for (int i = 1; i <= 4; ++i) {
        emit({rho(i + 3), rho(i + 2), rho(i + 1), g.a}, std::nullopt, rho(i + 1, 3), sb);
        emit({rho(i + 2), rho(i + 1), g.a, rho(i - 1)}, rho(i - 1), rho(i + 1, 2), R::one());
        emit({rho(i + 1), g.a, rho(i - 1), rho(i - 2)}, rho(i - 2, 2), rho(i + 1), sb);
        emit({g.a, rho(i - 1), rho(i - 2), rho(i - 3)}, rho(i - 3, 3), std::nullopt, R::one());
    }
    return out;
}

template <class R>
HChain<R> differential(Model m, const HGen& g) {
    return m == Model::assoc ? assoc_differential<R>(g) : weighted_differential<R>(g);
}

struct SliceOptions {
    int cutoff = 16;       // bound on |a| and |b|
    int max_winding = 2;   // bound on the winding of b (weighted model)
};

namespace hh_detail {

// All x = a a' with |a'| = 4s and a' a basic of A[U].
inline std::vector<Basic> extend_a(const Basic& a, int s) {
    std::vector<Basic> out;
    for (int t = 0; t <= s; ++t) {
        int m = 4 * (s - t);
        if (m == 0) {
            out.push_back(a.times_u(t));
        } else if (a.is_chord()) {
            out.push_back(Basic::chord(a.start(), a.len + m, a.u + t));
        } else {
            for (const auto& c : length_four_chords(a.pos)) out.push_back(Basic::chord(c.start(), m, a.u + t));
        }
    }
    return out;
}

// All y = b b' with |b'| = 4s and b' in A.
inline std::vector<Basic> extend_b(const Basic& b, int s) {
    if (s == 0) return {b};
    if (b.is_chord()) return {Basic::chord(b.start(), b.len + 4 * s)};
    std::vector<Basic> out;
    for (const auto& c : length_four_chords(b.pos)) out.push_back(Basic::chord(c.start(), 4 * s));
    return out;
}

inline HGen shift(const HGen& g, int k) {
    auto sh = [k](const Basic& x) {
        return x.is_idempotent() ? Basic::idempotent(x.pos + k, x.u) : Basic::chord(x.pos + k, x.len, x.u);
    };
    return HGen{sh(g.a), g.h, sh(g.b)};
}

inline std::vector<HGen> seeds() {
    return {HGen{Basic::chord(1, 1), false, Basic::chord(1, 1)},
            HGen{Basic::chord(1, 3), false, Basic::chord(1, 3)},
            HGen{Basic::idempotent(0), false, Basic::idempotent(1)}};
}

}  // namespace hh_detail

inline bool within(Model m, const HGen& g, const SliceOptions& o) {
    if (g.a.length() > o.cutoff || g.b.length() > o.cutoff) return false;
    if (m == Model::weighted && g.b.wingr() > o.max_winding) return false;
    return true;
}

// Brute force: every complementary pair within the cutoff with the bigrading.
inline std::vector<HGen> slice_brute_force(Model m, Bigrading bg, const SliceOptions& o) {
    std::vector<HGen> out;
    auto as = all_basics(o.cutoff, true);
    auto bs = all_basics(o.cutoff, false);
    for (const auto& a : as)
        for (const auto& b : bs)
            for (int h = 0; h < (m == Model::weighted ? 2 : 1); ++h) {
                HGen g{a, h == 1, b};
                if (m == Model::assoc && b.len != bg.first) continue;
                if (!complementary(g) || !within(m, g, o)) continue;
                auto gr = bigrading(m, g);
                if (gr && *gr == bg) out.push_back(g);
            }
    std::sort(out.begin(), out.end());
    return out;
}

struct Classification {
    std::vector<HGen> within_cutoff;
    bool cutoff_adequate = true;
};

// Seeds, index shifts, products with length-4s elements and optional h.
inline Classification slice_classification(Model m, Bigrading bg, const SliceOptions& o) {
    using namespace hh_detail;
    std::set<HGen> found;
    Classification c;
    // Grading shifts: a by 4s1 gives (W,l) += (1,-2) per unit, b by 4s2 gives
    // (-1,0), h gives (-1,+1); the associative bigrading needs s1 = s2.
    for (const auto& seed0 : seeds())
        for (int k = 0; k < 4; ++k) {
            HGen seed = shift(seed0, k);
            auto g0 = bigrading(m == Model::assoc ? Model::assoc : Model::weighted, seed);
            if (!g0) throw std::logic_error("seed is not homogeneous");
            for (int h = 0; h < (m == Model::weighted ? 2 : 1); ++h) {
                int s1, s2;
                if (m == Model::assoc) {
                    int dn = bg.first - seed.b.len;
                    if (dn < 0 || dn % 4) continue;
                    s1 = s2 = dn / 4;
                    if (g0->second - 2 * s1 != bg.second) continue;
                } else {
                    int dl = g0->second + h - bg.second;
                    if (dl < 0 || dl % 2) continue;
                    s1 = dl / 2;
                    s2 = g0->first + s1 - h - bg.first;
                    if (s2 < 0) continue;
                }
                for (const auto& a : extend_a(seed.a, s1))
                    for (const auto& b : extend_b(seed.b, s2)) {
                        HGen g{a, h == 1, b};
                        auto gr = bigrading(m, g);
                        if (!gr || !(*gr == bg) || !complementary(g))
                            throw std::logic_error("classification produced a generator outside the slice");
                        if (within(m, g, o)) found.insert(g);
                        else c.cutoff_adequate = false;
                    }
            }
        }
    c.within_cutoff.assign(found.begin(), found.end());
    return c;
}

struct Slice {
    Model model = Model::assoc;
    Bigrading grading;
    std::vector<HGen> basis;
    bool listings_agree = true;
    bool cutoff_adequate = true;
};

class SliceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Slice enumerate_slice(Model m, Bigrading bg, const SliceOptions& o) {
    Slice s;
    s.model = m;
    s.grading = bg;
    s.basis = slice_brute_force(m, bg, o);
    auto c = slice_classification(m, bg, o);
    s.cutoff_adequate = c.cutoff_adequate;
    s.listings_agree = (c.within_cutoff == s.basis);
    if (!s.listings_agree) throw SliceError("brute-force and classification listings disagree");
    return s;
}

inline Bigrading differential_target(Model m, Bigrading g) {
    return m == Model::assoc ? Bigrading{g.first + 1, g.second - 1} : Bigrading{g.first, g.second - 1};
}
inline Bigrading differential_source(Model m, Bigrading g) {
    return m == Model::assoc ? Bigrading{g.first - 1, g.second + 1} : Bigrading{g.first, g.second + 1};
}

// Matrix of the differential from one slice to the next; a term outside the
// target basis is an error.
template <class R>
Matrix differential_matrix(const Slice& from, const Slice& to) {
    Matrix M(static_cast<int>(to.basis.size()), static_cast<int>(from.basis.size()));
    std::map<HGen, int> index;
    for (std::size_t i = 0; i < to.basis.size(); ++i) index[to.basis[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < from.basis.size(); ++j)
        for (const auto& [g, c] : differential<R>(from.model, from.basis[j])) {
            auto it = index.find(g);
            if (it == index.end()) throw SliceError("differential leaves the target slice: " + to_string(g));
            M.a[it->second][j] = R::to_int(c);
        }
    return M;
}

struct HHResult {
    Slice prev, mid, next;
    Matrix in, out;
    HomologyData data;
    Homology homology;
};

template <class R>
HHResult hochschild_homology(Model m, Bigrading bg, const SliceOptions& o) {
    Slice mid = enumerate_slice(m, bg, o);
    Slice prev = enumerate_slice(m, differential_source(m, bg), o);
    Slice next = enumerate_slice(m, differential_target(m, bg), o);
    Matrix in = differential_matrix<R>(prev, mid);
    Matrix out = differential_matrix<R>(mid, next);
    Homology h(in, out, static_cast<int>(mid.basis.size()), !R::signed_ring);
    HomologyData d = h.data();
    return HHResult{prev, mid, next, in, out, d, h};
}

template <class R>
Vec to_vector(const Slice& s, const HChain<R>& c) {
    Vec v(s.basis.size(), 0);
    for (const auto& [g, x] : c) {
        auto it = std::lower_bound(s.basis.begin(), s.basis.end(), g);
        if (it == s.basis.end() || !(*it == g)) throw SliceError("chain term outside slice: " + to_string(g));
        v[it - s.basis.begin()] = R::to_int(x);
    }
    return v;
}

inline std::string chain_string(const Slice& s, const Vec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        std::int64_t c = v[i];
        if (c < 0) {
            out += out.empty() ? "-" : " - ";
            c = -c;
        } else if (!out.empty()) {
            out += " + ";
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += to_string(s.basis[i]);
    }
    return out.empty() ? "0" : out;
}

// Generators used for exhaustive square-zero checks.
inline std::vector<HGen> all_generators(Model m, const SliceOptions& o) {
    std::vector<HGen> out;
    for (const auto& a : all_basics(o.cutoff, true))
        for (const auto& b : all_basics(o.cutoff, false))
            for (int h = 0; h < (m == Model::weighted ? 2 : 1); ++h) {
                HGen g{a, h == 1, b};
                if (complementary(g) && within(m, g, o)) out.push_back(g);
            }
    return out;
}

template <class R>
HChain<R> apply_differential(Model m, const HChain<R>& c) {
    HChain<R> out;
    for (const auto& [g, x] : c)
        for (const auto& [g2, y] : differential<R>(m, g)) chain_add<R>(out, g2, R::mul(x, y));
    return out;
}

}  // namespace torus
