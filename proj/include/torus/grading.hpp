#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <tuple>

#include "torus/algebra.hpp"

namespace torus {

// Exact half-integer stored as twice its value.
struct HalfInt {
    long twice = 0;
    static HalfInt whole(long v) { return HalfInt{2 * v}; }
    static HalfInt half(long t) { return HalfInt{t}; }
    bool is_integer() const { return twice % 2 == 0; }
    HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
    HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
    HalfInt operator-() const { return HalfInt{-twice}; }
    friend bool operator==(HalfInt, HalfInt) = default;
    std::string str() const {
        if (is_integer()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
};

class GradingError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// G' ambient group (1/2 Z) x Z^4.
struct BigGrading {
    HalfInt m;
    std::array<long, 4> s{0, 0, 0, 0};

    static BigGrading identity() { return {}; }
    static BigGrading lambda() { return BigGrading{HalfInt::whole(1), {0, 0, 0, 0}}; }
    static BigGrading lambda_w() { return BigGrading{HalfInt::whole(1), {1, 1, 1, 1}}; }

    BigGrading operator*(const BigGrading& o) const {
        const auto& [a, b, c, d] = s;
        const auto& [a1, b1, c1, d1] = o.s;
        long corr = (a * b1 - a1 * b) + (b * c1 - b1 * c) + (c * d1 - c1 * d) + (d * a1 - d1 * a);
        return BigGrading{HalfInt{m.twice + o.m.twice + corr}, {a + a1, b + b1, c + c1, d + d1}};
    }
    BigGrading inverse() const { return BigGrading{-m, {-s[0], -s[1], -s[2], -s[3]}}; }
    BigGrading pow(long k) const {
        BigGrading base = k >= 0 ? *this : inverse(), r;
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
        return r;
    }
    friend bool operator==(const BigGrading&, const BigGrading&) = default;
    std::string str() const {
        return "(" + m.str() + ";" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
               std::to_string(s[2]) + "," + std::to_string(s[3]) + ")";
    }
};

// Intermediate group G: (m;a,b) with half-integer entries.
struct Grading {
    HalfInt m, a, b;

    static Grading identity() { return {}; }
    static Grading lambda() { return Grading{HalfInt::whole(1), {}, {}}; }

    static Grading make(long m2, long a2, long b2) {
        Grading g{HalfInt{m2}, HalfInt{a2}, HalfInt{b2}};
        if (!g.in_group()) throw GradingError("not an element of G: " + g.str());
        return g;
    }
    // a+b integral and m + ((2a+1)(a+b+1)+1)/2 integral.
    bool in_group() const {
        long s = a.twice + b.twice;
        if (s % 2 != 0) return false;
        long sum = s / 2;
        long t = (a.twice + 1) * (sum + 1) + 1;  // (2a+1)(a+b+1)+1
        return ((m.twice + t) % 2 + 2) % 2 == 0;
    }
    Grading operator*(const Grading& o) const {
        // ad - bc with doubled entries: (a2 d2 - b2 c2)/4, doubled gives /2.
        long corr2 = a.twice * o.b.twice - b.twice * o.a.twice;
        if (corr2 % 2 != 0) throw GradingError("product outside G");
        return Grading{HalfInt{m.twice + o.m.twice + corr2 / 2}, a + o.a, b + o.b};
    }
    Grading inverse() const { return Grading{-m, -a, -b}; }
    Grading pow(long k) const {
        Grading base = k >= 0 ? *this : inverse(), r;
        for (long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
        return r;
    }
    friend bool operator==(const Grading&, const Grading&) = default;
    std::string str() const { return "(" + m.str() + ";" + a.str() + "," + b.str() + ")"; }
};

// Small group G(T^2): integer spin^c part.
struct SmallGrading {
    HalfInt m;
    long a = 0, b = 0;

    static SmallGrading lambda() { return SmallGrading{HalfInt::whole(1), 0, 0}; }
    bool in_group() const { return ((m.twice + a + b) % 2 + 2) % 2 == 0; }
    SmallGrading operator*(const SmallGrading& o) const {
        return SmallGrading{HalfInt{m.twice + o.m.twice + 2 * (a * o.b - b * o.a)}, a + o.a, b + o.b};
    }
    SmallGrading inverse() const { return SmallGrading{-m, -a, -b}; }
    Grading as_grading() const { return Grading{m, HalfInt::whole(a), HalfInt::whole(b)}; }
    static SmallGrading from_grading(const Grading& g) {
        if (!g.a.is_integer() || !g.b.is_integer()) throw GradingError("not in G(T^2): " + g.str());
        return SmallGrading{g.m, g.a.twice / 2, g.b.twice / 2};
    }
    friend bool operator==(const SmallGrading&, const SmallGrading&) = default;
    std::string str() const { return "(" + m.str() + ";" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

// Gamma = G x Z.
struct GammaGrading {
    Grading g;
    long w = 0;

    static GammaGrading lambda_d() { return GammaGrading{Grading::lambda(), 0}; }
    static GammaGrading lambda_w() { return GammaGrading{Grading::identity(), 1}; }
    GammaGrading operator*(const GammaGrading& o) const { return GammaGrading{g * o.g, w + o.w}; }
    GammaGrading inverse() const { return GammaGrading{g.inverse(), -w}; }
    GammaGrading pow(long k) const { return GammaGrading{g.pow(k), w * k}; }
    friend bool operator==(const GammaGrading&, const GammaGrading&) = default;
    std::string str() const { return g.str() + "x" + std::to_string(w); }
};

inline BigGrading gr_prime(const Basic& x) {
    BigGrading out;
    if (x.is_chord()) {
        int n = x.len;
        long m2 = (n % 4 == 0) ? -(n / 2) : -1 - 2 * (n / 4);
        std::array<long, 4> sp{0, 0, 0, 0};
        for (int t = 0; t < n; ++t) sp[(x.pos - 1 + t) % 4] += 1;
        out = BigGrading{HalfInt{m2}, sp};
    }
    static const BigGrading gu{HalfInt::whole(-1), {1, 1, 1, 1}};
    for (int i = 0; i < x.u; ++i) out = out * gu;
    return out;
}

inline Grading project_to_G(const BigGrading& g) {
    const auto& [a, b, c, d] = g.s;
    Grading out{HalfInt{g.m.twice - 2 * d}, HalfInt{a + b - c - d}, HalfInt{-a + b + c - d}};
    if (!out.in_group()) throw GradingError("projection outside G: " + out.str());
    return out;
}

inline Grading gr(const Basic& x) { return project_to_G(gr_prime(x)); }

// psi(iota_0) = e, psi(iota_1) = gr(rho_1).
inline Grading psi(int idem) { return idem == 0 ? Grading::identity() : gr(Basic::chord(1, 1)); }

inline SmallGrading refine(const Grading& g, int li, int ri) {
    long t = g.a.twice + li + ri;  // 2(a + (li+ri)/2)
    if (t % 2 != 0) throw GradingError("refinement parity violated for " + g.str());
    return SmallGrading::from_grading(psi(li) * g * psi(ri).inverse());
}

inline Grading unrefine(const SmallGrading& g, int li, int ri) {
    return psi(li).inverse() * g.as_grading() * psi(ri);
}

inline SmallGrading gr_psi(const Basic& x) { return refine(gr(x), x.left(), x.right()); }

// epsilon(m;a,b) = m + (a-b)/2 + ab mod 2.
inline int epsilon(const SmallGrading& g) {
    long t2 = g.m.twice + (g.a - g.b) + 2 * g.a * g.b;
    if (t2 % 2 != 0) throw GradingError("epsilon of non-element");
    return static_cast<int>(((t2 / 2) % 2 + 2) % 2);
}

inline GammaGrading gamma(const Basic& x) { return GammaGrading{gr(x), x.wingr()}; }

// alpha((j;a,b) x i) = (j+2i; -a,-b) x (-i)
inline GammaGrading alpha(const GammaGrading& g) {
    return GammaGrading{Grading{HalfInt{g.g.m.twice + 4 * g.w}, -g.g.a, -g.g.b}, -g.w};
}

}  // namespace torus
