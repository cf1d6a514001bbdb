#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "torus/ainfty.hpp"
#include "torus/algebra.hpp"
#include "torus/cobar.hpp"
#include "torus/cochain.hpp"
#include "torus/grading.hpp"
#include "torus/hochschild.hpp"
#include "torus/tiling.hpp"

namespace torus::golden {

struct Outcome {
    bool pass = false;
    std::string expected;
    std::string got;
};

struct Case {
    std::string id;
    std::string area;
    std::function<Outcome()> run;
};

inline Outcome same(const std::string& expected, const std::string& got) { return {expected == got, expected, got}; }

inline std::vector<Basic> seq(const std::string& s) { return parse_basic_list(s); }

template <class R>
std::string mu_string(int w, const std::string& inputs) {
    std::vector<Element<R>> in;
    for (const auto& b : seq(inputs)) in.emplace_back(b);
    return to_string(mu<R>(w, in));
}

template <class R>
std::string chain_to_string(const HChain<R>& c) {
    std::string out;
    for (const auto& [g, x] : c) {
        std::int64_t v = R::to_int(x);
        if (R::signed_ring && v < 0) {
            out += out.empty() ? "-" : " - ";
            v = -v;
        } else if (!out.empty()) {
            out += " + ";
        }
        if (v != 1) out += std::to_string(v) + "*";
        out += to_string(g);
    }
    return out.empty() ? "0" : out;
}

template <class R>
std::string cobar_to_string(const CobarChain<R>& c) {
    std::string out;
    for (const auto& [w, x] : c) {
        std::int64_t v = R::to_int(x);
        if (R::signed_ring && v < 0) {
            out += out.empty() ? "-" : " - ";
            v = -v;
        } else if (!out.empty()) {
            out += " + ";
        }
        if (v != 1) out += std::to_string(v) + "*";
        out += to_string(w);
    }
    return out.empty() ? "0" : out;
}

template <class R>
Outcome differential_case(Model m, const std::string& gen, const std::string& expected) {
    auto got = differential<R>(m, parse_hgen(gen));
    auto want = parse_hchain<R>(expected);
    return {got == want, chain_to_string<R>(want), chain_to_string<R>(got)};
}

inline Outcome slice_case(Model m, Bigrading bg, const std::vector<std::string>& expected, bool exact) {
    Slice s = enumerate_slice(m, bg, SliceOptions{});
    std::vector<HGen> want;
    for (const auto& e : expected) want.push_back(parse_hgen(e));
    std::sort(want.begin(), want.end());
    bool ok = s.cutoff_adequate;
    if (exact) ok = ok && want == s.basis;
    else
        for (const auto& g : want) ok = ok && std::binary_search(s.basis.begin(), s.basis.end(), g);
    std::string got, exp;
    for (const auto& g : s.basis) got += (got.empty() ? "" : ", ") + to_string(g);
    for (const auto& g : want) exp += (exp.empty() ? "" : ", ") + to_string(g);
    if (!exact) exp = "superset of {" + exp + "}";
    return {ok, exp, "{" + got + "} (" + std::to_string(s.basis.size()) + " generators)"};
}

// Integer determinant of a small square matrix by cofactor expansion.
inline std::int64_t small_det(const std::vector<Vec>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    std::int64_t d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Vec> minor;
        for (std::size_t i = 1; i < n; ++i) {
            Vec row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        d += (j % 2 ? -1 : 1) * m[0][j] * small_det(minor);
    }
    return d;
}

// Free rank, no torsion, and the given cycles form a basis of homology.
template <class R>
Outcome homology_case(Model m, Bigrading bg, int rank, const std::vector<std::string>& reps) {
    auto r = hochschild_homology<R>(m, bg, SliceOptions{});
    std::string got = "rank " + std::to_string(r.data.rank) + ", torsion " + std::to_string(r.data.torsion.size());
    std::string exp = "rank " + std::to_string(rank) + ", torsion 0";
    bool ok = r.data.rank == rank && r.data.torsion.empty() && r.data.boundary_composite_zero && r.mid.cutoff_adequate &&
              r.next.cutoff_adequate && r.prev.cutoff_adequate;
    std::vector<Vec> classes;
    for (const auto& s : reps) {
        Vec v = to_vector<R>(r.mid, parse_hchain<R>(s));
        if (!r.homology.is_cycle(v)) {
            ok = false;
            got += ", not a cycle: " + s;
            continue;
        }
        Vec c = r.homology.class_of(v);
        c.resize(static_cast<std::size_t>(r.data.rank));
        classes.push_back(c);
    }
    if (!reps.empty()) {
        exp += ", representatives span";
        std::int64_t d = classes.size() == static_cast<std::size_t>(r.data.rank) ? small_det(classes) : 0;
        bool spans = R::signed_ring ? (d == 1 || d == -1) : (d % 2 != 0);
        got += spans ? ", representatives span" : ", representatives do not span";
        ok = ok && spans;
    }
    for (const auto& v : r.data.representatives) got += "; class " + chain_string(r.mid, v);
    return {ok, exp, got};
}

inline CobarWord word(const std::string& s) {
    CobarWord w;
    w.letters = seq(s);
    if (!composable(w)) throw ParseError("letters are not composable: " + s);
    return w;
}

inline std::string grading_row(const Basic& b) {
    return "gr'=" + gr_prime(b).str() + " gr=" + gr(b).str() + " gr_psi=" + gr_psi(b).str() +
           " wingr=" + std::to_string(b.wingr()) + " eps=" + std::to_string(epsilon(gr_psi(b)));
}

inline Outcome table_case(const std::vector<std::pair<std::string, std::string>>& rows,
                          const std::function<std::string(const Basic&)>& f) {
    Outcome o{true, "", ""};
    for (const auto& [name, want] : rows) {
        std::string got = f(parse_basic(name));
        o.pass = o.pass && got == want;
        o.expected += name + "=" + want + " ";
        o.got += name + "=" + got + " ";
    }
    return o;
}

// epsilon(gh) = epsilon(g) + epsilon(h) on random pairs of G(T^2).
inline Outcome epsilon_random_pairs(std::uint64_t seed, int pairs = 100) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-6, 6);
    auto draw = [&] {
        SmallGrading g{HalfInt{d(rng)}, d(rng), d(rng)};
        if (!g.in_group()) g.m.twice += 1;
        return g;
    };
    int bad = 0;
    for (int i = 0; i < pairs; ++i) {
        SmallGrading g = draw(), h = draw();
        if (epsilon(g * h) != (epsilon(g) + epsilon(h)) % 2) ++bad;
    }
    return same("0 failures", std::to_string(bad) + " failures");
}

inline std::vector<Case> cases() {
    std::vector<Case> c;
    auto add = [&](std::string id, std::string area, std::function<Outcome()> f) {
        c.push_back(Case{std::move(id), std::move(area), std::move(f)});
    };
    // algebra-core
    add("left_idempotent_r1", "algebra", [] { return same("i0", to_string(Basic::idempotent(parse_basic("r1").left()))); });
    add("right_idempotent_r1", "algebra", [] { return same("i1", to_string(Basic::idempotent(parse_basic("r1").right()))); });
    add("product_r1_r2", "algebra", [] { return same("r12", to_string(multiply(parse_element<Z>("r1"), parse_element<Z>("r2")))); });
    add("product_r2_r1", "algebra", [] { return same("0", to_string(multiply(parse_element<Z>("r2"), parse_element<Z>("r1")))); });
    add("support_r1", "algebra", [] {
        auto s = parse_basic("r1").support();
        return same("1,0,0,0", std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "," + std::to_string(s[3]));
    });
    add("length_r123", "algebra", [] { return same("3", std::to_string(parse_basic("r123").length())); });
    add("length_i1", "algebra", [] { return same("0", std::to_string(parse_basic("i1").length())); });
    add("wingr_r4", "algebra", [] { return same("1", std::to_string(parse_basic("r4").wingr())); });
    add("wingr_r123", "algebra", [] { return same("0", std::to_string(parse_basic("r123").wingr())); });

    // gradings
    add("big_product", "gradings", [] {
        BigGrading x{HalfInt{-1}, {1, 1, 1, 0}}, y{HalfInt{-1}, {0, 0, 0, 1}};
        return same("(-1;1,1,1,1)", (x * y).str());
    });
    add("gr_prime_r1234", "gradings", [] { return same("(-1;1,1,1,1)", gr_prime(parse_basic("r1234")).str()); });
    add("gr_prime_r12341", "gradings", [] { return same("(-3/2;2,1,1,1)", gr_prime(parse_basic("r12341")).str()); });
    add("gr_prime_i0", "gradings", [] { return same("(0;0,0,0,0)", gr_prime(parse_basic("i0")).str()); });
    add("gr_prime_U", "gradings", [] { return same("(-1;1,1,1,1)", gr_prime(parse_basic("U*i0")).str()); });
    add("gr_r4", "gradings", [] { return same("(-3/2;-1/2,-1/2)", project_to_G(gr_prime(parse_basic("r4"))).str()); });
    add("gr_lambda_w", "gradings", [] { return same("(0;0,0)", project_to_G(BigGrading::lambda_w()).str()); });
    add("gr_U", "gradings", [] { return same("(-2;0,0)", project_to_G(gr_prime(parse_basic("U*i1"))).str()); });
    add("gr_psi_r2", "gradings", [] { return same("(-1/2;1,0)", gr_psi(parse_basic("r2")).str()); });
    add("gr_psi_r4", "gradings", [] { return same("(-5/2;0,-1)", gr_psi(parse_basic("r4")).str()); });
    add("gr_psi_r1", "gradings", [] { return same("(0;0,0)", gr_psi(parse_basic("r1")).str()); });
    add("epsilon_lambda", "gradings", [] { return same("1", std::to_string(epsilon(SmallGrading::lambda()))); });
    add("epsilon_r3", "gradings", [] {
        return same("(0;-1,1) -> 0", gr_psi(parse_basic("r3")).str() + " -> " + std::to_string(epsilon(gr_psi(parse_basic("r3")))));
    });
    add("gamma_r4", "gradings", [] { return same("(-3/2;-1/2,-1/2)x1", gamma(parse_basic("r4")).str()); });
    add("gamma_U", "gradings", [] { return same("(-2;0,0)x1", gamma(parse_basic("U*i0")).str()); });
    add("table_gr_prime", "gradings", [] {
        return table_case({{"r1", "(-1/2;1,0,0,0)"}, {"r2", "(-1/2;0,1,0,0)"}, {"r3", "(-1/2;0,0,1,0)"},
                           {"r4", "(-1/2;0,0,0,1)"}, {"r12", "(-1/2;1,1,0,0)"}, {"r23", "(-1/2;0,1,1,0)"},
                           {"r34", "(-1/2;0,0,1,1)"}, {"r41", "(-1/2;1,0,0,1)"}, {"r123", "(-1/2;1,1,1,0)"},
                           {"r234", "(-1/2;0,1,1,1)"}, {"r1234", "(-1;1,1,1,1)"}, {"r2341", "(-1;1,1,1,1)"},
                           {"r12341", "(-3/2;2,1,1,1)"}},
                          [](const Basic& b) { return gr_prime(b).str(); });
    });
    add("table_gr", "gradings", [] {
        return table_case({{"r1", "(-1/2;1/2,-1/2)"}, {"r2", "(-1/2;1/2,1/2)"}, {"r3", "(-1/2;-1/2,1/2)"},
                           {"r4", "(-3/2;-1/2,-1/2)"}, {"r12", "(-1/2;1,0)"}, {"r23", "(-1/2;0,1)"},
                           {"r34", "(-3/2;-1,0)"}, {"r41", "(-3/2;0,-1)"}, {"r123", "(-1/2;1/2,1/2)"},
                           {"r234", "(-3/2;-1/2,1/2)"}, {"r1234", "(-2;0,0)"}, {"r2341", "(-2;0,0)"},
                           {"r12341", "(-5/2;1/2,-1/2)"}},
                          [](const Basic& b) { return gr(b).str(); });
    });
    add("table_gr_psi", "gradings", [] {
        return table_case({{"r1", "(0;0,0)"}, {"r2", "(-1/2;1,0)"}, {"r3", "(0;-1,1)"}, {"r4", "(-5/2;0,-1)"},
                           {"r12", "(-1/2;1,0)"}, {"r23", "(1/2;0,1)"}, {"r34", "(-3/2;-1,0)"},
                           {"r41", "(-5/2;0,-1)"}, {"r123", "(1/2;0,1)"}, {"r234", "(-2;0,0)"},
                           {"r1234", "(-2;0,0)"}, {"r2341", "(-2;0,0)"}, {"r12341", "(-2;0,0)"},
                           {"r23412", "(-5/2;1,0)"}, {"U*i0", "(-2;0,0)"}},
                          [](const Basic& b) { return gr_psi(b).str(); });
    });
    add("table_epsilon_generators", "gradings", [] {
        return table_case({{"r1", "0"}, {"r2", "0"}, {"r3", "0"}, {"r4", "0"}, {"U*i0", "0"}},
                          [](const Basic& b) { return std::to_string(epsilon(gr_psi(b))); });
    });

    // tiling
    add("single_vertex_pattern", "tiling", [] {
        TilingPattern p;
        p.vertices = 1;
        p.half_edges = {-1, -1, -1, -1};
        p.seed_label = 4;
        auto v = validate_pattern(p);
        return same("valid (4,0,1)", std::string(v.valid ? "valid" : "invalid: " + v.reason) + " (" + std::to_string(v.n) +
                                         "," + std::to_string(v.w) + "," + std::to_string(v.d) + ")");
    });
    auto roundtrip = [&](const std::string& id, const std::string& s, int w) {
        add(id, "tiling", [s, w] {
            auto e = enumerate_patterns(seq(s), w);
            std::string got;
            for (const auto& p : e.patterns) got += (got.empty() ? "" : " | ") + to_string(chord_sequence(p));
            return same(s, got);
        });
    };
    roundtrip("chord_sequence_square", "r4,r3,r2,r1", 0);
    roundtrip("chord_sequence_extended_square", "r4,r3,r2,r123", 0);
    roundtrip("chord_sequence_weight_one", "r41,r4,r34,r3,r23,r2,r12,r1", 1);
    auto output = [&](const std::string& id, const std::string& s, int w, const std::string& want) {
        add(id, "tiling", [s, w, want] {
            auto e = enumerate_patterns(seq(s), w);
            std::string got;
            for (const auto& p : e.patterns) got += (got.empty() ? "" : " | ") + to_string(output_element(p));
            return same(want, got);
        });
    };
    output("output_left_extended", "r34,r3,r2,r1", 0, "U*r3");
    output("output_curvature_input", "r1234,r3,r2,r1", 0, "U*r123");
    add("output_weight_one", "tiling", [] {
        auto e = enumerate_patterns(seq("r41,r4,r34,r3,r23,r2,r12,r1"), 1);
        bool ok = e.patterns.size() == 1;
        std::string got = std::to_string(e.patterns.size()) + " pattern(s)";
        for (const auto& p : e.patterns) {
            Basic b = output_element(p);
            ok = ok && b.is_idempotent() && b.u == 4;
            got += " " + to_string(b);
        }
        return Outcome{ok, "1 pattern(s) U^4*idempotent", got};
    });
    add("enumerate_square", "tiling", [] {
        return same("1", std::to_string(enumerate_patterns(seq("r4,r3,r2,r1"), 0).patterns.size()));
    });
    add("enumerate_multipliable_pair", "tiling", [] {
        std::string got;
        for (int w = 0; w <= 3; ++w) got += std::to_string(enumerate_patterns(seq("r1,r2"), w).patterns.size());
        return same("0000", got);
    });
    add("enumerate_weight_one_area", "tiling", [] {
        auto e = enumerate_patterns(seq("r41,r4,r34,r3,r23,r2,r12,r1"), 1);
        std::string got;
        for (const auto& p : e.patterns) {
            auto v = validate_pattern(p);
            got += "w=" + std::to_string(v.w) + " d=" + std::to_string(v.d);
        }
        return same("w=1 d=4", got);
    });

    // operations
    add("mu4_r4_r3_r2_r1", "operations", [] { return same("U*i1", mu_string<Z>(0, "r4,r3,r2,r1")); });
    add("mu4_r3_r2_r1_r4", "operations", [] { return same("U*i0", mu_string<Z>(0, "r3,r2,r1,r4")); });
    add("mu6_example", "operations", [] { return same("U^2*r34", mu_string<Z>(0, "r3412,r1,r4,r34,r3,r2")); });
    add("mu4_curvature_input", "operations", [] { return same("U*r123", mu_string<Z>(0, "r1234,r3,r2,r1")); });
    add("mu10_example", "operations", [] { return same("U^4*i0", mu_string<Z>(0, "r1234,r3,r2,r12,r1,r41,r4,r34,r3,r2")); });
    add("mu8_weight_one", "operations", [] { return same("U^4*i1", mu_string<Z>(1, "r41,r4,r34,r3,r23,r2,r12,r1")); });
    add("odd_arity_vanishes", "operations", [] {
        std::string got;
        for (const char* s : {"r1", "r4,r3,r2", "r4,r3,r2,r1,r4", "r1234,r3,r2,r12,r1,r41,r4,r34,r3"})
            for (int w = 0; w <= 2; ++w) got += mu_string<Z>(w, s) == "0" ? "0" : "x";
        return same(std::string(12, '0'), got);
    });

    // relations
    add("relation_weight_one_r3_r2_r1", "relations", [] {
        int terms = 0;
        auto r = ainfty_residual<Z>(1, seq("r3,r2,r1"), [&](int, int, int, int, const Basic&) { ++terms; });
        return same("residual 0 from 2 terms", "residual " + to_string(r) + " from " + std::to_string(terms) + " terms");
    });
    add("relation_unit_i1_r4_r3_r2_r1", "relations", [] { return same("0", to_string(ainfty_residual<Z>(0, seq("i1,r4,r3,r2,r1")))); });
    add("grading_mu4_both_sides", "relations", [] {
        BigGrading rhs = BigGrading::lambda().pow(2);
        for (const auto& a : seq("r4,r3,r2,r1")) rhs = rhs * gr_prime(a);
        return same("(-1;1,1,1,1) (-1;1,1,1,1)", gr_prime(parse_basic(mu_string<Z>(0, "r4,r3,r2,r1"))).str() + " " + rhs.str());
    });
    add("grading_mu2_product", "relations", [] {
        return same(gr_prime(parse_basic("r12")).str(), (gr_prime(parse_basic("r1")) * gr_prime(parse_basic("r2"))).str());
    });
    add("u_power_mu4", "relations", [] {
        std::string got;
        for (const char* s : {"r4,r3,r2,r1", "r34,r3,r2,r1", "r1234,r3,r2,r1"}) got += std::to_string(parse_basic(mu_string<Z>(0, s)).u);
        return same("111", got);
    });
    add("u_power_mu8_weight_one", "relations", [] {
        return same("4", std::to_string(parse_basic(mu_string<Z>(1, "r41,r4,r34,r3,r23,r2,r12,r1")).u));
    });

    // hochschild
    add("assoc_differential_f2", "hochschild", [] {
        return differential_case<F2>(Model::assoc, "r123[r123]", "r1234[r4123] + r4123[r1234]");
    });
    add("assoc_differential_cycle", "hochschild", [] { return differential_case<F2>(Model::assoc, "r12341[r12341]", "0"); });
    add("assoc_differential_z", "hochschild", [] {
        return differential_case<Z>(Model::assoc, "r123[r123]", "r1234[r4123] - r4123[r1234]");
    });
    add("assoc_differential_u_z", "hochschild", [] {
        return differential_case<Z>(Model::assoc, "U[r1234]", "U*r1[r12341] + U*r4[r41234]");
    });
    add("weighted_differential_loop", "hochschild", [] {
        return differential_case<F2>(Model::weighted, "r1234[]", "r12341[r1] + r41234[r4] + U*r123[r123] + U*r234[r234]");
    });
    add("weighted_differential_idempotent", "hochschild", [] {
        return differential_case<F2>(Model::weighted, "i0[i1]", "r1[r1] + r2[r2] + r3[r3] + r4[r4]");
    });
    add("weighted_differential_z", "hochschild", [] {
        return differential_case<Z>(Model::weighted, "r1[r1]", "-U[r1234] + U[r2341] - U[r3412] + U[r4123]");
    });
    add("assoc_slice_4_-1", "hochschild", [] {
        return slice_case(Model::assoc, {4, -1}, {"U[r1234]", "r1234[r4123]"}, false);
    });
    add("weighted_slice_1_-1", "hochschild", [] {
        return slice_case(Model::weighted, {1, -1}, {"r1234[]", "r2341[]", "r3412[]", "r4123[]", "U*i0[]", "U*i1[]"}, true);
    });
    add("weighted_slice_0_1", "hochschild", [] { return slice_case(Model::weighted, {0, 1}, {"i0[i1]", "i1[i0]"}, true); });
    add("assoc_hh_4_-1_f2", "hochschild", [] {
        return homology_case<F2>(Model::assoc, {4, -1}, 1, {"U[r1234] + U[r2341] + U[r3412] + U[r4123]"});
    });
    add("assoc_hh_5_-2_f2", "hochschild", [] { return homology_case<F2>(Model::assoc, {5, -2}, 1, {"U*r1[r12341]"}); });
    add("assoc_hh_7_-2", "hochschild", [] {
        auto r = hochschild_homology<F2>(Model::assoc, {7, -2}, SliceOptions{});
        int cycles = 0;
        for (std::size_t j = 0; j < r.mid.basis.size(); ++j) {
            Vec e(r.mid.basis.size(), 0);
            e[j] = 1;
            cycles += r.homology.is_cycle(e);
        }
        return same("rank 0, cycles 0", "rank " + std::to_string(r.data.rank) + ", cycles " + std::to_string(cycles));
    });
    add("assoc_hh_4_-1_z", "hochschild", [] {
        return homology_case<Z>(Model::assoc, {4, -1}, 1, {"U[r1234] - U[r2341] + U[r3412] - U[r4123]"});
    });
    add("assoc_hh_5_-2_z", "hochschild", [] {
        for (const char* r : {"U*r2[r23412]", "U*r3[r34123]", "U*r4[r41234]"}) {
            auto o = homology_case<Z>(Model::assoc, {5, -2}, 1, {r});
            if (!o.pass) return o;
        }
        return homology_case<Z>(Model::assoc, {5, -2}, 1, {"U*r1[r12341]"});
    });
    add("weighted_hh_1_-1_f2", "hochschild", [] {
        return homology_case<F2>(Model::weighted, {1, -1}, 2,
                                 {"r1234[] + r2341[] + r3412[] + r4123[]", "U*i0[] + U*i1[]"});
    });
    add("weighted_hh_1_-1_z", "hochschild", [] { return homology_case<Z>(Model::weighted, {1, -1}, 2,
                                {"-r1234[] + r2341[] - r3412[] + r4123[]", "-U*i0[] + U*i1[]"});
    });
    add("weighted_hh_1_-1_z_cochains", "hochschild", [] {
        const int cutoff = 24;
        Element<Z> curv;
        for (const auto& x : length_four_chords()) curv.add(x);
        auto mu0 = mu_cochain<Z>(0, std::nullopt, cutoff);
        std::string got;
        for (const auto& value : {curv, Element<Z>::unit().times_u(1)}) {
            Cochain<Z> f;
            f.arity = 0;
            f.cutoff = cutoff;
            f.fn = [value](const std::vector<Basic>&) -> Cochain<Z>::Value { return value; };
            auto r = compare_cochains(cochain_delta(f, mu0), zero_cochain<Z>(std::nullopt, cutoff), 0, 8, 8);
            got += r.ok() ? "cocycle " : "not a cocycle ";
        }
        return same("cocycle cocycle ", got);
    });

    // cobar
    add("cobar_differential_r12", "cobar", [] {
        return same("r2*(x)r1*", cobar_to_string<Z>(cobar_differential<Z>(word("r12"))));
    });
    add("phi_kills_long_letter", "cobar", [] { return same("0", to_string(koszul_phi<Z>(word("r12")))); });
    add("j_r23", "cobar", [] {
        CobarWord w = koszul_j(parse_basic("r23"));
        return same("r2*(x)r3* -> r23", to_string(w) + " -> " + to_string(koszul_phi<Z>(w)));
    });
    add("homotopy_on_image_of_j", "cobar", [] {
        std::string got;
        for (const char* s : {"r1", "r12", "r1234", "r41234"}) got += cobar_to_string<Z>(homotopy_H<Z>(koszul_j(parse_basic(s))));
        return same("0000", got);
    });
    add("homotopy_cases", "cobar", [] {
        std::string got = cobar_to_string<Z>(homotopy_H<Z>(word("r12,r4"))) + "; " +
                          cobar_to_string<Z>(homotopy_H<Z>(word("r2,r23"))) + "; " +
                          cobar_to_string<Z>(homotopy_H<Z>(word("r1,r2,r1")));
        return same("0; 0; -r1*(x)r12*", got);
    });

    // cli-level examples
    add("cli_mu_example", "cli", [] { return same("U*i1", mu_string<Z>(0, "r4,r3,r2,r1")); });
    add("cli_grading_r4", "cli", [] {
        return same("gr'=(-1/2;0,0,0,1) gr=(-3/2;-1/2,-1/2) gr_psi=(-5/2;0,-1) wingr=1 eps=0", grading_row(parse_basic("r4")));
    });
    return c;
}

}  // namespace torus::golden
