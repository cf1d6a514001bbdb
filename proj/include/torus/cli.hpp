#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "torus/ainfty.hpp"
#include "torus/cobar.hpp"
#include "torus/golden.hpp"
#include "torus/hochschild.hpp"
#include "torus/serialize.hpp"

namespace torus::cli {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_bounds = 3 };

// Hard caps keeping a single run at desk scale.
inline constexpr int kMaxLength = 14;
inline constexpr int kMaxWeight = 4;
inline constexpr int kMaxLetters = 7;
inline constexpr int kMaxWinding = 3;
inline constexpr int kMaxCutoff = 24;

struct RunConfig {
    std::string subcommand;
    std::string ring = "z";
    bool json = false;
    std::string out_file;
    std::uint64_t seed = 1;
    // mu
    int weight = 0;
    std::string inputs;
    bool patterns = false;
    // verify-ainfty
    int max_length = 10;
    int max_weight = 2;
    bool structure = false;
    // grading
    std::string element;
    // hochschild
    std::string model = "assoc";
    std::string bigrading;
    int cutoff = 16;
    int max_winding = 2;
    bool representatives = false;
    // cobar-check
    int max_letters = 5;
};

struct Report {
    int code = exit_ok;
    json data;
    std::string text;
};

inline int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        return fallback;
    }
}

inline json header(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

inline void require_range(const std::string& what, int v, int lo, int hi) {
    if (v < lo || v > hi)
        throw BoundsError(what + " must lie in [" + std::to_string(lo) + "," + std::to_string(hi) + "], got " + std::to_string(v));
}

template <class R>
std::vector<Element<R>> parse_inputs(const std::string& s) {
    std::vector<Element<R>> out;
    std::string t = detail::strip_spaces(s);
    if (t.empty()) throw ParseError("empty input sequence");
    std::size_t i = 0;
    while (true) {
        std::size_t j = t.find(',', i);
        out.push_back(parse_element<R>(t.substr(i, j == std::string::npos ? std::string::npos : j - i)));
        if (j == std::string::npos) break;
        i = j + 1;
    }
    return out;
}

template <class R>
Report run_mu(const RunConfig& c) {
    Report r;
    require_range("--w", c.weight, 0, kMaxWeight);
    auto in = parse_inputs<R>(c.inputs);
    auto res = mu<R>(c.weight, in);
    r.data = header("mu");
    r.data["ring"] = R::name;
    r.data["w"] = c.weight;
    r.data["inputs"] = c.inputs;
    r.data["result"] = to_json(res);
    r.text = to_string(res) + "\n";
    if (c.patterns) {
        std::vector<Basic> basics;
        bool all_basic = true;
        for (const auto& x : in) {
            if (x.size() != 1 || x.terms()[0].first.u != 0 || R::to_int(x.terms()[0].second) != 1) all_basic = false;
            else basics.push_back(x.terms()[0].first);
        }
        json pats = json::array();
        if (all_basic) {
            auto e = enumerate_patterns(basics, c.weight);
            r.data["enumeration_status"] = to_string(e.status);
            for (const auto& p : e.patterns) {
                json pj = to_json(p);
                pj["output"] = to_string(output_element(p));
                pats.push_back(pj);
                r.text += pj.dump() + "\n";
            }
        }
        r.data["patterns"] = pats;
    }
    return r;
}

inline Report run_verify(const RunConfig& c) {
    Report r;
    require_range("--max-length", c.max_length, 1, kMaxLength);
    require_range("--max-weight", c.max_weight, 0, kMaxWeight);
    Bounds b{c.max_length, c.max_weight, 1};
    const bool z = c.ring == "z";
    auto rep = verify_relations(b, true, z);
    r.data = header("verify-ainfty");
    r.data["ring"] = c.ring;
    r.data["bounds"] = {{"max_length", c.max_length}, {"max_weight", c.max_weight}};
    r.data["instances"] = rep.instances;
    r.data["failures"] = rep.failures;
    r.data["mod2_mismatches"] = rep.mod2_mismatches;
    json ce = json::array();
    for (const auto& s : rep.counterexamples) ce.push_back(s);
    r.data["counterexamples"] = ce;
    std::ostringstream t;
    t << "instances " << rep.instances << " failures " << rep.failures << " mod2_mismatches " << rep.mod2_mismatches << "\n";
    for (const auto& s : rep.counterexamples) t << "counterexample " << s << "\n";
    bool ok = rep.ok();
    if (c.structure) {
        auto op = check_operations(b, true);
        r.data["structure"] = {{"operations", op.operations},
                               {"nonzero_terms", op.nonzero_terms},
                               {"grading_violations", op.grading_violations},
                               {"odd_arity_violations", op.odd_arity_violations},
                               {"u_power_violations", op.u_power_violations},
                               {"length_violations", op.length_violations},
                               {"factor_violations", op.factor_violations},
                               {"diet_violations", op.diet_violations},
                               {"unitality_violations", op.unitality_violations},
                               {"composite_terms", op.composite_terms},
                               {"composite_u_violations", op.composite_u_violations}};
        t << "nonzero_terms " << op.nonzero_terms << " grading_violations " << op.grading_violations
          << " structure_ok " << (op.structure_ok() ? 1 : 0) << "\n";
        for (const auto& s : op.counterexamples) t << "counterexample " << s << "\n";
        ok = ok && op.graded_ok() && op.structure_ok() && op.mod2_mismatches == 0;
    }
    r.text = t.str();
    r.code = ok ? exit_ok : exit_check_failed;
    return r;
}

inline Report run_grading(const RunConfig& c) {
    Report r;
    std::string e = detail::strip_spaces(c.element);
    if (!e.empty() && e[0] == 'U' && e.find('*') == std::string::npos) e += "*i0";
    Basic b = parse_basic(e);
    r.data = header("grading");
    r.data["record"] = grading_record(b);
    std::ostringstream t;
    t << "gr'    " << gr_prime(b).str() << "\n"
      << "gr     " << gr(b).str() << "\n"
      << "gr_psi " << gr_psi(b).str() << "\n"
      << "wingr  " << b.wingr() << "\n"
      << "eps    " << epsilon(gr_psi(b)) << "\n"
      << "gamma  " << gamma(b).str() << "\n"
      << "alpha  " << alpha(gamma(b)).str() << "\n";
    r.text = t.str();
    return r;
}

inline Bigrading parse_bigrading(const std::string& s) {
    auto k = s.find(',');
    if (k == std::string::npos) throw ParseError("bigrading must be 'n,k': '" + s + "'");
    try {
        std::size_t p1 = 0, p2 = 0;
        int a = std::stoi(s.substr(0, k), &p1);
        int b = std::stoi(s.substr(k + 1), &p2);
        if (p1 != k || p2 != s.size() - k - 1) throw ParseError("bigrading must be 'n,k': '" + s + "'");
        return Bigrading{a, b};
    } catch (const std::logic_error&) {
        throw ParseError("bigrading must be 'n,k': '" + s + "'");
    }
}

inline json triplets(const Matrix& m) {
    json t = json::array();
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.a[i][j]) t.push_back({i, j, m.a[i][j]});
    return t;
}

template <class R>
Report run_hochschild(const RunConfig& c) {
    Report r;
    require_range("--cutoff", c.cutoff, 1, kMaxCutoff);
    require_range("--max-winding", c.max_winding, 0, kMaxWinding);
    Model m;
    if (c.model == "assoc") m = Model::assoc;
    else if (c.model == "weighted") m = Model::weighted;
    else throw ParseError("unknown model: " + c.model);
    Bigrading bg = parse_bigrading(c.bigrading);
    auto h = hochschild_homology<R>(m, bg, SliceOptions{c.cutoff, c.max_winding});
    const bool adequate = h.prev.cutoff_adequate && h.mid.cutoff_adequate && h.next.cutoff_adequate;
    r.data = header("hochschild");
    r.data["model"] = c.model;
    r.data["ring"] = R::name;
    r.data["bigrading"] = {bg.first, bg.second};
    r.data["cutoff"] = c.cutoff;
    r.data["max_winding"] = c.max_winding;
    r.data["cutoff_adequate"] = adequate;
    json basis = json::array();
    for (const auto& g : h.mid.basis) basis.push_back(to_string(g));
    r.data["basis"] = basis;
    r.data["dims"] = {h.prev.basis.size(), h.mid.basis.size(), h.next.basis.size()};
    r.data["matrix"] = {{"rows", h.out.rows}, {"cols", h.out.cols}, {"entries", triplets(h.out)}};
    r.data["incoming_matrix"] = {{"rows", h.in.rows}, {"cols", h.in.cols}, {"entries", triplets(h.in)}};
    json reps = json::array();
    if (c.representatives)
        for (const auto& v : h.data.representatives) reps.push_back(chain_string(h.mid, v));
    r.data["homology"] = {{"rank", h.data.rank}, {"invariant_factors", h.data.torsion}, {"representatives", reps}};
    std::ostringstream t;
    t << c.model << " " << R::name << " (" << bg.first << "," << bg.second << ") dims " << h.prev.basis.size() << " -> "
      << h.mid.basis.size() << " -> " << h.next.basis.size() << "\n";
    t << "rank " << h.data.rank;
    for (auto d : h.data.torsion) t << " torsion " << d;
    t << "\n";
    for (const auto& s : reps) t << "representative " << s.get<std::string>() << "\n";
    if (!adequate) t << "warning: cutoff too small for this bigrading\n";
    if (!h.data.boundary_composite_zero) t << "error: differential does not square to zero\n";
    r.text = t.str();
    if (!h.data.boundary_composite_zero) r.code = exit_check_failed;
    else if (!adequate) r.code = exit_bounds;
    return r;
}

template <class R>
Report run_cobar(const RunConfig& c) {
    Report r;
    require_range("--max-letters", c.max_letters, 1, kMaxLetters);
    require_range("--max-winding", c.max_winding, 0, kMaxWinding);
    auto rep = verify_homotopy<R>(c.max_letters, c.max_winding);
    r.data = header("cobar-check");
    r.data["ring"] = R::name;
    r.data["bounds"] = {{"max_letters", c.max_letters}, {"max_winding", c.max_winding}};
    r.data["words"] = rep.words;
    r.data["square_failures"] = rep.square_failures;
    r.data["chain_map_failures"] = rep.chain_map_failures;
    r.data["grading_failures"] = rep.grading_failures;
    r.data["homotopy_failures"] = rep.homotopy_failures;
    r.data["phi_j_failures"] = rep.phij_failures;
    r.data["counterexamples"] = rep.counterexamples;
    std::ostringstream t;
    t << "words " << rep.words << " square " << rep.square_failures << " chain_map " << rep.chain_map_failures
      << " grading " << rep.grading_failures << " homotopy " << rep.homotopy_failures << "\n";
    for (const auto& s : rep.counterexamples) t << "counterexample " << s << "\n";
    r.text = t.str();
    r.code = rep.ok() ? exit_ok : exit_check_failed;
    return r;
}

inline Report run_golden(const RunConfig& c) {
    Report r;
    r.data = header("golden");
    json rows = json::array();
    std::ostringstream t;
    int failed = 0;
    auto record = [&](const std::string& id, const std::string& area, const golden::Outcome& o) {
        failed += !o.pass;
        rows.push_back({{"id", id}, {"area", area}, {"pass", o.pass}, {"expected", o.expected}, {"got", o.got}});
        t << (o.pass ? "PASS " : "FAIL ") << id;
        if (!o.pass) t << "\n  expected: " << o.expected << "\n  got:      " << o.got;
        t << "\n";
    };
    for (const auto& gc : golden::cases()) {
        golden::Outcome o;
        try {
            o = gc.run();
        } catch (const std::exception& e) {
            o = {false, "no exception", e.what()};
        }
        record(gc.id, gc.area, o);
    }
    record("epsilon_random_pairs", "gradings", golden::epsilon_random_pairs(c.seed));
    r.data["seed"] = c.seed;
    r.data["cases"] = rows;
    r.data["failed"] = failed;
    t << failed << " of " << rows.size() << " failed\n";
    r.text = t.str();
    r.code = failed ? exit_check_failed : exit_ok;
    return r;
}

template <template <class> class F>
Report with_ring(const RunConfig& c) {
    if (c.ring == "f2") return F<F2>{}(c);
    if (c.ring == "z") return F<Z>{}(c);
    throw ParseError("unknown ring: " + c.ring);
}

template <class R> struct MuF { Report operator()(const RunConfig& c) const { return run_mu<R>(c); } };
template <class R> struct HochF { Report operator()(const RunConfig& c) const { return run_hochschild<R>(c); } };
template <class R> struct CobarF { Report operator()(const RunConfig& c) const { return run_cobar<R>(c); } };

// Parses argv (without the program name) and runs one subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    c.max_length = env_int("TORUS_MAX_LENGTH", c.max_length);
    c.max_weight = env_int("TORUS_MAX_WEIGHT", c.max_weight);
    c.cutoff = env_int("TORUS_CUTOFF", c.cutoff);

    CLI::App app{"Exact engine for the weighted A-infinity algebra of the torus", "torus"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", c.json, "machine-readable output");
    app.add_option("--out", c.out_file, "write the report to FILE");
    app.add_option("--seed", c.seed, "seed for random property checks");
    const std::vector<std::string> rings{"f2", "z"};

    auto* mu = app.add_subcommand("mu", "compute mu_n^w on a sequence of elements");
    mu->add_option("--w", c.weight, "weight")->capture_default_str();
    mu->add_option("--inputs", c.inputs, "comma-separated elements")->required();
    mu->add_option("--ring", c.ring)->check(CLI::IsMember(rings))->capture_default_str();
    mu->add_flag("--patterns", c.patterns, "list the tiling patterns");

    auto* ver = app.add_subcommand("verify-ainfty", "check the weighted A-infinity relations");
    ver->add_option("--ring", c.ring)->check(CLI::IsMember(rings))->capture_default_str();
    ver->add_option("--max-length", c.max_length)->capture_default_str();
    ver->add_option("--max-weight", c.max_weight)->capture_default_str();
    ver->add_flag("--structure", c.structure, "also check grading and structural lemmas");

    auto* grd = app.add_subcommand("grading", "print every grading of a basic element");
    grd->add_option("element", c.element)->required();

    auto* hh = app.add_subcommand("hochschild", "Hochschild cohomology of a small-model slice");
    hh->add_option("--model", c.model)->check(CLI::IsMember({"assoc", "weighted"}))->capture_default_str();
    hh->add_option("--ring", c.ring)->check(CLI::IsMember(rings))->capture_default_str();
    hh->add_option("--bigrading", c.bigrading, "n,k or W,l")->required();
    hh->add_option("--cutoff", c.cutoff)->capture_default_str();
    hh->add_option("--max-winding", c.max_winding)->capture_default_str();
    hh->add_flag("--representatives", c.representatives);

    auto* cob = app.add_subcommand("cobar-check", "check the Koszul homotopy on cobar words");
    cob->add_option("--ring", c.ring)->check(CLI::IsMember(rings))->capture_default_str();
    cob->add_option("--max-letters", c.max_letters)->capture_default_str();
    cob->add_option("--max-winding", c.max_winding)->capture_default_str();

    app.add_subcommand("golden", "replay every documented example");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }
    for (auto* s : app.get_subcommands()) c.subcommand = s->get_name();

    Report r;
    try {
        if (c.subcommand == "mu") r = with_ring<MuF>(c);
        else if (c.subcommand == "verify-ainfty") r = run_verify(c);
        else if (c.subcommand == "grading") r = run_grading(c);
        else if (c.subcommand == "hochschild") r = with_ring<HochF>(c);
        else if (c.subcommand == "cobar-check") r = with_ring<CobarF>(c);
        else r = run_golden(c);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const BoundsError& e) {
        err << "error: " << e.what() << "\n";
        return exit_bounds;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_check_failed;
    }
    std::string body = c.json ? r.data.dump(2) + "\n" : r.text;
    if (!c.out_file.empty()) {
        std::ofstream f(c.out_file, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << c.out_file << "\n";
            return exit_usage;
        }
        f << body;
    } else {
        out << body;
    }
    return r.code;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), out, err);
}

}  // namespace torus::cli
