#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "torus/algebra.hpp"
#include "torus/grading.hpp"
#include "torus/tiling.hpp"

namespace torus {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const BigGrading& g) { return {{"m2", g.m.twice}, {"spinc", g.s}}; }
inline json to_json(const Grading& g) { return {{"m2", g.m.twice}, {"a2", g.a.twice}, {"b2", g.b.twice}}; }
inline json to_json(const SmallGrading& g) { return {{"m2", g.m.twice}, {"a", g.a}, {"b", g.b}}; }
inline json to_json(const GammaGrading& g) { return {{"g", to_json(g.g)}, {"w", g.w}}; }

inline BigGrading big_grading_from_json(const json& j) {
    return BigGrading{HalfInt{j.at("m2").get<long>()}, j.at("spinc").get<std::array<long, 4>>()};
}
inline Grading grading_from_json(const json& j) {
    return Grading::make(j.at("m2").get<long>(), j.at("a2").get<long>(), j.at("b2").get<long>());
}
inline SmallGrading small_grading_from_json(const json& j) {
    SmallGrading g{HalfInt{j.at("m2").get<long>()}, j.at("a").get<long>(), j.at("b").get<long>()};
    if (!g.in_group()) throw GradingError("not an element of G(T^2): " + g.str());
    return g;
}

// Every grading flavour of a basic element.
inline json grading_record(const Basic& b) {
    json j;
    j["element"] = to_string(b);
    j["gr_prime"] = to_json(gr_prime(b));
    j["gr"] = to_json(gr(b));
    j["gr_psi"] = to_json(gr_psi(b));
    j["wingr"] = b.wingr();
    j["epsilon"] = epsilon(gr_psi(b));
    j["gamma"] = to_json(gamma(b));
    j["alpha_gamma"] = to_json(alpha(gamma(b)));
    return j;
}

template <class R>
json to_json(const Element<R>& e) {
    json terms = json::array();
    for (const auto& [b, c] : e.terms()) terms.push_back({{"basic", to_string(b)}, {"coeff", R::to_int(c)}});
    return {{"text", to_string(e)}, {"terms", terms}};
}

inline std::string chain_side_name(ChainSide s) {
    switch (s) {
        case ChainSide::left: return "left-extended";
        case ChainSide::right: return "right-extended";
        default: return "none";
    }
}

inline ChainSide chain_side_from_name(const std::string& s) {
    if (s == "none") return ChainSide::none;
    if (s == "left-extended") return ChainSide::left;
    if (s == "right-extended") return ChainSide::right;
    throw PatternError("unknown root_chain side: " + s);
}

inline json to_json(const TilingPattern& p) {
    json j;
    j["vertices"] = p.vertices;
    j["half_edges"] = p.half_edges;
    j["root"] = p.root;
    j["root_chain"] = {{"count", p.chain_count}, {"side", chain_side_name(p.chain_side)}};
    j["seed_label"] = p.seed_label;
    return j;
}

inline TilingPattern pattern_from_json(const json& j) {
    try {
        TilingPattern p;
        p.vertices = j.at("vertices").get<int>();
        p.half_edges = j.at("half_edges").get<std::vector<int>>();
        p.root = j.at("root").get<int>();
        p.chain_count = j.at("root_chain").at("count").get<int>();
        p.chain_side = chain_side_from_name(j.at("root_chain").at("side").get<std::string>());
        p.seed_label = j.at("seed_label").get<int>();
        return p;
    } catch (const json::exception& e) {
        throw PatternError(std::string("malformed pattern record: ") + e.what());
    }
}

}  // namespace torus
