#include <gtest/gtest.h>

#include "oracle.hpp"
#include "torus/ainfty.hpp"
#include "torus/golden.hpp"
#include "torus/serialize.hpp"
#include "torus/tiling.hpp"

using namespace torus;

namespace {

// Every word of length n with positive entries summing to 2n - 4.
void for_each_composition(int n, const std::function<void(const Word&)>& f) {
    Word w(n, 1);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            w[i] = left;
            if (left >= 1) f(w);
            return;
        }
        for (int k = 1; k <= left - (n - 1 - i); ++k) {
            w[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, 2 * n - 4);
}

std::string key_of(const Word& w) {
    std::string s;
    for (int k : w) s += std::to_string(k) + " ";
    return s;
}

TilingPattern square() {
    TilingPattern p;
    p.vertices = 1;
    p.half_edges = {-1, -1, -1, -1};
    return p;
}

}  // namespace

TEST(Tiling, CounterMatchesBruteForceOracle) {
    const int max_vertices = 5;
    auto hist = oracle::word_histogram(max_vertices);
    ASSERT_GT(hist.size(), 100u);
    for (const auto& [w, k] : hist) {
        EXPECT_EQ(count_word(w), k) << key_of(w);
        EXPECT_EQ(build_word(w).size(), k);
        EXPECT_GE(word_area(w), 1);
    }
    long found = 0;
    for (int n = 4; n <= 2 * max_vertices + 2; n += 2)
        for_each_composition(n, [&](const Word& w) {
            if (word_area(w) > max_vertices) return;
            auto k = count_word(w);
            auto it = hist.find(w);
            EXPECT_EQ(k, it == hist.end() ? 0u : it->second) << key_of(w);
            found += k > 0;
        });
    EXPECT_EQ(found, static_cast<long>(hist.size()));
}

TEST(Tiling, BuiltMapsAreValidAndRealiseTheirWord) {
    auto hist = oracle::word_histogram(4);
    for (const auto& [w, k] : hist)
        for (const auto& M : build_word(w)) {
            TilingPattern p;
            p.vertices = M.V;
            p.half_edges = M.alpha;
            auto v = validate_pattern(p);
            ASSERT_TRUE(v.valid) << key_of(w) << ": " << v.reason;
            EXPECT_EQ(pattern_word(p), w);
            EXPECT_EQ(v.d, word_area(w));
        }
}

TEST(Tiling, SingleSquareIsValid) {
    auto v = validate_pattern(square());
    EXPECT_TRUE(v.valid) << v.reason;
    EXPECT_EQ(v.n, 4);
    EXPECT_EQ(v.w, 0);
    EXPECT_EQ(v.d, 1);
    EXPECT_EQ(to_string(chord_sequence(square())), "r4,r3,r2,r1");
    EXPECT_EQ(to_string(output_element(square())), "U*i1");
}

TEST(Tiling, InvalidPatternsAreRejected) {
    std::vector<TilingPattern> bad;
    auto p = square();
    p.half_edges = {-1, -1, -1};
    bad.push_back(p);
    p = square();
    p.half_edges = {1, -1, -1, -1};
    bad.push_back(p);
    p = square();
    p.half_edges = {1, 0, -1, -1};  // loop at a vertex
    bad.push_back(p);
    p = square();
    p.vertices = 2;
    p.half_edges = {-1, -1, -1, -1, -1, -1, -1, -1};  // disconnected
    bad.push_back(p);
    p = square();
    p.vertices = 2;
    p.half_edges = {-1, 5, 4, -1, 2, 1, -1, -1};  // bigon
    bad.push_back(p);
    p = square();
    p.vertices = 2;
    p.half_edges = {4, -1, -1, -1, 0, -1, -1, -1};
    p.root = 0;  // root is not a leaf
    bad.push_back(p);
    p = square();
    p.seed_label = 5;
    bad.push_back(p);
    p = square();
    p.labels = {4, 3, 2, 2};
    bad.push_back(p);
    p = square();
    p.chain_count = 2;
    bad.push_back(p);
    for (std::size_t i = 0; i < bad.size(); ++i) {
        auto v = validate_pattern(bad[i]);
        EXPECT_FALSE(v.valid) << "case " << i;
        EXPECT_FALSE(v.reason.empty());
    }
}

TEST(Tiling, ExplicitLabelsAgreeWithDerivedLabels) {
    auto hist = oracle::word_histogram(4);
    for (const auto& [w, k] : hist)
        for (const auto& M : build_word(w)) {
            TilingPattern p;
            p.vertices = M.V;
            p.half_edges = M.alpha;
            p.labels = pattern_labels(p);
            EXPECT_TRUE(validate_pattern(p).valid);
            p.labels[0] = mod4(p.labels[0] + 1);
            EXPECT_FALSE(validate_pattern(p).valid);
        }
}

TEST(Tiling, EnumerationStatuses) {
    EXPECT_EQ(enumerate_patterns(parse_basic_list("r4,r3,r2"), 0).status, EnumStatus::odd_length);
    EXPECT_EQ(enumerate_patterns(parse_basic_list("r1,r2"), 0).status, EnumStatus::not_chord_sequence);
    EXPECT_EQ(enumerate_patterns(parse_basic_list("r4,i0"), 0).status, EnumStatus::not_chord_sequence);
    EXPECT_EQ(enumerate_patterns(parse_basic_list("r4,r3"), 0).status, EnumStatus::nonpositive_d);
    EXPECT_TRUE(enumerate_patterns(parse_basic_list("r4,r3"), 1).patterns.empty());
    EXPECT_TRUE(is_chord_sequence(parse_basic_list("r4,r3,r2,r1")));
    EXPECT_FALSE(is_chord_sequence(parse_basic_list("r4,r2")));
}

TEST(Tiling, EnumerationAgreesWithOperationCounts) {
    long patterns = 0;
    for_each_reeb_sequence(12, [&](const std::vector<Basic>& seq) {
        if (seq.size() % 2 || !is_chord_sequence(seq)) return;
        for (int w = 0; w <= 2; ++w) {
            if (w + static_cast<int>(seq.size()) / 2 - 1 < 1) continue;
            auto e = enumerate_patterns(seq, w);
            std::map<Basic, std::uint64_t> by_output;
            for (const auto& p : e.patterns) {
                auto v = validate_pattern(p);
                ASSERT_TRUE(v.valid) << to_string(seq) << ": " << v.reason;
                EXPECT_EQ(v.w, w);
                EXPECT_EQ(chord_sequence(p), seq);
                EXPECT_EQ(canonical_form(p), p);
                Basic out = output_element(p);
                EXPECT_EQ(out.u, w + static_cast<int>(seq.size()) / 2 - 1);
                ++by_output[out];
            }
            auto mc = mu_counts(w, seq);
            std::map<Basic, std::uint64_t> counts(mc.begin(), mc.end());
            EXPECT_EQ(by_output, counts) << to_string(seq) << " w=" << w;
            patterns += static_cast<long>(e.patterns.size());
        }
    });
    EXPECT_GT(patterns, 100);
}

TEST(Tiling, EnumerationIsDeterministic) {
    auto s = parse_basic_list("r41,r4,r34,r3,r23,r2,r12,r1");
    auto a = enumerate_patterns(s, 1), b = enumerate_patterns(s, 1);
    EXPECT_EQ(a.patterns, b.patterns);
    std::string ja, jb;
    for (const auto& p : a.patterns) ja += to_json(p).dump();
    for (const auto& p : b.patterns) jb += to_json(p).dump();
    EXPECT_EQ(ja, jb);
}

TEST(Tiling, CanonicalFormIsInvariantUnderRelabelling) {
    auto seq = parse_basic_list("r41,r4,r34,r3,r23,r2,r12,r1");
    long checked = 0;
    for (int w = 0; w <= 1; ++w)
        for (const auto& p : enumerate_patterns(seq, w).patterns) {
            const int V = p.vertices;
            // Reverse the vertex order and rotate each vertex's half-edges by one.
            auto nh = [&](int h) { return 4 * (V - 1 - h / 4) + (h % 4 + 1) % 4; };
            TilingPattern q = p;
            q.root = nh(p.root);
            for (int h = 0; h < 4 * V; ++h) q.half_edges[nh(h)] = p.half_edges[h] < 0 ? -1 : nh(p.half_edges[h]);
            EXPECT_TRUE(validate_pattern(q).valid);
            EXPECT_EQ(chord_sequence(q), chord_sequence(p));
            EXPECT_EQ(canonical_form(q), p);
            ++checked;
        }
    EXPECT_GT(checked, 0);
}

TEST(Tiling, JsonRoundTrip) {
    for (const char* s : {"r4,r3,r2,r1", "r34,r3,r2,r1", "r41,r4,r34,r3,r23,r2,r12,r1"}) {
        auto seq = parse_basic_list(s);
        for (int w = 0; w <= 1; ++w)
            for (const auto& p : enumerate_patterns(seq, w).patterns) {
                json j = to_json(p);
                EXPECT_EQ(j.at("root_chain").at("side").get<std::string>(), chain_side_name(p.chain_side));
                EXPECT_EQ(pattern_from_json(j), p);
                EXPECT_EQ(pattern_from_json(json::parse(j.dump())), p);
            }
    }
    EXPECT_THROW(pattern_from_json(json{{"vertices", 1}}), PatternError);
    json bad = to_json(square());
    bad["root_chain"]["side"] = "sideways";
    EXPECT_THROW(pattern_from_json(bad), PatternError);
}

TEST(Tiling, DocumentedExamples) {
    for (const auto& c : golden::cases()) {
        if (c.area != "tiling") continue;
        auto o = c.run();
        EXPECT_TRUE(o.pass) << c.id << "\n expected " << o.expected << "\n got " << o.got;
    }
}
