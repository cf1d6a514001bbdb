#include <gtest/gtest.h>

#include "torus/ainfty.hpp"
#include "torus/golden.hpp"

using namespace torus;

namespace {

const Bounds kSweep{8, 2, 1};

}  // namespace

TEST(Ainfty, RelationsHoldOverBothRings) {
    auto rep = verify_relations(kSweep);
    EXPECT_GT(rep.instances, 10000);
    EXPECT_EQ(rep.failures, 0) << (rep.counterexamples.empty() ? "" : rep.counterexamples.front());
    EXPECT_EQ(rep.mod2_mismatches, 0);
}

TEST(Ainfty, RelationsWithWeightThree) {
    auto rep = verify_relations(Bounds{6, 3, 1});
    EXPECT_EQ(rep.failures, 0) << (rep.counterexamples.empty() ? "" : rep.counterexamples.front());
    EXPECT_EQ(rep.mod2_mismatches, 0);
}

TEST(Ainfty, StructuralLemmas) {
    auto rep = check_operations(kSweep);
    EXPECT_GT(rep.nonzero_terms, 100);
    EXPECT_GT(rep.composite_terms, 100);
    EXPECT_TRUE(rep.graded_ok()) << (rep.counterexamples.empty() ? "" : rep.counterexamples.front());
    EXPECT_TRUE(rep.structure_ok()) << (rep.counterexamples.empty() ? "" : rep.counterexamples.front());
    EXPECT_EQ(rep.mod2_mismatches, 0);
}

TEST(Ainfty, ResidualTermsCancelInPairs) {
    // The residual vanishes but individual composites do not.
    auto seq = parse_basic_list("r3,r2,r1");
    long terms = 0;
    auto r = ainfty_residual<Z>(1, seq, [&](int, int, int, int, const Basic&) { ++terms; });
    EXPECT_TRUE(r.is_zero()) << to_string(r);
    EXPECT_EQ(terms, 2);
}

TEST(Ainfty, GradedTermRejectsWrongOutputs) {
    auto seq = parse_basic_list("r4,r3,r2,r1");
    EXPECT_TRUE(graded_term(0, seq, parse_basic("U*i1")));
    std::string why;
    EXPECT_FALSE(graded_term(0, seq, parse_basic("U^2*i1"), &why));
    EXPECT_FALSE(why.empty());
    EXPECT_FALSE(graded_term(1, seq, parse_basic("U*i1")));
}

TEST(Ainfty, OperationsVanishOffChordSequences) {
    EXPECT_TRUE(mu_counts(0, parse_basic_list("r4,r3,r2")).empty());
    EXPECT_TRUE(mu_counts(0, parse_basic_list("r1,r2,r3,r4")).empty());
    EXPECT_TRUE(mu_counts(2, {}).empty());
    EXPECT_EQ(mu_counts(1, {}).size(), 4u);
    EXPECT_TRUE(mu<Z>(0, std::vector<Element<Z>>{Element<Z>(parse_basic("r4")), Element<Z>()}).is_zero());
}

TEST(Ainfty, OperationsAreUEquivariant) {
    auto a = mu<Z>(0, {parse_element<Z>("U*r4"), parse_element<Z>("r3"), parse_element<Z>("U^2*r2"), parse_element<Z>("r1")});
    EXPECT_EQ(to_string(a), "U^4*i1");
    auto b = mu<F2>(0, {parse_element<F2>("r4 + r2"), parse_element<F2>("r3"), parse_element<F2>("r2"), parse_element<F2>("r1")});
    EXPECT_EQ(to_string(b), "U*i1");
}

TEST(Ainfty, DocumentedValues) {
    for (const auto& c : golden::cases()) {
        if (c.area != "operations" && c.area != "relations") continue;
        auto o = c.run();
        EXPECT_TRUE(o.pass) << c.id << "\n expected " << o.expected << "\n got " << o.got;
    }
}

TEST(Ainfty, BoundsAreRespected) {
    long longest = 0;
    for_each_instance(Bounds{6, 0, 0}, [&](const std::vector<Basic>& s) {
        longest = std::max<long>(longest, total_length(s));
        for (const auto& a : s) EXPECT_TRUE(a.is_chord());
    });
    EXPECT_EQ(longest, 6);
}
