#include <gtest/gtest.h>

#include "torus/cochain.hpp"
#include "torus/golden.hpp"

using namespace torus;

namespace {

constexpr int kCutoff = 20;
constexpr int kMaxLen = 7;

std::string first(const IdentityReport& r) { return r.counterexamples.empty() ? "" : r.counterexamples.front(); }

template <class R>
class CochainTest : public ::testing::Test {};

using Rings = ::testing::Types<F2, Z>;
TYPED_TEST_SUITE(CochainTest, Rings);

}  // namespace

TYPED_TEST(CochainTest, Mu4IsACocycle) {
    using R = TypeParam;
    auto r = compare_cochains(cochain_delta(mu_cochain<R>(0, 4, kCutoff)), zero_cochain<R>(5, kCutoff), 5, 5, 10);
    EXPECT_TRUE(r.ok()) << first(r);
    EXPECT_GT(r.checked, 100);
}

TYPED_TEST(CochainTest, Mu6BoundsTheObstruction) {
    using R = TypeParam;
    auto r = compare_cochains(cochain_delta(mu_cochain<R>(0, 6, kCutoff)), obstruction<R>(6, kCutoff), 7, 7, 11);
    EXPECT_TRUE(r.ok()) << first(r);
    EXPECT_GT(r.checked, 10000);
}

TYPED_TEST(CochainTest, WeightOneOperationsAreACocycle) {
    using R = TypeParam;
    auto mu0 = mu_cochain<R>(0, std::nullopt, kCutoff);
    auto d = cochain_delta(mu_cochain<R>(1, std::nullopt, kCutoff), mu0);
    auto r = compare_cochains(d, weighted_obstruction<R>(1, kCutoff), 0, 8, kMaxLen);
    EXPECT_TRUE(r.ok()) << first(r);
}

TYPED_TEST(CochainTest, WeightTwoOperationsBoundTheObstruction) {
    using R = TypeParam;
    auto mu0 = mu_cochain<R>(0, std::nullopt, kCutoff);
    auto d = cochain_delta(mu_cochain<R>(2, std::nullopt, kCutoff), mu0);
    auto r = compare_cochains(d, weighted_obstruction<R>(2, kCutoff), 0, 6, 6);
    EXPECT_TRUE(r.ok()) << first(r);
}

TYPED_TEST(CochainTest, UnitAndIdentity) {
    using R = TypeParam;
    auto r = compare_cochains(cochain_delta(unit_cochain<R>(kCutoff)), zero_cochain<R>(1, kCutoff), 1, 1, kMaxLen);
    EXPECT_TRUE(r.ok()) << first(r);
    auto m2 = mu_cochain<R>(0, 2, kCutoff);
    auto s = compare_cochains(cochain_delta(identity_cochain<R>(kCutoff)), linear_combination<R>({{R::from_int(-1), m2}}),
                              2, 2, kMaxLen);
    EXPECT_TRUE(s.ok()) << first(s);
}

TYPED_TEST(CochainTest, DifferentialSquaresToZero) {
    using R = TypeParam;
    for (int a = 0; a <= 2; ++a) {
        auto f = random_cochain<R>(a, 17 + a, kCutoff);
        auto dd = cochain_delta(cochain_delta(f));
        auto r = compare_cochains(dd, zero_cochain<R>(a + 2, kCutoff), a + 2, a + 2, 6);
        EXPECT_TRUE(r.ok()) << "arity " << a << ": " << first(r);
    }
}

TEST(Cochain, LeibnizRuleOverF2) {
    for (int s = 0; s < 12; ++s) {
        auto f = random_cochain<F2>(1 + s % 2, 100 + s, kCutoff), g = random_cochain<F2>(1 + (s / 2) % 2, 900 + s, kCutoff);
        auto lhs = cochain_delta(cup(f, g));
        auto rhs = linear_combination<F2>({{1, cup(cochain_delta(f), g)}, {1, cup(f, cochain_delta(g))}});
        auto r = compare_cochains(lhs, rhs, 0, 6, 6);
        EXPECT_TRUE(r.ok()) << s << ": " << first(r);
    }
}

TEST(Cochain, WrongObstructionSignFailsOverZ) {
    // Negative control: over Z, delta mu_6 = + mu_4 * mu_4 does not hold.
    auto m4 = mu_cochain<Z>(0, 4, kCutoff);
    auto r = compare_cochains(cochain_delta(mu_cochain<Z>(0, 6, kCutoff)), star(m4, m4), 7, 7, 11);
    EXPECT_GT(r.failures, 100);
    auto s = compare_cochains(cochain_delta(mu_cochain<F2>(0, 6, kCutoff)),
                              star(mu_cochain<F2>(0, 4, kCutoff), mu_cochain<F2>(0, 4, kCutoff)), 7, 7, 11);
    EXPECT_TRUE(s.ok()) << first(s);
}

TEST(Cochain, Mu4StarMu4Example) {
    // Every inner mu_4 here is U times an idempotent, so both sides vanish.
    auto seq = parse_basic_list("r4,r3,r2,r1,r4,r3,r2");
    auto m4 = mu_cochain<F2>(0, 4, kCutoff);
    auto lhs = star(m4, m4)(seq);
    auto rhs = cochain_delta(mu_cochain<F2>(0, 6, kCutoff))(seq);
    ASSERT_TRUE(lhs && rhs);
    EXPECT_EQ(*lhs, *rhs);
    EXPECT_TRUE(lhs->is_zero());
    // A tuple with a nonzero composite.
    auto t = parse_basic_list("r1,r2,r1,r4,r34,r3,r2");
    auto mz = mu_cochain<Z>(0, 4, kCutoff);
    EXPECT_EQ(to_string(*star(mz, mz)(t)), "-U^2*i0");
    EXPECT_EQ(to_string(*cochain_delta(mu_cochain<Z>(0, 6, kCutoff))(t)), "U^2*i0");
    EXPECT_EQ(to_string(*star(m4, m4)(t)), "U^2*i0");
}

TEST(Cochain, SingleCurvatureTermIsNotACocycle) {
    // Negative control: mu_0 with one length-four chord is not closed.
    Cochain<Z> c;
    c.arity = 0;
    c.cutoff = kCutoff;
    c.fn = [](const std::vector<Basic>&) -> Cochain<Z>::Value { return Element<Z>(parse_basic("r1234")); };
    auto r = compare_cochains(cochain_delta(c), zero_cochain<Z>(1, kCutoff), 1, 1, 4);
    EXPECT_GT(r.failures, 0);
}

TEST(Cochain, TruncationIsRespected) {
    auto m4 = mu_cochain<F2>(0, 4, 6);
    EXPECT_FALSE(m4(parse_basic_list("r4,r3,r2,r1234")).has_value());
    EXPECT_TRUE(m4(parse_basic_list("r4,r3,r2,r1")).has_value());
    auto r = compare_cochains(cochain_delta(m4), zero_cochain<F2>(5, 6), 5, 5, 8);
    EXPECT_GT(r.undefined, 0);
}
