#include <gtest/gtest.h>

#include <random>

#include "torus/golden.hpp"
#include "torus/grading.hpp"

using namespace torus;

namespace {

BigGrading random_big(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-5, 5);
    return BigGrading{HalfInt{d(rng)}, {d(rng), d(rng), d(rng), d(rng)}};
}

SmallGrading random_small(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-5, 5);
    SmallGrading g{HalfInt{d(rng)}, d(rng), d(rng)};
    if (!g.in_group()) g.m.twice += 1;
    return g;
}

}  // namespace

TEST(Grading, BigGroupLaws) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto x = random_big(rng), y = random_big(rng), z = random_big(rng);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * x.inverse(), BigGrading::identity());
        EXPECT_EQ(x.inverse() * x, BigGrading::identity());
        EXPECT_EQ(x * BigGrading::lambda(), BigGrading::lambda() * x);
        EXPECT_EQ(x.pow(3), x * x * x);
        EXPECT_EQ(x.pow(-2), (x * x).inverse());
    }
}

TEST(Grading, ProductExample) {
    BigGrading x{HalfInt{-1}, {1, 1, 1, 0}}, y{HalfInt{-1}, {0, 0, 0, 1}};
    EXPECT_EQ((x * y).str(), "(-1;1,1,1,1)");
}

TEST(Grading, GrPrimeIsMultiplicative) {
    auto basics = all_basics(9);
    long checked = 0;
    for (const auto& x : basics)
        for (const auto& y : basics)
            if (auto p = multiply(x, y)) {
                ASSERT_EQ(gr_prime(*p), gr_prime(x) * gr_prime(y)) << to_string(x) << " " << to_string(y);
                EXPECT_EQ(gr(*p), gr(x) * gr(y));
                EXPECT_EQ(gr_psi(*p), gr_psi(x) * gr_psi(y));
                ++checked;
            }
    EXPECT_GT(checked, 500);
}

TEST(Grading, LengthFourChordsAreCentralAndEqualToU) {
    for (const auto& c : length_four_chords()) {
        EXPECT_EQ(gr_prime(c), gr_prime(parse_basic("U*i0")));
        EXPECT_EQ(gr(c).str(), "(-2;0,0)");
    }
    EXPECT_EQ(gr_prime(parse_basic("U*r2")), gr_prime(parse_basic("r23412")));
}

TEST(Grading, ProjectionRejectsOddCoset) {
    EXPECT_THROW(project_to_G(BigGrading{HalfInt{0}, {1, 0, 0, 0}}), GradingError);
    EXPECT_NO_THROW(project_to_G(BigGrading::lambda_w()));
    EXPECT_EQ(project_to_G(BigGrading::lambda_w()).str(), "(0;0,0)");
    EXPECT_EQ(project_to_G(BigGrading::lambda()).str(), "(1;0,0)");
    EXPECT_THROW(Grading::make(0, 1, 0), GradingError);
}

TEST(Grading, ProjectionIsAHomomorphism) {
    auto basics = all_basics(7);
    for (const auto& x : basics)
        for (const auto& y : basics) EXPECT_EQ(project_to_G(gr_prime(x) * gr_prime(y)), gr(x) * gr(y));
}

TEST(Grading, RefinementRoundTrip) {
    for (const auto& x : all_basics(10)) {
        auto s = gr_psi(x);
        EXPECT_TRUE(s.in_group()) << to_string(x);
        EXPECT_EQ(unrefine(s, x.left(), x.right()), gr(x));
    }
    EXPECT_THROW(refine(gr(parse_basic("r1")), 0, 0), GradingError);
}

TEST(Grading, EpsilonIsAHomomorphism) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto g = random_small(rng), h = random_small(rng);
        EXPECT_EQ(epsilon(g * h), (epsilon(g) + epsilon(h)) % 2);
    }
    EXPECT_EQ(epsilon(SmallGrading::lambda()), 1);
    EXPECT_EQ(epsilon(gr_psi(parse_basic("r3"))), 0);
    EXPECT_TRUE(golden::epsilon_random_pairs(1).pass);
    EXPECT_TRUE(golden::epsilon_random_pairs(12345).pass);
}

TEST(Grading, EpsilonVanishesOnTheAlgebra) {
    for (const auto& x : all_basics(12)) EXPECT_EQ(epsilon(gr_psi(x)), 0) << to_string(x);
}

TEST(Grading, AlphaIsAnInvolution) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int i = 0; i < 100; ++i) {
        long a2 = d(rng), b2 = d(rng);
        if ((a2 + b2) % 2) ++b2;
        Grading g{HalfInt{d(rng)}, HalfInt{a2}, HalfInt{b2}};
        GammaGrading x{g, d(rng)};
        EXPECT_EQ(alpha(alpha(x)), x);
    }
    EXPECT_EQ(alpha(GammaGrading{}), GammaGrading{});
    EXPECT_EQ(alpha(gamma(parse_basic("r4"))).str(), "(1/2;1/2,1/2)x-1");
    EXPECT_EQ(gamma(parse_basic("i0")), GammaGrading{});
    EXPECT_EQ(gamma(parse_basic("r4")).str(), "(-3/2;-1/2,-1/2)x1");
    EXPECT_EQ(gamma(parse_basic("U*i1")).str(), "(-2;0,0)x1");
}

TEST(Grading, DocumentedTables) {
    for (const auto& c : golden::cases()) {
        if (c.area != "gradings") continue;
        auto o = c.run();
        EXPECT_TRUE(o.pass) << c.id << "\n expected " << o.expected << "\n got " << o.got;
    }
}
