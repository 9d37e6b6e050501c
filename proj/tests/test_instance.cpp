#include "grover_lab/instance.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "testutil.hpp"

using namespace grover_lab;
using grover_lab::testing::error_code_of;

TEST(MakeInstance, PopulatesDerivedFields) {
    const SearchInstance inst = make_instance(2, {2});
    EXPECT_EQ(inst.N, 4u);
    EXPECT_EQ(inst.M(), 1u);
    EXPECT_EQ(inst.n, 2);
}

TEST(MakeInstance, AllSolutions) {
    const SearchInstance inst = make_instance(2, {0, 1, 2, 3});
    EXPECT_EQ(inst.N, 4u);
    EXPECT_EQ(inst.M(), 4u);
}

TEST(MakeInstance, SortsAndDeduplicates) {
    const SearchInstance inst = make_instance(3, {5, 1, 5, 3});
    EXPECT_EQ(inst.solutions, (std::vector<std::uint64_t>{1, 3, 5}));
}

TEST(MakeInstance, Errors) {
    EXPECT_EQ(error_code_of([] { make_instance(2, {5}); }), "bad-index");
    EXPECT_EQ(error_code_of([] { make_instance(2, {}); }), "no-solutions");
    EXPECT_EQ(error_code_of([] { make_instance(0, {0}); }), "bad-dimension");
    EXPECT_EQ(error_code_of([] { make_instance(25, {0}); }), "bad-dimension");
    // the cap is configurable
    EXPECT_NO_THROW(make_instance(25, {0}, 26));
}

TEST(FEval, Membership) {
    const SearchInstance inst = make_instance(2, {2});
    EXPECT_EQ(f_eval(inst, 2), 1);
    EXPECT_EQ(f_eval(inst, 0), 0);
    EXPECT_EQ(error_code_of([&] { f_eval(inst, 7); }), "bad-index");
}

TEST(FEval, CountsExactlyM) {
    const SearchInstance inst = random_instance(6, 13, 99);
    int hits = 0;
    for (std::uint64_t x = 0; x < inst.N; ++x) hits += f_eval(inst, x);
    EXPECT_EQ(hits, 13);
}

TEST(AngleOf, KnownValues) {
    EXPECT_NEAR(angle_of(make_instance(2, {2})).theta, M_PI / 6.0, 1e-15);
    EXPECT_NEAR(angle_of(make_instance(2, {0, 1, 2, 3})).theta, M_PI / 2.0, 1e-15);
    // asin(sqrt(1/1024)) evaluated independently at high precision
    const SearchInstance big = make_instance(10, {511});
    EXPECT_NEAR(angle_of(big).theta, 0.031255088499495155, 1e-15);
}

TEST(AngleOf, PythagoreanIdentity) {
    for (std::uint64_t M : {1u, 2u, 7u, 16u}) {
        const AngleParams a = angle_of(random_instance(4, M, M));
        EXPECT_NEAR(a.cos_theta * a.cos_theta + a.sin_theta * a.sin_theta, 1.0, 1e-12);
        EXPECT_GT(a.theta, 0.0);
        EXPECT_LE(a.theta, M_PI / 2.0);
    }
}

TEST(AngleOf, SinSquaredTimesNIsM) {
    for (int n = 1; n <= 10; ++n) {
        const std::uint64_t N = std::uint64_t{1} << n;
        for (std::uint64_t M = 1; M <= N; M = M * 3 + 1) {
            const AngleParams a = angle_of(random_instance(n, M, 7 * M + n));
            EXPECT_NEAR(std::pow(std::sin(a.theta), 2) * static_cast<double>(N),
                        static_cast<double>(M), 1e-9);
        }
    }
}

TEST(AngleOf, MonotoneInM) {
    double prev = 0.0;
    for (std::uint64_t M = 1; M <= 256; ++M) {
        const double theta = angle_of(random_instance(8, M, M)).theta;
        EXPECT_GT(theta, prev);
        prev = theta;
    }
}

TEST(RandomInstance, FullSetWhenMEqualsN) {
    const SearchInstance inst = random_instance(3, 8, 123);
    EXPECT_EQ(inst.solutions.size(), 8u);
    for (std::uint64_t x = 0; x < 8; ++x) EXPECT_TRUE(inst.is_solution(x));
}

TEST(RandomInstance, DeterministicPerSeed) {
    const SearchInstance a = random_instance(3, 1, 42);
    const SearchInstance b = random_instance(3, 1, 42);
    EXPECT_EQ(a.solutions, b.solutions);
    const SearchInstance c = random_instance(10, 3, 42);
    const SearchInstance d = random_instance(10, 3, 43);
    EXPECT_EQ(c.solutions.size(), 3u);
    EXPECT_NE(c.solutions, d.solutions);  // astronomically unlikely to collide
}

TEST(RandomInstance, DistinctInRange) {
    const SearchInstance inst = random_instance(10, 3, 7);
    std::set<std::uint64_t> unique(inst.solutions.begin(), inst.solutions.end());
    EXPECT_EQ(unique.size(), 3u);
    for (std::uint64_t x : inst.solutions) EXPECT_LT(x, 1024u);
}

TEST(RandomInstance, BadCounts) {
    EXPECT_EQ(error_code_of([] { random_instance(3, 0, 1); }), "bad-count");
    EXPECT_EQ(error_code_of([] { random_instance(3, 9, 1); }), "bad-count");
}
