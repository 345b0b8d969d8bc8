#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tkhf/semigroup.hpp"

using tkhf::CoprimePair;

TEST(CoprimePairTest, NormalizesOrder) {
    const CoprimePair pair(5, 3);
    EXPECT_EQ(pair.p(), 3);
    EXPECT_EQ(pair.q(), 5);
    EXPECT_EQ(pair.delta(), 4);
    EXPECT_EQ(pair.product(), 15);
}

TEST(CoprimePairTest, RejectsInvalidInput) {
    EXPECT_THROW(CoprimePair(4, 6), std::invalid_argument);
    EXPECT_THROW(CoprimePair(1, 5), std::invalid_argument);
    EXPECT_THROW(CoprimePair(3, 3), std::invalid_argument);
    EXPECT_THROW(CoprimePair(-2, 3), std::invalid_argument);
    try {
        CoprimePair(4, 6);
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "p and q must be coprime");
    }
}

TEST(SemigroupTest, SmallExamples) {
    const auto sd23 = tkhf::build_semigroup(CoprimePair(2, 3));
    EXPECT_EQ(std::vector<std::int64_t>(sd23.gaps().begin(), sd23.gaps().end()), std::vector<std::int64_t>{1});
    EXPECT_EQ(std::vector<std::int64_t>(sd23.alpha().begin(), sd23.alpha().end()), std::vector<std::int64_t>{1});

    const auto sd34 = tkhf::build_semigroup(CoprimePair(3, 4));
    EXPECT_EQ(std::vector<std::int64_t>(sd34.gaps().begin(), sd34.gaps().end()),
              (std::vector<std::int64_t>{1, 2, 5}));
    EXPECT_EQ(std::vector<std::int64_t>(sd34.alpha().begin(), sd34.alpha().end()),
              (std::vector<std::int64_t>{3, 2, 1, 1, 1}));

    const auto sd45 = tkhf::build_semigroup(CoprimePair(4, 5));
    EXPECT_EQ(std::vector<std::int64_t>(sd45.gaps().begin(), sd45.gaps().end()),
              (std::vector<std::int64_t>{1, 2, 3, 6, 7, 11}));
}

TEST(SemigroupTest, AlphaAtOutsideStoredRange) {
    const auto sd = tkhf::build_semigroup(CoprimePair(3, 4));
    EXPECT_EQ(sd.alpha_at(-1), 3);
    EXPECT_EQ(sd.alpha_at(-10), 3);
    EXPECT_EQ(sd.alpha_at(4), 1);
    EXPECT_EQ(sd.alpha_at(5), 0);
    EXPECT_EQ(sd.alpha_at(100), 0);
    EXPECT_TRUE(sd.contains(0));
    EXPECT_TRUE(sd.contains(100));
    EXPECT_FALSE(sd.contains(5));
    EXPECT_FALSE(sd.contains(-1));
}

TEST(SemigroupTest, GapsMatchEnumeration) {
    for (const auto& pair : tkhf::coprime_pairs(20, 30)) {
        const auto sd = tkhf::build_semigroup(pair);
        const auto want = tkhf::oracle::gaps(pair.p(), pair.q());
        ASSERT_EQ(std::vector<std::int64_t>(sd.gaps().begin(), sd.gaps().end()), want) << pair.p() << "," << pair.q();
        ASSERT_EQ(static_cast<std::int64_t>(want.size()), pair.delta());
        for (std::int64_t i = -2; i < 2 * pair.delta() + 2; ++i) {
            ASSERT_EQ(sd.alpha_at(i), tkhf::oracle::alpha(want, i));
        }
    }
}

TEST(SemigroupTest, AlphaSymmetryIdentity) {
    for (const auto& pair : tkhf::coprime_pairs(25, 40)) {
        const auto sd = tkhf::build_semigroup(pair);
        const std::int64_t delta = pair.delta();
        for (std::int64_t i = 0; i <= 2 * delta - 2; ++i) {
            ASSERT_EQ(sd.alpha_at(i) - sd.alpha_at(2 * delta - 2 - i), delta - i - 1) << pair.p() << "," << pair.q();
        }
    }
}

TEST(MembershipTest, WitnessMatchesExhaustiveSearch) {
    for (const auto& pair : tkhf::coprime_pairs(12, 20)) {
        const auto sd = tkhf::build_semigroup(pair);
        for (std::int64_t a = 0; a < pair.product(); ++a) {
            const auto got = tkhf::membership(sd, a);
            const auto want = tkhf::oracle::membership(pair.p(), pair.q(), a);
            ASSERT_EQ(got.coeff_p, want.coeff_p);
            ASSERT_EQ(got.coeff_q, want.coeff_q);
            ASSERT_EQ(got.carry, want.carry);
            ASSERT_EQ(got.carry == 0, sd.contains(a)) << a;
        }
    }
}

TEST(MembershipTest, RejectsOutOfRange) {
    const auto sd = tkhf::build_semigroup(CoprimePair(3, 4));
    EXPECT_THROW(tkhf::membership(sd, -1), std::out_of_range);
    EXPECT_THROW(tkhf::membership(sd, 12), std::out_of_range);
    EXPECT_EQ(tkhf::count_gaps_ge(sd, 3), 1);
    EXPECT_EQ(tkhf::count_gaps_ge(sd, 0), 3);
}

TEST(AlexanderTest, TrefoilAndT34) {
    const auto alex23 = tkhf::alexander(tkhf::build_semigroup(CoprimePair(2, 3)));
    EXPECT_EQ(alex23.coefficients, (std::vector<std::int64_t>{1, -1, 1}));
    EXPECT_EQ(alex23.symmetric, (std::vector<std::int64_t>{-1, 1}));
    EXPECT_EQ(alex23.q_coefficients, (std::vector<std::int64_t>{1}));
    EXPECT_EQ(alex23.second_derivative_at_1, 2);

    const auto alex34 = tkhf::alexander(tkhf::build_semigroup(CoprimePair(3, 4)));
    EXPECT_EQ(alex34.coefficients, (std::vector<std::int64_t>{1, -1, 0, 1, 0, -1, 1}));
    EXPECT_EQ(alex34.second_derivative_at_1, 10);
}

TEST(AlexanderTest, PowerSeriesRecoversSemigroup) {
    for (const auto& pair : tkhf::coprime_pairs(15, 25)) {
        const auto sd = tkhf::build_semigroup(pair);
        const auto alex = tkhf::alexander(sd);
        const std::int64_t top = 2 * pair.delta();
        std::int64_t running = 0;
        for (std::int64_t k = 0; k < top; ++k) {
            running += alex.coefficients[static_cast<std::size_t>(k)];
            ASSERT_EQ(running, sd.contains(k) ? 1 : 0) << pair.p() << "," << pair.q() << " k=" << k;
        }
    }
}

TEST(AlexanderTest, QuotientIdentities) {
    for (const auto& pair : tkhf::coprime_pairs(15, 25)) {
        const auto sd = tkhf::build_semigroup(pair);
        const auto alex = tkhf::alexander(sd);
        const std::int64_t delta = pair.delta();
        // (Delta#)''(1) = 2 sum j^2 a_j.
        std::int64_t sum_j2 = 0;
        for (std::int64_t j = 1; j <= delta; ++j) sum_j2 += j * j * alex.symmetric[static_cast<std::size_t>(j)];
        EXPECT_EQ(alex.second_derivative_at_1, 2 * sum_j2);
        ASSERT_EQ(static_cast<std::int64_t>(alex.q_coefficients.size()), 2 * delta - 1);
        std::int64_t alpha_sum = 0;
        for (std::int64_t i = 0; i <= 2 * delta - 2; ++i) alpha_sum += sd.alpha_at(i);
        EXPECT_EQ(alex.q_at_1(), alpha_sum);
        EXPECT_EQ(alex.second_derivative_at_1 / 2, alpha_sum - delta * (delta - 1) / 2);
    }
}

TEST(CoprimePairsTest, OrderingAndBounds) {
    const auto pairs = tkhf::coprime_pairs(3, 5);
    std::vector<std::pair<std::int64_t, std::int64_t>> got;
    for (const auto& p : pairs) got.emplace_back(p.p(), p.q());
    EXPECT_EQ(got, (std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}}));
    EXPECT_TRUE(tkhf::coprime_pairs(2, 2).empty());
    EXPECT_EQ(tkhf::coprime_pairs(3, 3).size(), 1U);
}
