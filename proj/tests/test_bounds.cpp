#include <gtest/gtest.h>

#include <numeric>

#include "cycorder/bounds.hpp"
#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"
#include "cycorder/sumset.hpp"
#include "oracles.hpp"

using namespace cycorder;

TEST(KlBound, Examples) {
    const auto b = klBound(12, 5);
    EXPECT_EQ(b.terms, (std::vector<KlTerm>{{6, 4}, {12, 3}}));
    EXPECT_EQ(b.bound, 4u);
    EXPECT_EQ(klBound(10, 9).terms, (std::vector<KlTerm>{{10, 2}}));
    EXPECT_EQ(klBound(10, 9).bound, 2u);
    EXPECT_EQ(klBound(7, 3).bound, 3u);
    EXPECT_THROW(klBound(7, 1), UsageError);
    EXPECT_THROW(klBound(7, 7), UsageError);
    EXPECT_THROW(klBound(1, 2), UsageError);
}

TEST(KlBound, MatchesFormula) {
    for (std::uint64_t n = 3; n <= 120; ++n)
        for (std::uint64_t rho = 2; rho < n; ++rho) EXPECT_EQ(klBound(n, rho).bound, oracle::klBound(n, rho)) << n << ' ' << rho;
}

TEST(FlGrowthCheck, Examples) {
    const auto c1 = flGrowthCheck(IntSet{0, 1, 2}, 3);
    ASSERT_EQ(c1.records.size(), 3u);
    EXPECT_EQ(c1.records[2].size, 7u);
    EXPECT_EQ(c1.records[2].lowerBound, 7u);
    EXPECT_TRUE(c1.records[2].holds);

    const auto c2 = flGrowthCheck(IntSet{0, 1, 3}, 2);
    EXPECT_EQ(c2.records[1].size, 6u);
    EXPECT_EQ(c2.records[1].lowerBound, 6u);
    EXPECT_FALSE(c2.hypothesisFailed);
    EXPECT_FALSE(c2.violated());

    const auto c3 = flGrowthCheck(IntSet{0, 2, 3, 7}, 3);
    EXPECT_TRUE(c3.hypothesisFailed);
    EXPECT_FALSE(c3.violated());

    EXPECT_THROW(flGrowthCheck(IntSet{1, 2}, 2), UsageError);     // 0 missing
    EXPECT_THROW(flGrowthCheck(IntSet{0, 2, 4}, 2), UsageError);  // gcd 2
    EXPECT_THROW(flGrowthCheck(IntSet{0}, 2), UsageError);
    EXPECT_THROW(flGrowthCheck(IntSet{0, 1}, 0), UsageError);
}

TEST(FlGrowthCheck, SizesMatchDirectSumsets) {
    for (std::uint64_t mask = 0; mask < (1u << 8); ++mask) {
        oracle::Members a{0, 9};
        std::uint64_t g = 9;
        for (std::uint64_t i = 1; i < 9; ++i) {
            if (mask >> (i - 1) & 1) {
                a.insert(i);
                g = std::gcd(g, i);
            }
        }
        if (g != 1) continue;
        IntSet s;
        for (auto x : a) s.insert(x);
        const auto check = flGrowthCheck(s, 4);
        for (const auto& r : check.records) EXPECT_EQ(r.size, oracle::intHFold(a, r.h).size());
    }
}

TEST(CaseTwoBounds, Examples) {
    const auto b9 = caseTwoBounds(9, 3, 1);
    EXPECT_EQ(b9.lower, 2u);
    EXPECT_EQ(b9.upper, 4u);
    EXPECT_EQ(b9.actual, OrderValue::finite(4));
    EXPECT_TRUE(b9.sandwichHolds);

    const auto b20 = caseTwoBounds(20, 4, 1);
    EXPECT_EQ(b20.lower, 4u);
    EXPECT_EQ(b20.upper, 7u);
    EXPECT_EQ(b20.actual, OrderValue::finite(7));

    const auto b6 = caseTwoBounds(6, 3, 2);
    EXPECT_EQ(b6.lower, 2u);
    EXPECT_EQ(b6.upper, 3u);  // (6/3 - 1) + (3 - 1)
    EXPECT_EQ(b6.actual, order(ZnSet(6, {0, 2, 3})));

    EXPECT_THROW(caseTwoBounds(9, 1, 2), UsageError);
    EXPECT_THROW(caseTwoBounds(9, 4, 1), UsageError);
    EXPECT_THROW(caseTwoBounds(9, 3, 6), UsageError);
    EXPECT_THROW(caseTwoBounds(9, 3, 3), UsageError);
    EXPECT_THROW(caseTwoBounds(9, 3, 9), UsageError);
}

TEST(CaseTwoBounds, SandwichOnUnitSubfamily) {
    // With b = 1 the sandwich holds throughout; for general b it does not
    // (see the pinned counterexample below).
    for (std::uint64_t n = 4; n <= 100; ++n) {
        for (auto a : divisors(n)) {
            if (a < 2 || a == n) continue;
            EXPECT_TRUE(caseTwoBounds(n, a, 1).sandwichHolds) << n << ' ' << a;
        }
    }
}

TEST(CaseTwoBounds, PinnedCounterexample) {
    const auto b = caseTwoBounds(14, 2, 3);
    EXPECT_EQ(b.lower, 6u);
    EXPECT_EQ(b.actual, OrderValue::finite(5));
    EXPECT_FALSE(b.sandwichHolds);
}

TEST(Pigeonhole, Examples) {
    const auto w26 = pigeonholeWitness(100, 4, 26);
    EXPECT_EQ(w26.c, 3u);
    EXPECT_EQ(w26.r.value, -22);
    EXPECT_EQ(w26.s, 22u);
    const auto w34 = pigeonholeWitness(100, 4, 34);
    EXPECT_EQ(w34.c, 3u);
    EXPECT_EQ(w34.r.value, 2);
    EXPECT_EQ(w34.s, 2u);
    const auto w3 = pigeonholeWitness(10, 2, 3);
    EXPECT_EQ(w3.c, 1u);
    EXPECT_EQ(w3.s, 3u);
    EXPECT_THROW(pigeonholeWitness(10, 1, 3), UsageError);
    EXPECT_THROW(pigeonholeWitness(10, 2, 10), UsageError);
}

TEST(Pigeonhole, WitnessIsSmallestAndBounded) {
    for (std::uint64_t n = 2; n <= 150; ++n) {
        for (std::uint64_t k = 2; k <= 8; ++k) {
            for (std::uint64_t t = 1; t < n; ++t) {
                const auto w = pigeonholeWitness(n, k, t);
                ASSERT_LE(w.s * k, n);
                for (std::uint64_t c = 1; c < w.c; ++c) {
                    const auto r = numericallyLeastResidue(static_cast<std::int64_t>(c * t % n), n).value;
                    ASSERT_GT(static_cast<std::uint64_t>(std::abs(r)) * k, n);
                }
            }
        }
    }
}

TEST(OrderUpperViaS, Examples) {
    const auto u34 = orderUpperViaS(pigeonholeWitness(100, 4, 34));
    EXPECT_EQ(u34.bound, std::optional<Rational>(Rational(152)));
    EXPECT_TRUE(u34.holds);
    const auto u26 = orderUpperViaS(pigeonholeWitness(100, 4, 26));
    EXPECT_EQ(u26.bound, std::optional<Rational>(Rational(392, 11)));  // 22 + 300/22
    EXPECT_EQ(u26.actual, order(ZnSet(100, {0, 1, 26})));
    // c = 2 gives 2 * 6 = 0 mod 12, so s = 0.
    const auto u0 = orderUpperViaS(pigeonholeWitness(12, 3, 6));
    EXPECT_EQ(u0.bound, std::nullopt);
    EXPECT_TRUE(u0.holds);
}

TEST(RepDecompose, Examples) {
    const auto r34 = repDecompose(100, 4, 34, 3);
    EXPECT_EQ(r34.d, 1);
    EXPECT_EQ(r34.e, 2);
    EXPECT_TRUE(r34.applicable);
    EXPECT_FALSE(repDecompose(100, 4, 26, 3).applicable);
    const auto r1 = repDecompose(100, 4, 3, 1);
    EXPECT_EQ(r1.d, 0);
    EXPECT_EQ(r1.e, 3);
    EXPECT_TRUE(r1.applicable);
}

TEST(RepDecompose, Reconstructs) {
    for (std::uint64_t n = 5; n <= 120; ++n) {
        for (std::uint64_t k = 2; k <= 5; ++k) {
            for (std::uint64_t t = 1; t < n; ++t) {
                const auto w = pigeonholeWitness(n, k, t);
                const auto r = repDecompose(n, k, t, w.c);
                if (!r.applicable) continue;
                EXPECT_EQ(static_cast<std::int64_t>(r.c * t), r.d * static_cast<std::int64_t>(n) + r.e) << n << ' ' << k << ' ' << t;
            }
        }
    }
}

TEST(LowerBoundFamily, Examples) {
    const auto k3 = lowerBoundFamily(3, 20, 20);
    ASSERT_EQ(k3.size(), 1u);
    EXPECT_EQ(k3[0].rho, 7u);
    EXPECT_EQ(k3[0].nearestL, 3u);
    EXPECT_EQ(k3[0].minGap, Rational(1, 3));
    EXPECT_TRUE(k3[0].matchesDerivedForm);
    EXPECT_FALSE(k3[0].matchesClaimedForm);

    const auto k4 = lowerBoundFamily(4, 99, 99);
    ASSERT_EQ(k4.size(), 1u);
    EXPECT_EQ(k4[0].rho, 26u);
    EXPECT_EQ(k4[0].nearestL, 4u);
    EXPECT_EQ(k4[0].minGap, Rational(5, 4));

    const auto k2 = lowerBoundFamily(2, 9, 9);
    ASSERT_EQ(k2.size(), 1u);
    EXPECT_EQ(k2[0].rho, 4u);
    EXPECT_EQ(k2[0].minGap, Rational(1, 2));

    EXPECT_EQ(lowerBoundFamily(4, 19, 19)[0].nearestL, 3u);
}

TEST(LowerBoundFamily, ThreadCountDoesNotChangeRecords) {
    EXPECT_EQ(lowerBoundFamily(5, 6, 300, 1), lowerBoundFamily(5, 6, 300, 4));
}

TEST(LowerBoundFamily, SummaryFindsConstantTail) {
    const auto records = lowerBoundFamily(3, 4, 200);
    const auto s = summarizeFamily(3, records);
    ASSERT_TRUE(s.tailGap);
    EXPECT_EQ(*s.tailGap, Rational(1, 3));
    EXPECT_TRUE(s.matchesDerivedForm);
    EXPECT_FALSE(s.matchesClaimedForm);
    EXPECT_EQ(summarizeFamily(3, {}).tailGap, std::nullopt);
}
