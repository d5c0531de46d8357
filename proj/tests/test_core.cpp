#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"
#include "cycorder/rational.hpp"
#include "cycorder/zn_set.hpp"
#include "oracles.hpp"

using namespace cycorder;

TEST(ZnSet, ConstructionAndMembership) {
    ZnSet s(9, {3, 0, 1, 3});
    EXPECT_EQ(s.size(), 3u);
    EXPECT_TRUE(s.contains(0));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.min(), 0u);
    EXPECT_EQ(s.members(), (std::vector<Residue>{0, 1, 3}));
    EXPECT_THROW(ZnSet(0), UsageError);
    EXPECT_THROW(ZnSet(kMaxModulus + 1), UsageError);
    EXPECT_THROW(ZnSet(5, {5}), UsageError);
    EXPECT_EQ(ZnSet::full(70).size(), 70u);
}

TEST(ZnSet, RotationMatchesPointwiseShift) {
    std::mt19937_64 rng(7);
    for (std::uint64_t n : {1u, 2u, 63u, 64u, 65u, 127u, 200u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = oracle::randomSubset(rng, n, 0.3);
            const ZnSet s = oracle::toZn(n, m);
            const std::uint64_t shift = rng() % n;
            EXPECT_EQ(oracle::members(s.rotated(shift)), oracle::affineImage(n, m, 1, shift)) << n << ' ' << shift;
        }
    }
}

TEST(ZnSet, UniteRotatedRejectsModulusMismatch) {
    ZnSet a(5), b(6);
    EXPECT_THROW(a.uniteRotated(b, 1), UsageError);
}

TEST(ZnSet, CanonicalCompareIsLexicographicOnEqualSizes) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint64_t n = 2 + rng() % 40;
        auto a = oracle::randomSubset(rng, n, 0.4);
        auto b = oracle::randomSubset(rng, n, 0.4);
        if (a.size() != b.size()) continue;
        const std::vector<std::uint64_t> va(a.begin(), a.end()), vb(b.begin(), b.end());
        EXPECT_EQ(canonicalLess(oracle::toZn(n, a), oracle::toZn(n, b)), va < vb);
    }
    EXPECT_TRUE(canonicalLess(ZnSet(7, {0, 1}), ZnSet(7, {0, 2})));
    EXPECT_TRUE(canonicalLess(ZnSet(7, {0, 1, 2}), ZnSet(7, {0, 1})));
}

TEST(ZnSet, ParseAndFormat) {
    EXPECT_EQ(parseZnSet(9, "0,1,3"), ZnSet(9, {0, 1, 3}));
    EXPECT_EQ(parseZnSet(9, " 3, 1 ,0"), ZnSet(9, {0, 1, 3}));
    EXPECT_TRUE(parseZnSet(9, "").empty());
    EXPECT_THROW(parseZnSet(9, "0,,1"), UsageError);
    EXPECT_THROW(parseZnSet(9, "0,x"), UsageError);
    EXPECT_THROW(parseZnSet(9, "0,9"), UsageError);
    EXPECT_THROW(parseZnSet(9, "1,1"), UsageError);
    EXPECT_THROW(parseZnSet(9, "-1"), UsageError);
    EXPECT_EQ(formatMembers(ZnSet(9, {0, 1, 3})), "0,1,3");
    EXPECT_EQ(formatMembers(ZnSet(9, {0, 1, 3}), ';'), "0;1;3");
}

TEST(IntSet, SumsetMatchesOracle) {
    const IntSet a{0, 1, 3};
    EXPECT_EQ(a.plus(a).members(), (std::vector<std::uint64_t>{0, 1, 2, 3, 4, 6}));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = oracle::randomSubset(rng, 150, 0.1);
        IntSet s;
        for (auto x : m) s.insert(x);
        const auto sum = oracle::intHFold(m, 2);
        EXPECT_EQ(s.plus(s).members(), std::vector<std::uint64_t>(sum.begin(), sum.end()));
    }
    EXPECT_EQ(parseIntSet("0,2,3,7"), (IntSet{0, 2, 3, 7}));
    EXPECT_EQ((IntSet{0, 70}.max()), 70u);
}

TEST(OrderValue, OrderingAndText) {
    EXPECT_LT(OrderValue::finite(3), OrderValue::finite(4));
    EXPECT_LT(OrderValue::finite(1000), OrderValue::infinite());
    EXPECT_EQ(OrderValue::infinite().toString(), "inf");
    EXPECT_EQ(OrderValue::finite(4).toString(), "4");
    EXPECT_THROW(OrderValue::finite(0), UsageError);
}

TEST(NumberTheory, NumericallyLeastResidue) {
    EXPECT_EQ(numericallyLeastResidue(7, 10).value, -3);
    EXPECT_EQ(numericallyLeastResidue(5, 10).value, 5);
    EXPECT_EQ(numericallyLeastResidue(22, 9).value, 4);
    EXPECT_EQ(numericallyLeastResidue(-5, 10).value, 5);
    for (std::int64_t n = 1; n <= 30; ++n) {
        for (std::int64_t x = -70; x <= 70; ++x) {
            const auto r = numericallyLeastResidue(x, n).value;
            EXPECT_EQ(((x - r) % n + n) % n, 0);
            EXPECT_GT(2 * r, -n);
            EXPECT_LE(2 * r, n);
        }
    }
}

TEST(NumberTheory, Divisors) {
    EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(divisors(7), (std::vector<std::uint64_t>{1, 7}));
    EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::vector<std::uint64_t> naive;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) naive.push_back(d);
        EXPECT_EQ(divisors(n), naive);
    }
}

TEST(NumberTheory, UnitsPhiInverse) {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        EXPECT_EQ(units(n), oracle::unitsOf(n));
        EXPECT_EQ(eulerPhi(n), n == 1 ? 1 : oracle::unitsOf(n).size());
        if (n == 1) continue;
        for (auto u : units(n)) EXPECT_EQ(u * inverseMod(u, n) % n, 1u);
    }
}

TEST(NumberTheory, IsBasis) {
    EXPECT_FALSE(isBasis(ZnSet(6, {0, 2})));
    EXPECT_FALSE(isBasis(ZnSet(5, {1})));
    EXPECT_TRUE(isBasis(ZnSet(6, {0, 2, 3})));
    EXPECT_FALSE(isBasis(ZnSet(6)));
    EXPECT_TRUE(isBasis(ZnSet(1, {0})));
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            const auto m = oracle::fromMask(n, mask);
            EXPECT_EQ(isBasis(oracle::toZn(n, m)), oracle::order(n, m).has_value()) << n << ' ' << mask;
        }
    }
}

TEST(NumberTheory, NearestHarmonic) {
    const auto h = nearestHarmonic(7, 20, 3);
    EXPECT_EQ(h.l, 3u);
    EXPECT_EQ(h.gap, Rational(1, 3));
    const auto tie = nearestHarmonic(6, 12, 4);  // 12/2 = 6 exactly
    EXPECT_EQ(tie.l, 2u);
    EXPECT_EQ(tie.gap, Rational(0));
    EXPECT_EQ(nearestHarmonic(6, 19, 4).l, 3u);
}

TEST(Rational, FractionText) {
    EXPECT_EQ(toFractionString(Rational(5, 4)), "5/4");
    EXPECT_EQ(toFractionString(Rational(2)), "2/1");
    EXPECT_EQ(toFractionString(Rational(-1, 3)), "-1/3");
    EXPECT_EQ(parseFraction("51/25"), Rational(51, 25));
    EXPECT_EQ(parseFraction("3"), Rational(3));
    EXPECT_EQ(parseFraction("-2/4"), Rational(-1, 2));
    EXPECT_THROW(parseFraction("1/0"), UsageError);
    EXPECT_THROW(parseFraction("x"), UsageError);
}
