#include <gtest/gtest.h>

#include <random>

#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"
#include "cycorder/structure.hpp"
#include "cycorder/sumset.hpp"
#include "df_construction.hpp"
#include "oracles.hpp"

using namespace cycorder;

namespace {

ApCover bruteCover(std::uint64_t q, const oracle::Members& s, bool coprimeOnly) {
    for (std::uint64_t l = 1; l <= q; ++l) {
        for (std::uint64_t d = 1; d <= std::max<std::uint64_t>(q - 1, 1); ++d) {
            if (coprimeOnly && std::gcd(d, q) != 1) continue;
            for (std::uint64_t start = 0; start < q; ++start) {
                oracle::Members ap;
                for (std::uint64_t i = 0; i < l; ++i) ap.insert((start + i * d) % q);
                if (std::includes(ap.begin(), ap.end(), s.begin(), s.end())) return {start, d, l};
            }
        }
    }
    return {0, 0, 0};
}

}  // namespace

TEST(Project, Examples) {
    const ZnSet a(20, {0, 4, 8, 12, 16, 1});
    EXPECT_EQ(project(a, 4), ZnSet(4, {0, 1}));
    EXPECT_EQ(project(a, 20), a);
    EXPECT_EQ(project(ZnSet::full(20), 5), ZnSet::full(5));
    EXPECT_THROW(project(a, 3), UsageError);
}

TEST(Project, IsASumsetHomomorphism) {
    std::mt19937_64 rng(31);
    for (std::uint64_t n = 2; n <= 60; ++n) {
        const ZnSet x = oracle::toZn(n, oracle::randomSubset(rng, n, 0.15));
        const ZnSet y = oracle::toZn(n, oracle::randomSubset(rng, n, 0.15));
        for (auto q : divisors(n)) EXPECT_EQ(project(addSets(x, y), q), addSets(project(x, q), project(y, q)));
    }
}

TEST(CosetProfile, Examples) {
    const auto p = cosetProfile(ZnSet(20, {0, 4, 8, 12, 16, 1}), 5);
    EXPECT_EQ(p.cosetsMet, 2u);
    EXPECT_EQ(p.maxCosetFraction, Rational(1));
    const auto full = cosetProfile(ZnSet::full(12), 4);
    EXPECT_EQ(full.cosetsMet, 3u);
    EXPECT_EQ(full.maxCosetFraction, Rational(1));
    const auto zero = cosetProfile(ZnSet(12, {0}), 6);
    EXPECT_EQ(zero.cosetsMet, 1u);
    EXPECT_EQ(zero.maxCosetFraction, Rational(1, 6));
    EXPECT_THROW(cosetProfile(ZnSet(12, {0}), 5), UsageError);
}

TEST(ApCover, Examples) {
    EXPECT_EQ(apCover(ZnSet(4, {0, 1})), (ApCover{0, 1, 2}));
    EXPECT_EQ(apCover(ZnSet(7, {0, 2, 4})), (ApCover{0, 2, 3}));
    EXPECT_EQ(apCover(ZnSet::full(9)), (ApCover{0, 1, 9}));
    EXPECT_THROW(apCover(ZnSet(5)), UsageError);
}

TEST(ApCover, MatchesBruteForce) {
    for (std::uint64_t q = 1; q <= 12; ++q) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
            const auto s = oracle::fromMask(q, mask);
            for (bool coprime : {false, true}) {
                ASSERT_EQ(apCover(oracle::toZn(q, s), coprime), bruteCover(q, s, coprime)) << q << ' ' << mask << ' ' << coprime;
            }
        }
    }
}

TEST(DfAnalyze, Examples) {
    const auto a = dfAnalyze(ZnSet(20, {0, 4, 8, 12, 16, 1}));
    EXPECT_EQ(a.doubledSize, 11u);
    EXPECT_TRUE(a.smallDoubling);
    const StructureReport* best = a.bestReport();
    ASSERT_NE(best, nullptr);
    EXPECT_EQ(best->subgroupSize, 5u);
    EXPECT_EQ(best->cosetsMet, 2u);
    EXPECT_EQ(best->cover.length, 2u);
    EXPECT_EQ(best->caseTag, StructureCase::CaseI);
    EXPECT_TRUE(best->inequalityHolds);
    EXPECT_TRUE(best->twoThirdsHolds);

    const auto h = dfAnalyze(ZnSet(20, {0, 4, 8, 12, 16}));
    const auto m5 = std::find_if(h.reports.begin(), h.reports.end(), [](const auto& r) { return r.subgroupSize == 5; });
    ASSERT_NE(m5, h.reports.end());
    EXPECT_EQ(m5->cosetsMet, 1u);
    EXPECT_EQ(m5->caseTag, StructureCase::CaseIII);
    EXPECT_TRUE(m5->caseConditionHolds);

    const auto pair = dfAnalyze(ZnSet(12, {0, 1}));
    ASSERT_EQ(pair.reports.front().subgroupSize, 1u);
    EXPECT_EQ(pair.reports.front().cosetsMet, 2u);
    EXPECT_EQ(pair.reports.front().cover.length, 2u);
    EXPECT_TRUE(pair.reports.front().inequalityHolds);
}

TEST(DfAnalyze, ReportsCoverEveryProperDivisor) {
    const auto a = dfAnalyze(ZnSet(36, {0, 5, 7}));
    std::vector<std::uint64_t> ms;
    for (const auto& r : a.reports) ms.push_back(r.subgroupSize);
    auto expected = divisors(36);
    expected.pop_back();
    EXPECT_EQ(ms, expected);
}

TEST(DfAnalyze, RecoversConstructedStructure) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = oracle::randomHd(rng);
        const auto a = dfAnalyze(inst.set);
        ASSERT_TRUE(a.smallDoubling);
        const StructureReport* best = a.bestReport();
        ASSERT_NE(best, nullptr);
        EXPECT_TRUE(best->caseConditionHolds);
        EXPECT_EQ(best->subgroupSize, inst.m) << formatMembers(inst.set) << " n=" << inst.n;
        EXPECT_LE(best->cover.length, inst.l0);
    }
}

TEST(DoublingSearch, Examples) {
    EXPECT_EQ(doublingSearch(ZnSet(100, {0, 1}), kDefaultSigma, 10), std::optional<std::uint64_t>(0));
    EXPECT_EQ(doublingSearch(ZnSet::full(10), kDefaultSigma, 10), std::optional<std::uint64_t>(0));
    EXPECT_THROW(doublingSearch(ZnSet(10, {1, 2}), kDefaultSigma, 3), UsageError);

    // Stepwise oracle: sizes of 2^i A by plain repeated addition.
    const oracle::Members a{0, 1, 2, 3, 50};
    std::vector<std::size_t> sizes;
    oracle::Members level = a;
    std::optional<std::uint64_t> expected;
    for (std::uint64_t j = 0; j <= 6; ++j) {
        const auto next = oracle::sumset(100, level, level);
        sizes.push_back(level.size());
        if (!expected && Rational(static_cast<std::int64_t>(next.size())) < kDefaultSigma * static_cast<std::int64_t>(level.size())) {
            expected = j;
        }
        level = next;
    }
    EXPECT_EQ(sizes[0], 5u);
    EXPECT_EQ(sizes[1], 11u);
    EXPECT_EQ(sizes[2], 23u);
    EXPECT_EQ(doublingSearch(oracle::toZn(100, a), kDefaultSigma, 6), expected);
    EXPECT_EQ(expected, std::optional<std::uint64_t>(3));
    EXPECT_EQ(doublingSearch(oracle::toZn(100, a), kDefaultSigma, 2), std::nullopt);
}

TEST(ProjectionOrderBounds, Examples) {
    const auto b4 = projectionOrderBounds(ZnSet(4, {0, 1}), 2);
    EXPECT_EQ(b4.lower, OrderValue::finite(1));
    EXPECT_EQ(b4.actual, OrderValue::finite(3));
    EXPECT_EQ(b4.upperCandidate, OrderValue::finite(3));
    EXPECT_EQ(b4.upperHolds, std::optional<bool>(true));

    const auto b9 = projectionOrderBounds(ZnSet(9, {0, 1}), 3);
    EXPECT_EQ(b9.lower, OrderValue::finite(2));
    EXPECT_EQ(b9.actual, OrderValue::finite(8));
    EXPECT_EQ(b9.upperCandidate, OrderValue::finite(5));
    EXPECT_EQ(b9.upperHolds, std::optional<bool>(false));
    EXPECT_TRUE(b9.lowerHolds);

    const auto full = projectionOrderBounds(ZnSet::full(12), 4);
    EXPECT_EQ(full.lower, OrderValue::finite(1));
    EXPECT_EQ(full.actual, OrderValue::finite(1));
    EXPECT_EQ(full.upperHolds, std::optional<bool>(true));

    const auto none = projectionOrderBounds(ZnSet(12, {0, 2}), 4);
    EXPECT_EQ(none.actual, OrderValue::infinite());
    EXPECT_FALSE(none.upperHolds);
}

TEST(ProjectionOrderBounds, LowerBoundHoldsExhaustively) {
    for (std::uint64_t n = 2; n <= 11; ++n) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            const ZnSet a = oracle::toZn(n, oracle::fromMask(n, mask));
            if (!isBasis(a)) continue;
            for (auto q : divisors(n)) ASSERT_TRUE(projectionOrderBounds(a, q).lowerHolds) << n << ' ' << mask << ' ' << q;
        }
    }
}

TEST(PipelineTrace, Examples) {
    const auto t = pipelineTrace(ZnSet(20, {0, 4, 8, 12, 16, 1}), 3);
    EXPECT_EQ(t.j, std::optional<std::uint64_t>(0));
    EXPECT_EQ(t.h, 1u);
    ASSERT_TRUE(t.doubled);
    EXPECT_EQ(*t.doubled, t.input);
    EXPECT_EQ(t.m, 5u);
    EXPECT_EQ(t.s, 2u);
    EXPECT_EQ(t.l, 2u);
    EXPECT_EQ(t.branch, PipelineBranch::Case2);

    const auto pair = pipelineTrace(ZnSet(10, {0, 1}), 2);
    EXPECT_EQ(pair.j, std::optional<std::uint64_t>(0));
    EXPECT_EQ(pair.doublingSizes, (std::vector<std::uint64_t>{2, 3}));
    EXPECT_NE(pair.branch, PipelineBranch::Unavailable);

    const auto full = pipelineTrace(ZnSet::full(6), 2);
    EXPECT_EQ(full.order, OrderValue::finite(1));
    EXPECT_EQ(full.branch, PipelineBranch::Unavailable);

    EXPECT_THROW(pipelineTrace(ZnSet(6, {0, 2}), 2), UsageError);
    EXPECT_THROW(pipelineTrace(ZnSet(7, {0, 1}), 1), UsageError);
}

TEST(PipelineTrace, MeasuredQuantitiesAreConsistent) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint64_t n = 6 + rng() % 60;
        ZnSet a = oracle::toZn(n, oracle::randomSubset(rng, n, 0.1));
        a.insert(0);
        a.insert(1);
        const auto t = pipelineTrace(a, 3);
        EXPECT_EQ(t.order, order(a));
        if (!t.j) continue;
        EXPECT_EQ(t.h, std::uint64_t{1} << *t.j);
        EXPECT_EQ(*t.doubled, hFold(t.input, t.h));
        if (t.branch == PipelineBranch::Unavailable) continue;
        EXPECT_EQ(t.m * t.q, n);
        EXPECT_GE(*t.projectionLowerSlack, 0);
        EXPECT_EQ(t.branch, t.s == 3 ? PipelineBranch::Case1 : PipelineBranch::Case2);
    }
}
