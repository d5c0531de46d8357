#include "cycorder/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"
#include "cycorder/sumset.hpp"

namespace cycorder {

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

Rational whole(std::uint64_t x) { return Rational(static_cast<std::int64_t>(x)); }

void requireDivisor(std::uint64_t n, std::uint64_t d, const char* what) {
    if (d == 0 || n % d != 0) {
        throw UsageError(std::string(what) + " " + std::to_string(d) + " does not divide " + std::to_string(n));
    }
}

// |2^i A| for i = 0.. until the first strict drop below sigma or i = jMax + 1.
struct DoublingRun {
    std::vector<ZnSet> levels;  // levels[i] = 2^i A
    std::optional<std::uint64_t> j;
};

DoublingRun runDoubling(const ZnSet& set, const Rational& sigma, std::uint64_t jMax) {
    if (!set.contains(0)) throw UsageError("doubling search needs 0 in the set; translate first");
    DoublingRun run;
    run.levels.push_back(set);
    for (std::uint64_t j = 0; j <= jMax; ++j) {
        run.levels.push_back(addSets(run.levels.back(), run.levels.back()));
        const std::uint64_t before = run.levels[j].size();
        const std::uint64_t after = run.levels[j + 1].size();
        if (whole(after) < sigma * whole(before)) {
            run.j = j;
            break;
        }
    }
    return run;
}

}  // namespace

ZnSet project(const ZnSet& set, std::uint64_t q) {
    requireDivisor(set.modulus(), q, "quotient size");
    ZnSet out(q);
    for (Residue a : set.members()) out.insert(a % q);
    return out;
}

CosetProfile cosetProfile(const ZnSet& set, std::uint64_t subgroupSize) {
    requireDivisor(set.modulus(), subgroupSize, "subgroup size");
    const std::uint64_t q = set.modulus() / subgroupSize;
    std::vector<std::uint64_t> counts(q, 0);
    for (Residue a : set.members()) ++counts[a % q];
    const auto met = static_cast<std::uint64_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
    return {met, ratio(*std::max_element(counts.begin(), counts.end()), subgroupSize)};
}

ApCover apCover(const ZnSet& set, bool coprimeOnly) {
    if (set.empty()) throw UsageError("AP cover of an empty set");
    const std::uint64_t q = set.modulus();
    const auto members = set.members();
    if (members.size() == 1) return {members[0], 1, 1};

    std::optional<ApCover> best;
    std::vector<std::uint64_t> positions(members.size());
    for (std::uint64_t d = 1; d < q; ++d) {
        const std::uint64_t g = std::gcd(d, q);
        if (coprimeOnly && g != 1) continue;
        // All members must share one coset of <d>.
        if (std::any_of(members.begin(), members.end(), [&](Residue x) { return x % g != members[0] % g; })) continue;
        const std::uint64_t period = q / g;
        const std::uint64_t step = inverseMod((d / g) % period, period);
        // Position of x along members[0], members[0] + d, ...
        for (std::size_t i = 0; i < members.size(); ++i) {
            positions[i] = ((members[i] + q - members[0]) / g % period) * step % period;
        }
        std::vector<std::pair<std::uint64_t, Residue>> order(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) order[i] = {positions[i], members[i]};
        std::sort(order.begin(), order.end());

        // The shortest covering arc skips the largest cyclic gap between consecutive positions.
        std::uint64_t widest = 0;
        Residue start = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const std::size_t next = (i + 1) % order.size();
            const std::uint64_t gap = next == 0 ? period - order[i].first + order[0].first : order[next].first - order[i].first;
            const Residue after = order[next].second;
            if (gap > widest || (gap == widest && after < start)) {
                widest = gap;
                start = after;
            }
        }
        const std::uint64_t length = period - widest + 1;
        if (!best || length < best->length) best = ApCover{start, d, length};
    }
    // d = 1 always qualifies once |S| >= 2 (so q >= 2).
    return *best;
}

StructureAnalysis dfAnalyze(const ZnSet& set, const StructureOptions& options) {
    if (set.empty()) throw UsageError("structure analysis of an empty set");
    if (options.sigma <= 1) throw UsageError("doubling threshold must exceed 1");
    StructureAnalysis analysis;
    const std::uint64_t n = set.modulus();
    analysis.modulus = n;
    analysis.setSize = set.size();
    analysis.doubledSize = addSets(set, set).size();
    analysis.doublingRatio = ratio(analysis.doubledSize, analysis.setSize);
    analysis.smallDoubling = whole(analysis.doubledSize) < options.sigma * whole(analysis.setSize);
    analysis.sparse = whole(analysis.setSize) < options.density * whole(n);

    const auto growth = static_cast<std::int64_t>(analysis.doubledSize - analysis.setSize);
    for (std::uint64_t m : divisors(n)) {
        if (m == n) continue;
        StructureReport report;
        report.subgroupSize = m;
        report.quotientSize = n / m;
        const CosetProfile profile = cosetProfile(set, m);
        report.cosetsMet = profile.cosetsMet;
        report.maxCosetFraction = profile.maxCosetFraction;
        report.cover = apCover(project(set, report.quotientSize), options.coprimeDifferences);
        report.caseTag = report.cosetsMet == 1   ? StructureCase::CaseIII
                         : report.cosetsMet == 3 ? StructureCase::CaseII
                                                 : StructureCase::CaseI;
        const std::uint64_t l = report.caseTag == StructureCase::CaseII ? std::min<std::uint64_t>(report.cover.length, 4)
                                                                        : report.cover.length;
        report.inequalityHolds = static_cast<std::int64_t>((l - 1) * m) <= growth;
        report.caseConditionHolds = report.caseTag == StructureCase::CaseIII
                                        ? whole(analysis.setSize) > options.density * whole(m)
                                        : report.inequalityHolds;
        report.twoThirdsHolds = report.maxCosetFraction > Rational(2, 3);
        analysis.reports.push_back(report);
    }

    for (std::size_t i = 0; i < analysis.reports.size(); ++i) {
        const StructureReport& r = analysis.reports[i];
        if (!r.caseConditionHolds) continue;
        if (!analysis.best) {
            analysis.best = i;
            continue;
        }
        const StructureReport& b = analysis.reports[*analysis.best];
        // Reports are in ascending m, so a tie keeps the earlier one.
        if (r.cover.length * r.subgroupSize < b.cover.length * b.subgroupSize) analysis.best = i;
    }
    return analysis;
}

std::optional<std::uint64_t> doublingSearch(const ZnSet& set, const Rational& sigma, std::uint64_t jMax) {
    return runDoubling(set, sigma, jMax).j;
}

ProjectionOrderBounds projectionOrderBounds(const ZnSet& set, std::uint64_t q) {
    requireDivisor(set.modulus(), q, "quotient size");
    ProjectionOrderBounds bounds;
    bounds.lower = order(project(set, q));
    bounds.actual = order(set);
    if (bounds.lower.isFinite()) {
        bounds.upperCandidate = OrderValue::finite(bounds.lower.value() + set.modulus() / q);
    }
    bounds.lowerHolds = bounds.lower <= bounds.actual;
    if (bounds.actual.isFinite()) bounds.upperHolds = bounds.actual <= bounds.upperCandidate;
    return bounds;
}

PipelineTrace pipelineTrace(const ZnSet& set, std::uint64_t k, const StructureOptions& options,
                            std::optional<std::uint64_t> jMax) {
    if (k < 2) throw UsageError("pipeline trace needs k >= 2");
    if (!isBasis(set)) throw UsageError("pipeline trace needs a basis");

    PipelineTrace trace;
    trace.input = translatedToZero(set);
    trace.k = k;
    trace.sigma = options.sigma;
    trace.order = order(trace.input);
    const std::uint64_t n = set.modulus();

    const std::uint64_t limit = jMax.value_or(static_cast<std::uint64_t>(std::bit_width(n)) + 1);
    DoublingRun run = runDoubling(trace.input, options.sigma, limit);
    for (const ZnSet& level : run.levels) trace.doublingSizes.push_back(level.size());
    trace.j = run.j;
    if (!run.j) return trace;

    trace.h = std::uint64_t{1} << *run.j;
    trace.doubled = run.levels[*run.j];
    const ZnSet& doubled = *trace.doubled;
    const StructureAnalysis analysis = dfAnalyze(doubled, options);
    const StructureReport* best = analysis.bestReport();
    if (best == nullptr) return trace;

    trace.structure = *best;
    trace.m = best->subgroupSize;
    trace.q = best->quotientSize;
    trace.s = best->cosetsMet;
    trace.l = best->cover.length;
    trace.sPrime = project(trace.input, trace.q).size();
    trace.projectedOrderA = order(project(trace.input, trace.q));
    trace.projectedOrderB = order(project(doubled, trace.q));
    trace.branch = trace.s == 3 ? PipelineBranch::Case1 : PipelineBranch::Case2;

    const Rational rhoA = whole(trace.order.value());
    const Rational rhoPiA = whole(trace.projectedOrderA.value());
    const Rational rhoPiB = whole(trace.projectedOrderB.value());
    trace.subgroupBoundSlack = ratio(3 * doubled.size(), 2) - whole(trace.m);
    trace.projectionLowerSlack = rhoA - rhoPiA;
    trace.projectionUpperSlack = rhoPiA + whole(trace.m) - rhoA;
    trace.scaledOrderGap = absValue(rhoA - whole(trace.h) * rhoPiB);
    for (std::uint64_t lp = 1; lp <= k; ++lp) {
        const Rational gap = absValue(rhoPiB - ratio(n, trace.h * lp));
        if (!trace.multipleGap || gap < *trace.multipleGap) {
            trace.multipleGap = gap;
            trace.multipleArgmin = trace.h * lp;
        }
    }
    if (trace.l >= 2) trace.apLengthGap = absValue(rhoPiB - ratio(n, trace.l - 1));
    trace.growthHypothesisHolds =
        2 * static_cast<std::int64_t>(trace.s) - 3 >= static_cast<std::int64_t>(trace.l) - 1;
    return trace;
}

const char* toString(StructureCase c) {
    switch (c) {
        case StructureCase::CaseI: return "CaseI";
        case StructureCase::CaseII: return "CaseII";
        case StructureCase::CaseIII: return "CaseIII";
    }
    return "?";
}

const char* toString(PipelineBranch b) {
    switch (b) {
        case PipelineBranch::Case1: return "Case1";
        case PipelineBranch::Case2: return "Case2";
        case PipelineBranch::Unavailable: return "Unavailable";
    }
    return "?";
}

}  // namespace cycorder
