#include "cycorder/spectrum.hpp"

#include <algorithm>
#include <map>

#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"

namespace cycorder {

std::vector<GapRun> gapRuns(std::uint64_t n, const std::vector<std::uint64_t>& achievedOrders) {
    std::vector<GapRun> runs;
    std::optional<std::uint64_t> open;
    for (std::uint64_t h = 1; h + 1 <= n; ++h) {
        const bool hit = std::binary_search(achievedOrders.begin(), achievedOrders.end(), h);
        if (!hit && !open) open = h;
        if (hit && open) {
            runs.push_back({*open, h - 1});
            open.reset();
        }
    }
    if (open) runs.push_back({*open, n - 1});
    return runs;
}

SpectrumReport summarizeSpectrum(std::uint64_t n, const EnumerationMode& mode, const std::vector<BasisRecord>& bases) {
    SpectrumReport report;
    report.modulus = n;
    report.mode = mode;
    report.orbitCount = bases.size();
    std::map<std::uint64_t, const ZnSet*> best;
    for (const BasisRecord& record : bases) {
        auto [it, inserted] = best.try_emplace(record.order, &record.set);
        if (!inserted && canonicalLess(record.set, *it->second)) it->second = &record.set;
    }
    for (const auto& [rho, set] : best) {
        report.achievedOrders.push_back(rho);
        report.witnesses.emplace_back(rho, *set);
    }
    report.gaps = gapRuns(n, report.achievedOrders);
    return report;
}

SpectrumReport spectrum(std::uint64_t n, const EnumerationMode& mode, const EnumerationOptions& options) {
    EnumerationOptions unpruned = options;
    unpruned.orderFloor.reset();
    return summarizeSpectrum(n, mode, enumerateBases(n, mode, unpruned));
}

ConjectureReport verifyConjecture(std::uint64_t n, std::uint64_t k, const EnumerationMode& mode,
                                  const EnumerationOptions& options) {
    if (k == 0) throw UsageError("k must be at least 1");
    EnumerationOptions pruned = options;
    // rho > n/k exactly when rho > floor(n/k).
    pruned.orderFloor = n / k;

    ConjectureReport report;
    report.modulus = n;
    report.k = k;
    report.mode = mode;
    report.completenessCaveat = mode.kind == EnumerationMode::Kind::CardCapped;
    report.exceeders = enumerateBases(n, mode, pruned);
    for (const BasisRecord& record : report.exceeders) {
        const Rational gap = nearestHarmonic(record.order, n, k).gap;
        if (!report.argmaxWitness || gap > report.maxMinGap) {
            report.maxMinGap = gap;
            report.argmaxWitness = record;
        }
    }
    return report;
}

ConjectureSweep conjectureSweep(std::uint64_t k, std::uint64_t nFirst, std::uint64_t nLast,
                                const EnumerationMode& mode, const EnumerationOptions& options) {
    if (nFirst == 0 || nFirst > nLast) throw UsageError("n-range must satisfy 1 <= first <= last");
    ConjectureSweep sweep;
    sweep.k = k;
    for (std::uint64_t n = nFirst; n <= nLast; ++n) {
        sweep.reports.push_back(verifyConjecture(n, k, mode, options));
        const Rational current = sweep.reports.back().maxMinGap;
        sweep.runningMax.push_back(sweep.runningMax.empty() ? current : std::max(sweep.runningMax.back(), current));
    }
    return sweep;
}

}  // namespace cycorder
