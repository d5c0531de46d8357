#include "cycorder/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"
#include "cycorder/sumset.hpp"

namespace cycorder {

namespace {

Rational whole(std::uint64_t x) { return Rational(static_cast<std::int64_t>(x)); }

}  // namespace

KlBoundBreakdown klBound(std::uint64_t n, std::uint64_t rho) {
    if (n < 2 || rho < 2 || rho + 1 > n) {
        throw UsageError("klBound needs n >= 2 and 2 <= rho <= n - 1 (got n = " + std::to_string(n) +
                         ", rho = " + std::to_string(rho) + ")");
    }
    KlBoundBreakdown out{n, rho, {}, 0};
    for (std::uint64_t d : divisors(n)) {
        if (d < rho + 1) continue;
        const std::uint64_t value = (n / d) * ((d - 2) / (rho - 1) + 1);
        out.terms.push_back({d, value});
        out.bound = std::max(out.bound, value);
    }
    return out;
}

bool GrowthCheck::violated() const {
    if (hypothesisFailed) return false;
    for (const GrowthRecord& r : records) {
        if (!r.holds) return true;
    }
    return false;
}

GrowthCheck flGrowthCheck(const IntSet& set, std::uint64_t hMax) {
    if (hMax == 0) throw UsageError("h-max must be at least 1");
    if (set.empty() || !set.contains(0)) throw UsageError("integer set is not normalized: 0 must be a member");
    std::uint64_t g = 0;
    for (std::uint64_t x : set.members()) g = std::gcd(g, x);
    if (g != 1) throw UsageError("integer set is not normalized: gcd of the members must be 1");

    GrowthCheck check;
    check.setSize = set.size();
    check.span = set.max();
    check.hypothesisFailed = 2 * check.setSize < check.span + 3;
    IntSet level = set;
    for (std::uint64_t h = 1; h <= hMax; ++h) {
        if (h > 1) level = level.plus(set);
        const std::uint64_t lower = check.setSize + (h - 1) * check.span;
        check.records.push_back({h, level.size(), lower, level.size() >= lower});
    }
    return check;
}

CaseTwoBounds caseTwoBounds(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
    if (a < 2 || a >= n || n % a != 0) throw UsageError("caseTwoBounds needs a >= 2 and a a proper divisor of n");
    if (b < 1 || b >= n || b == a) throw UsageError("caseTwoBounds needs b in [1, n-1] with b != a");
    if (std::gcd(a, b) != 1) throw UsageError("caseTwoBounds needs gcd(a, b) = 1");
    CaseTwoBounds out;
    out.lower = std::max(n / a - 1, a - 1);
    out.upper = (n / a - 1) + (a - 1);
    out.actual = order(ZnSet(n, {0, a, b}));
    out.sandwichHolds = out.actual.isFinite() && out.lower <= out.actual.value() && out.actual.value() <= out.upper;
    return out;
}

PigeonholeWitness pigeonholeWitness(std::uint64_t n, std::uint64_t k, std::uint64_t t) {
    if (k < 2) throw UsageError("pigeonhole witness needs k >= 2");
    if (t < 1 || t >= n) throw UsageError("pigeonhole witness needs 1 <= t < n");
    for (std::uint64_t c = 1; c < k; ++c) {
        const SignedResidue r = numericallyLeastResidue(static_cast<std::int64_t>(c * t), n);
        const auto s = static_cast<std::uint64_t>(r.value < 0 ? -r.value : r.value);
        if (s * k <= n) return {n, k, t, c, r, s};
    }
    throw std::logic_error("no pigeonhole witness for n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                           ", t = " + std::to_string(t));
}

OrderUpperViaS orderUpperViaS(const PigeonholeWitness& w) {
    OrderUpperViaS out;
    out.actual = order(ZnSet(w.modulus, {0, 1, w.t % w.modulus}));
    if (w.s == 0) {
        out.holds = true;
        return out;
    }
    out.bound = whole(w.s) + Rational(static_cast<std::int64_t>(w.c * w.modulus), static_cast<std::int64_t>(w.s));
    out.holds = out.actual.isFinite() && whole(out.actual.value()) <= *out.bound;
    return out;
}

RepDecomposition repDecompose(std::uint64_t n, std::uint64_t k, std::uint64_t t, std::uint64_t c) {
    if (c == 0 || k < 2 || t >= n) throw UsageError("repDecompose needs c >= 1, k >= 2 and t < n");
    const auto product = static_cast<std::int64_t>(c * t);
    const std::int64_t e = numericallyLeastResidue(product, n).value;
    RepDecomposition out{t, n, c, (product - e) / static_cast<std::int64_t>(n), e, false, false, false};
    out.applicable = static_cast<std::uint64_t>(e < 0 ? -e : e) <= c * k;
    const auto common = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(out.d), c));
    if (common > 1 && out.e % common == 0) {
        out.c /= static_cast<std::uint64_t>(common);
        out.d /= common;
        out.e /= common;
    }
    out.dInRange = out.d >= 0 && out.d < static_cast<std::int64_t>(out.c);
    out.coprime = std::gcd(static_cast<std::uint64_t>(out.d), out.c) == 1;
    return out;
}

Rational familyClaimedForm(std::uint64_t k) {
    return Rational(static_cast<std::int64_t>(k) - 2) + Rational(1, static_cast<std::int64_t>(k));
}

Rational familyDerivedForm(std::uint64_t k) {
    return Rational(static_cast<std::int64_t>(k) - 3) + Rational(1, static_cast<std::int64_t>(k));
}

std::vector<FamilyRecord> lowerBoundFamily(std::uint64_t k, std::uint64_t nFirst, std::uint64_t nLast, int threads) {
    if (k < 2) throw UsageError("family needs k >= 2");
    if (nFirst > nLast) throw UsageError("n-range must satisfy first <= last");
    if (nLast > kMaxModulus) throw UsageError("n-range exceeds 2^32");
    if (threads < 1) throw UsageError("thread count must be at least 1");
    std::vector<std::uint64_t> moduli;
    for (std::uint64_t n = std::max(nFirst, k + 1); n <= nLast; ++n) {
        if (n % k == k - 1) moduli.push_back(n);
    }
    const Rational claimed = familyClaimedForm(k);
    const Rational derived = familyDerivedForm(k);
    std::vector<FamilyRecord> out(moduli.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const std::uint64_t n = moduli[i];
        const std::uint64_t rho = order(ZnSet(n, {0, 1, k})).value();
        const NearestHarmonic nearest = nearestHarmonic(rho, n, k);
        out[i] = {k, n, rho, nearest.l, nearest.gap, nearest.gap == claimed, nearest.gap == derived};
    }
    return out;
}

FamilySummary summarizeFamily(std::uint64_t k, const std::vector<FamilyRecord>& records) {
    FamilySummary summary{k, std::nullopt};
    if (records.empty()) return summary;
    const Rational tail = records.back().minGap;
    std::size_t first = records.size() - 1;
    while (first > 0 && records[first - 1].minGap == tail) --first;
    summary.tailGap = tail;
    summary.tailStart = records[first].n;
    summary.tailLength = records.size() - first;
    summary.matchesClaimedForm = tail == familyClaimedForm(k);
    summary.matchesDerivedForm = tail == familyDerivedForm(k);
    return summary;
}

}  // namespace cycorder
