#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cycorder/rational.hpp"
#include "cycorder/zn_set.hpp"

namespace cycorder {

struct EnumerationMode {
    enum class Kind { Exhaustive, CardCapped };

    Kind kind = Kind::Exhaustive;
    std::uint64_t maxCard = 0;  // only meaningful for CardCapped

    static EnumerationMode exhaustive() { return {Kind::Exhaustive, 0}; }
    static EnumerationMode cardCapped(std::uint64_t maxCard) { return {Kind::CardCapped, maxCard}; }

    bool operator==(const EnumerationMode&) const = default;
};

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 20;
inline constexpr std::uint64_t kDefaultMaxCard = 6;

struct EnumerationOptions {
    int shards = 1;
    std::uint64_t exhaustiveLimit = kDefaultExhaustiveLimit;
    /// When set, bases with order <= floor are dropped together with every
    /// superset (adding elements never raises the order).
    std::optional<std::uint64_t> orderFloor;
};

struct BasisRecord {
    ZnSet set;
    std::uint64_t order;

    bool operator==(const BasisRecord&) const = default;
};

/// Largest cardinality the mode allows at modulus n, after validating the
/// mode. Throws UsageError when Exhaustive is asked for above the limit or
/// the cap is zero.
std::uint64_t effectiveCardinality(std::uint64_t n, const EnumerationMode& mode, const EnumerationOptions& options);

/// One canonical representative per affine orbit of bases of Z_n, with its
/// order, sorted by canonicalCompare. Work is split into shards keyed by the
/// two smallest nonzero members and run under OpenMP; the result does not
/// depend on the shard count.
std::vector<BasisRecord> enumerateBases(std::uint64_t n, const EnumerationMode& mode,
                                        const EnumerationOptions& options = {});

/// Serial reference for enumerateBases: walks every subset containing 0,
/// keeps those equal to their brute-force canonicalForm. Slow; for tests and
/// benchmarks only.
std::vector<BasisRecord> enumerateBasesReference(std::uint64_t n, const EnumerationMode& mode,
                                                 const EnumerationOptions& options = {});

struct GapRun {
    std::uint64_t start;
    std::uint64_t end;  // inclusive

    bool operator==(const GapRun&) const = default;
};

struct SpectrumReport {
    std::uint64_t modulus = 0;
    EnumerationMode mode;
    std::uint64_t orbitCount = 0;  // canonical bases enumerated
    std::vector<std::uint64_t> achievedOrders;
    std::vector<GapRun> gaps;
    /// (order, smallest canonical basis attaining it), ascending by order.
    std::vector<std::pair<std::uint64_t, ZnSet>> witnesses;

    bool operator==(const SpectrumReport&) const = default;
};

/// Maximal runs in [1, n-1] containing no achieved order.
std::vector<GapRun> gapRuns(std::uint64_t n, const std::vector<std::uint64_t>& achievedOrders);

SpectrumReport summarizeSpectrum(std::uint64_t n, const EnumerationMode& mode, const std::vector<BasisRecord>& bases);

SpectrumReport spectrum(std::uint64_t n, const EnumerationMode& mode, const EnumerationOptions& options = {});

struct ConjectureReport {
    std::uint64_t modulus = 0;
    std::uint64_t k = 0;
    EnumerationMode mode;
    /// Bases with rho > n/k, canonical order.
    std::vector<BasisRecord> exceeders;
    Rational maxMinGap{0};
    /// First exceeder (canonical order) attaining maxMinGap.
    std::optional<BasisRecord> argmaxWitness;
    /// Set whenever the enumeration was cardinality-capped: the cap rests on
    /// an asymptotic bound whose threshold is not quantified.
    bool completenessCaveat = false;

    bool operator==(const ConjectureReport&) const = default;
};

ConjectureReport verifyConjecture(std::uint64_t n, std::uint64_t k, const EnumerationMode& mode,
                                  const EnumerationOptions& options = {});

struct ConjectureSweep {
    std::uint64_t k = 0;
    std::vector<ConjectureReport> reports;  // ascending n
    std::vector<Rational> runningMax;       // runningMax[i] = max over reports[0..i]

    bool operator==(const ConjectureSweep&) const = default;
};

ConjectureSweep conjectureSweep(std::uint64_t k, std::uint64_t nFirst, std::uint64_t nLast,
                                const EnumerationMode& mode, const EnumerationOptions& options = {});

}  // namespace cycorder
