#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycorder/rational.hpp"
#include "cycorder/zn_set.hpp"

namespace cycorder {

// ---------------------------------------------------------------------------
// Cardinality bound for bases of large order
// ---------------------------------------------------------------------------

struct KlTerm {
    std::uint64_t divisor;
    std::uint64_t value;  // (n/d) (floor((d-2)/(rho-1)) + 1)

    bool operator==(const KlTerm&) const = default;
};

/// Upper bound on |A| for any basis A of Z_n with order >= rho, as the max
/// over divisors d >= rho + 1 of (n/d)(floor((d-2)/(rho-1)) + 1).
struct KlBoundBreakdown {
    std::uint64_t modulus;
    std::uint64_t rho;
    std::vector<KlTerm> terms;
    std::uint64_t bound;  // d = n always qualifies, so terms is never empty

    bool operator==(const KlBoundBreakdown&) const = default;
};

/// Throws UsageError unless n >= 2 and 2 <= rho <= n - 1.
KlBoundBreakdown klBound(std::uint64_t n, std::uint64_t rho);

// ---------------------------------------------------------------------------
// Growth of integer sumsets
// ---------------------------------------------------------------------------

struct GrowthRecord {
    std::uint64_t h;
    std::uint64_t size;        // |hA|
    std::uint64_t lowerBound;  // |A| + (h-1) l
    bool holds;

    bool operator==(const GrowthRecord&) const = default;
};

struct GrowthCheck {
    std::uint64_t setSize;  // |A|
    std::uint64_t span;     // l = max A
    /// 2|A| - 3 < l: records are still computed but carry no claim.
    bool hypothesisFailed;
    std::vector<GrowthRecord> records;  // h = 1..hMax

    /// Some record fails while the hypothesis holds.
    bool violated() const;

    bool operator==(const GrowthCheck&) const = default;
};

/// Requires 0 in A, gcd(A) = 1 and |A| >= 2; throws UsageError naming the
/// first violated condition. hMax >= 1.
GrowthCheck flGrowthCheck(const IntSet& set, std::uint64_t hMax);

// ---------------------------------------------------------------------------
// Three-element bases
// ---------------------------------------------------------------------------

/// Sandwich for A = {0, a, b} with a | n:
/// max{n/a - 1, a - 1} <= rho_n(A) <= (n/a - 1) + (a - 1).
struct CaseTwoBounds {
    std::uint64_t lower;
    std::uint64_t upper;
    OrderValue actual = OrderValue::infinite();
    bool sandwichHolds;
};

/// Requires a >= 2, a | n, gcd(a, b) = 1, b in [1, n-1], b != a.
CaseTwoBounds caseTwoBounds(std::uint64_t n, std::uint64_t a, std::uint64_t b);

/// Smallest c in [1, k-1] with |ct mod n| <= n/k (numerically least residue).
struct PigeonholeWitness {
    std::uint64_t modulus;
    std::uint64_t k;
    std::uint64_t t;
    std::uint64_t c;
    SignedResidue r;
    std::uint64_t s;  // |r|

    bool operator==(const PigeonholeWitness&) const = default;
};

/// Requires k >= 2 and 1 <= t < n. A failed scan is a logic_error: the
/// pigeonhole principle guarantees a witness.
PigeonholeWitness pigeonholeWitness(std::uint64_t n, std::uint64_t k, std::uint64_t t);

/// rho_n({0,1,t}) <= s + cn/s; s = 0 makes the bound infinite.
struct OrderUpperViaS {
    std::optional<Rational> bound;  // empty means infinite
    OrderValue actual = OrderValue::infinite();
    bool holds;
};

OrderUpperViaS orderUpperViaS(const PigeonholeWitness& witness);

/// ct = dn + e with e = ||ct||_n, d = (ct - e)/n, and (d, c) reduced by their
/// common factor when that factor also divides e.
struct RepDecomposition {
    std::uint64_t t;
    std::uint64_t modulus;
    std::uint64_t c;  // after reduction
    std::int64_t d;
    std::int64_t e;
    /// |e| <= ck for the original c. Otherwise rho <= n/k + ck holds instead.
    bool applicable;
    /// 0 <= d < c.
    bool dInRange;
    /// gcd(d, c) = 1 after the reduction attempt.
    bool coprime;

    bool operator==(const RepDecomposition&) const = default;
};

RepDecomposition repDecompose(std::uint64_t n, std::uint64_t k, std::uint64_t t, std::uint64_t c);

// ---------------------------------------------------------------------------
// The {0, 1, k} family with n = -1 mod k
// ---------------------------------------------------------------------------

struct FamilyRecord {
    std::uint64_t k;
    std::uint64_t n;
    std::uint64_t rho;
    std::uint64_t nearestL;
    Rational minGap;
    bool matchesClaimedForm;    // minGap == (k-2) + 1/k
    bool matchesDerivedForm;  // minGap == (k-3) + 1/k

    bool operator==(const FamilyRecord&) const = default;
};

Rational familyClaimedForm(std::uint64_t k);
Rational familyDerivedForm(std::uint64_t k);

/// One record per n in [nFirst, nLast] with n = -1 mod k and n > k, ascending.
/// Parallel over n; `threads` only changes speed.
std::vector<FamilyRecord> lowerBoundFamily(std::uint64_t k, std::uint64_t nFirst, std::uint64_t nLast, int threads = 1);

/// The value minGap settles on: the longest suffix of records sharing one
/// minGap, and where that suffix starts.
struct FamilySummary {
    std::uint64_t k;
    std::optional<Rational> tailGap;  // empty for no records
    std::uint64_t tailStart = 0;      // smallest n of the constant suffix
    std::uint64_t tailLength = 0;
    bool matchesClaimedForm = false;
    bool matchesDerivedForm = false;

    bool operator==(const FamilySummary&) const = default;
};

FamilySummary summarizeFamily(std::uint64_t k, const std::vector<FamilyRecord>& records);

}  // namespace cycorder
