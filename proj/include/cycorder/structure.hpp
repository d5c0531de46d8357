#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycorder/rational.hpp"
#include "cycorder/zn_set.hpp"

namespace cycorder {

/// Default doubling threshold for the small-doubling structure analysis.
inline const Rational kDefaultSigma{51, 25};  // 2.04
/// Default density threshold 10^-9 (both |A| < t*n and |A| > t*|H|).
inline const Rational kDefaultDensity{1, 1'000'000'000};

/// {a mod q}. Throws UsageError unless q divides n.
ZnSet project(const ZnSet& set, std::uint64_t q);

struct CosetProfile {
    std::uint64_t cosetsMet;    // s
    Rational maxCosetFraction;  // max |A ∩ (H + x)| / |H|

    bool operator==(const CosetProfile&) const = default;
};

/// Profile with respect to the subgroup H of order m. Throws UsageError
/// unless m divides n.
CosetProfile cosetProfile(const ZnSet& set, std::uint64_t subgroupSize);

struct ApCover {
    Residue start;
    std::uint64_t difference;
    std::uint64_t length;

    bool operator==(const ApCover&) const = default;
};

/// Shortest {start + i*d : 0 <= i < l} containing S; ties go to the smallest
/// l, then d, then start. With coprimeOnly, d ranges over units of Z_q.
/// Throws UsageError for an empty S.
ApCover apCover(const ZnSet& set, bool coprimeOnly = false);

enum class StructureCase { CaseI, CaseII, CaseIII };

struct StructureReport {
    std::uint64_t subgroupSize = 0;  // m = |H|
    std::uint64_t quotientSize = 0;  // q = n / m
    std::uint64_t cosetsMet = 0;     // s
    Rational maxCosetFraction{0};
    ApCover cover{};
    StructureCase caseTag = StructureCase::CaseI;
    /// (l - 1) m <= |2A| - |A|, with l capped at 4 in CaseII.
    bool inequalityHolds = false;
    /// CaseI/CaseII: inequalityHolds. CaseIII: |A| > density * |H|.
    bool caseConditionHolds = false;
    /// Some coset holds more than 2|H|/3 elements of A.
    bool twoThirdsHolds = false;

    bool operator==(const StructureReport&) const = default;
};

struct StructureOptions {
    Rational sigma = kDefaultSigma;
    Rational density = kDefaultDensity;
    bool coprimeDifferences = false;
};

struct StructureAnalysis {
    std::uint64_t modulus = 0;
    std::uint64_t setSize = 0;      // |A|
    std::uint64_t doubledSize = 0;  // |2A|
    Rational doublingRatio{0};
    bool smallDoubling = false;  // |2A| < sigma |A|
    bool sparse = false;         // |A| < density * n
    std::vector<StructureReport> reports;  // one per proper subgroup, ascending m
    /// Index into reports: caseConditionHolds, minimal l*m, then smallest m.
    std::optional<std::size_t> best;

    const StructureReport* bestReport() const { return best ? &reports[*best] : nullptr; }

    bool operator==(const StructureAnalysis&) const = default;
};

/// Runs the structure analysis over every proper subgroup. Hypothesis
/// failures are recorded in the flags, never raised.
StructureAnalysis dfAnalyze(const ZnSet& set, const StructureOptions& options = {});

/// Smallest j in [0, jMax] with |2^(j+1) A| < sigma |2^j A|. Throws UsageError
/// unless 0 is in A.
std::optional<std::uint64_t> doublingSearch(const ZnSet& set, const Rational& sigma, std::uint64_t jMax);

struct ProjectionOrderBounds {
    OrderValue lower = OrderValue::infinite();   // rho_q(pi(A))
    OrderValue actual = OrderValue::infinite();  // rho_n(A)
    OrderValue upperCandidate = OrderValue::infinite();  // rho_q(pi(A)) + n/q
    /// Empty when A is not a basis.
    std::optional<bool> upperHolds;
    bool lowerHolds = false;
};

ProjectionOrderBounds projectionOrderBounds(const ZnSet& set, std::uint64_t q);

enum class PipelineBranch { Case1, Case2, Unavailable };

/// Every quantity of the doubling -> structure -> projection argument,
/// evaluated on one concrete basis.
struct PipelineTrace {
    ZnSet input{1};  // 0-translated
    std::uint64_t k = 0;
    Rational sigma = kDefaultSigma;
    OrderValue order = OrderValue::infinite();  // rho_n(A)
    std::vector<std::uint64_t> doublingSizes;   // |2^i A|, i = 0..j+1
    std::optional<std::uint64_t> j;
    std::uint64_t h = 0;  // 2^j
    std::optional<ZnSet> doubled;  // B = hA
    std::optional<StructureReport> structure;  // best report for B
    std::uint64_t m = 0;
    std::uint64_t q = 0;
    std::uint64_t s = 0;       // cosets met by B
    std::uint64_t sPrime = 0;  // cosets met by A
    std::uint64_t l = 0;       // AP cover length of pi(B)
    OrderValue projectedOrderA = OrderValue::infinite();  // rho_q(pi(A))
    OrderValue projectedOrderB = OrderValue::infinite();  // rho_q(pi(B))
    PipelineBranch branch = PipelineBranch::Unavailable;

    /// 3|B|/2 - m: the subgroup bound that follows from the two-thirds coset.
    std::optional<Rational> subgroupBoundSlack;
    /// rho_n(A) - rho_q(pi(A)).
    std::optional<Rational> projectionLowerSlack;
    /// rho_q(pi(A)) + m - rho_n(A); negative when the upper bound fails.
    std::optional<Rational> projectionUpperSlack;
    /// |rho_n(A) - h rho_q(pi(B))|.
    std::optional<Rational> scaledOrderGap;
    /// min over l' in [1, k] of |rho_q(pi(B)) - n/(h l')|, and its argmin h l'.
    std::optional<Rational> multipleGap;
    std::uint64_t multipleArgmin = 0;
    /// |rho_q(pi(B)) - n/(l - 1)|, when l >= 2.
    std::optional<Rational> apLengthGap;
    /// 2s - 3 >= l - 1.
    std::optional<bool> growthHypothesisHolds;

    bool operator==(const PipelineTrace&) const = default;
};

/// Throws UsageError unless A is a basis and k >= 2.
PipelineTrace pipelineTrace(const ZnSet& set, std::uint64_t k, const StructureOptions& options = {},
                            std::optional<std::uint64_t> jMax = std::nullopt);

const char* toString(StructureCase c);
const char* toString(PipelineBranch b);

}  // namespace cycorder
