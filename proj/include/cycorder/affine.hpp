#pragma once

#include <cstdint>
#include <vector>

#include "cycorder/zn_set.hpp"

namespace cycorder {

/// x -> u*x + v on Z_n with u a unit. These maps preserve the order of a set.
class AffineMap {
public:
    /// Throws UsageError unless gcd(u, n) = 1. Negative arguments reduce mod n.
    AffineMap(std::int64_t scale, std::int64_t shift, std::uint64_t modulus);

    std::uint64_t scale() const { return scale_; }
    std::uint64_t shift() const { return shift_; }
    std::uint64_t modulus() const { return modulus_; }

    Residue operator()(Residue x) const;

private:
    std::uint64_t scale_;
    std::uint64_t shift_;
    std::uint64_t modulus_;
};

ZnSet applyAffine(const AffineMap& map, const ZnSet& set);

/// Minimum of the affine orbit under canonicalCompare, found by trying all
/// n * phi(n) maps.
ZnSet canonicalForm(const ZnSet& set);

/// All distinct images, sorted by canonicalCompare.
std::vector<ZnSet> orbit(const ZnSet& set);

/// Same answer as canonicalForm(set) == set, but only tries the maps that can
/// produce an image starting {0, g, ...} where g is the smallest gcd(x - y, n)
/// over distinct members. Used on the enumeration hot path.
bool isCanonical(const ZnSet& set);

/// Sorted-member variant of isCanonical for callers that already hold the
/// member list; `gap` is the smallest gcd(x - y, n) over distinct members.
bool isCanonicalSorted(std::uint64_t n, const std::vector<Residue>& sortedMembers, std::uint64_t gap);

}  // namespace cycorder
