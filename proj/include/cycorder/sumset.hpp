#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycorder/zn_set.hpp"

namespace cycorder {

/// X + Y = {x + y mod n}. Rotates the larger operand by each member of the
/// smaller one. Throws UsageError on a modulus mismatch.
ZnSet addSets(const ZnSet& x, const ZnSet& y);

/// hA by binary doubling. Throws UsageError for h = 0 or an empty A.
ZnSet hFold(const ZnSet& set, std::uint64_t h);

/// The set translated by -min(A), so that it contains 0.
ZnSet translatedToZero(const ZnSet& set);

/// Level-by-level record of hA for the 0-translated base.
///
/// Iteration stops at the first level equal to Z_n (outcome is the order) or
/// at the first level equal to its predecessor (outcome is the stabilized
/// proper subset). With 0 in the base the levels are nested, so either event
/// happens within n steps.
struct SumsetTrajectory {
    ZnSet base;
    std::vector<ZnSet> levels;  // levels[h - 1] = hA
    std::vector<std::uint64_t> sizes;
    OrderValue order = OrderValue::infinite();
    /// Set when order is infinite: the proper subset where growth stopped.
    std::optional<ZnSet> stabilized;

    bool operator==(const SumsetTrajectory&) const = default;
};

SumsetTrajectory trajectory(const ZnSet& set);

/// rho_n(A). Same iteration as trajectory() without keeping the levels.
OrderValue order(const ZnSet& set);

}  // namespace cycorder
