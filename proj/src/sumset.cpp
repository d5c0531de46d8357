#include "cycorder/sumset.hpp"

#include "cycorder/errors.hpp"

namespace cycorder {

ZnSet addSets(const ZnSet& x, const ZnSet& y) {
    if (x.modulus() != y.modulus()) {
        throw UsageError("addSets: modulus mismatch " + std::to_string(x.modulus()) + " vs " +
                         std::to_string(y.modulus()));
    }
    const bool xDrives = x.size() <= y.size();
    const ZnSet& driver = xDrives ? x : y;
    const ZnSet& body = xDrives ? y : x;
    ZnSet out(x.modulus());
    for (Residue shift : driver.members()) out.uniteRotated(body, shift);
    return out;
}

ZnSet hFold(const ZnSet& set, std::uint64_t h) {
    if (h == 0) throw UsageError("hFold: h must be at least 1");
    if (set.empty()) throw UsageError("hFold: empty set");
    std::optional<ZnSet> acc;
    ZnSet power = set;  // set added to itself 2^i times
    while (true) {
        if ((h & 1U) != 0) acc = acc ? addSets(*acc, power) : power;
        h >>= 1;
        if (h == 0) break;
        power = addSets(power, power);
    }
    return *acc;
}

ZnSet translatedToZero(const ZnSet& set) {
    if (set.empty()) throw UsageError("cannot translate an empty set");
    const Residue low = set.min();
    return low == 0 ? set : set.rotated(set.modulus() - low);
}

namespace {

template <typename OnLevel>
OrderValue iterateLevels(const ZnSet& set, OnLevel&& onLevel, std::optional<ZnSet>* stabilized) {
    if (set.empty()) throw UsageError("order of an empty set is undefined");
    const ZnSet base = translatedToZero(set);
    const std::uint64_t n = base.modulus();
    const auto shifts = base.members();

    ZnSet level = base;
    for (std::uint64_t h = 1;; ++h) {
        onLevel(level);
        const std::uint64_t size = level.size();
        if (size == n) return OrderValue::finite(h);
        ZnSet next(n);
        for (Residue s : shifts) next.uniteRotated(level, s);
        if (next.size() == size) {
            // 0 in base gives level ⊆ next, so equal sizes mean equal sets.
            onLevel(next);
            if (stabilized != nullptr) *stabilized = std::move(next);
            return OrderValue::infinite();
        }
        level = std::move(next);
    }
}

}  // namespace

SumsetTrajectory trajectory(const ZnSet& set) {
    if (set.empty()) throw UsageError("trajectory of an empty set is undefined");
    SumsetTrajectory t{translatedToZero(set), {}, {}, OrderValue::infinite(), std::nullopt};
    t.order = iterateLevels(
        set,
        [&](const ZnSet& level) {
            t.levels.push_back(level);
            t.sizes.push_back(level.size());
        },
        &t.stabilized);
    return t;
}

OrderValue order(const ZnSet& set) {
    return iterateLevels(set, [](const ZnSet&) {}, nullptr);
}

}  // namespace cycorder
