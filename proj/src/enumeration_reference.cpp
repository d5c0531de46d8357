#include <algorithm>

#include "cycorder/affine.hpp"
#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"
#include "cycorder/spectrum.hpp"
#include "cycorder/sumset.hpp"

namespace cycorder {

namespace {

// Calls fn(members) for every subset of [1, n) of size <= budget, prefixed by 0.
template <typename Fn>
void forEachZeroSubset(std::uint64_t n, std::uint64_t budget, std::vector<Residue>& members, Residue next, Fn& fn) {
    fn(members);
    if (members.size() >= budget) return;
    for (Residue x = next; x < n; ++x) {
        members.push_back(x);
        forEachZeroSubset(n, budget, members, x + 1, fn);
        members.pop_back();
    }
}

}  // namespace

std::vector<BasisRecord> enumerateBasesReference(std::uint64_t n, const EnumerationMode& mode,
                                                 const EnumerationOptions& options) {
    const std::uint64_t maxCard = effectiveCardinality(n, mode, options);
    std::vector<BasisRecord> result;
    std::vector<Residue> members{0};
    auto consider = [&](const std::vector<Residue>& current) {
        const ZnSet set(n, current);
        if (!isBasis(set) || canonicalForm(set) != set) return;
        const std::uint64_t rho = order(set).value();
        if (options.orderFloor && rho <= *options.orderFloor) return;
        result.push_back({set, rho});
    };
    forEachZeroSubset(n, maxCard, members, 1, consider);
    std::sort(result.begin(), result.end(),
              [](const BasisRecord& a, const BasisRecord& b) { return canonicalLess(a.set, b.set); });
    return result;
}

}  // namespace cycorder
