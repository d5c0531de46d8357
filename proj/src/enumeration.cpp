#include <algorithm>
#include <numeric>

#include "cycorder/affine.hpp"
#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"
#include "cycorder/spectrum.hpp"
#include "cycorder/sumset.hpp"

namespace cycorder {

std::uint64_t effectiveCardinality(std::uint64_t n, const EnumerationMode& mode, const EnumerationOptions& options) {
    if (n == 0 || n > kMaxModulus) throw UsageError("modulus must lie in [1, 2^32]");
    if (mode.kind == EnumerationMode::Kind::Exhaustive) {
        if (n > options.exhaustiveLimit) {
            throw UsageError("exhaustive enumeration is limited to n <= " + std::to_string(options.exhaustiveLimit) +
                             " (got n = " + std::to_string(n) + "); use a cardinality cap instead");
        }
        return n;
    }
    if (mode.maxCard == 0) throw UsageError("cardinality cap must be at least 1");
    return std::min(mode.maxCard, n);
}

namespace {

// The canonical representative of an orbit starts {0, g, ...} where g is the
// smallest gcd(x - y, n) over member pairs. Each stratum g is a divisor of n;
// within it every member pair must keep gcd(x - y, n) >= g.
struct Walker {
    std::uint64_t n;
    std::uint64_t gap;
    std::uint64_t maxCard;
    std::optional<std::uint64_t> floor;
    std::vector<Residue> members;
    std::vector<BasisRecord>* out;

    bool admits(Residue x) const {
        return std::all_of(members.begin(), members.end(),
                           [&](Residue y) { return std::gcd(x - y, n) >= gap; });
    }

    // `common` is gcd(n, members); with 0 a member, the set is a basis iff it is 1.
    void visit(std::uint64_t common) {
        if (common == 1) {
            const ZnSet set(n, members);
            std::optional<std::uint64_t> rho;
            if (floor) {
                rho = order(set).value();
                if (*rho <= *floor) return;
            }
            if (isCanonicalSorted(n, members, gap)) {
                if (!rho) rho = order(set).value();
                out->push_back({set, *rho});
            }
        }
        if (members.size() >= maxCard) return;
        for (Residue x = members.back() + 1; x < n; ++x) {
            if (!admits(x)) continue;
            members.push_back(x);
            visit(std::gcd(common, x));
            members.pop_back();
        }
    }
};

struct Shard {
    std::uint64_t gap;
    std::optional<Residue> third;
};

}  // namespace

std::vector<BasisRecord> enumerateBases(std::uint64_t n, const EnumerationMode& mode,
                                        const EnumerationOptions& options) {
    const std::uint64_t maxCard = effectiveCardinality(n, mode, options);
    if (options.shards < 1) throw UsageError("shard count must be at least 1");
    std::vector<BasisRecord> result;
    if (n == 1) {
        if (!options.orderFloor || *options.orderFloor < 1) result.push_back({ZnSet(1, {0}), 1});
        return result;
    }
    if (maxCard < 2) return result;

    std::vector<Shard> shards;
    for (std::uint64_t g : divisors(n)) {
        if (g == n) continue;
        shards.push_back({g, std::nullopt});
        if (maxCard < 3) continue;
        for (Residue x = g + 1; x < n; ++x) {
            if (std::gcd(x, n) >= g && std::gcd(x - g, n) >= g) shards.push_back({g, x});
        }
    }

    std::vector<std::vector<BasisRecord>> partial(shards.size());
#pragma omp parallel for schedule(dynamic) num_threads(options.shards)
    for (std::size_t i = 0; i < shards.size(); ++i) {
        const Shard& shard = shards[i];
        Walker walker{n, shard.gap, maxCard, options.orderFloor, {0, shard.gap}, &partial[i]};
        if (!shard.third) {
            // The pair {0, g} alone; larger sets belong to the shards with a third member.
            walker.maxCard = 2;
            walker.visit(shard.gap);
        } else {
            walker.members.push_back(*shard.third);
            walker.visit(std::gcd(shard.gap, *shard.third));
        }
    }

    for (auto& part : partial) {
        std::move(part.begin(), part.end(), std::back_inserter(result));
    }
    std::sort(result.begin(), result.end(),
              [](const BasisRecord& a, const BasisRecord& b) { return canonicalLess(a.set, b.set); });
    return result;
}

}  // namespace cycorder
