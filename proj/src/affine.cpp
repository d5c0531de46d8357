#include "cycorder/affine.hpp"

#include <algorithm>
#include <numeric>

#include "cycorder/errors.hpp"
#include "cycorder/number_theory.hpp"

namespace cycorder {

namespace {

std::uint64_t reduce(std::int64_t x, std::uint64_t n) {
    const auto m = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(((x % m) + m) % m);
}

}  // namespace

AffineMap::AffineMap(std::int64_t scale, std::int64_t shift, std::uint64_t modulus)
    : scale_(0), shift_(0), modulus_(modulus) {
    if (modulus == 0 || modulus > kMaxModulus) throw UsageError("affine map needs a modulus in [1, 2^32]");
    scale_ = reduce(scale, modulus);
    shift_ = reduce(shift, modulus);
    if (std::gcd(scale_, modulus) != 1) {
        throw UsageError("scale " + std::to_string(scale) + " is not a unit modulo " + std::to_string(modulus));
    }
}

Residue AffineMap::operator()(Residue x) const { return (scale_ * x + shift_) % modulus_; }

ZnSet applyAffine(const AffineMap& map, const ZnSet& set) {
    if (map.modulus() != set.modulus()) {
        throw UsageError("affine map modulus " + std::to_string(map.modulus()) + " does not match set modulus " +
                         std::to_string(set.modulus()));
    }
    ZnSet out(set.modulus());
    for (Residue x : set.members()) out.insert(map(x));
    return out;
}

ZnSet canonicalForm(const ZnSet& set) {
    const std::uint64_t n = set.modulus();
    ZnSet best = set;
    for (std::uint64_t u : units(n)) {
        for (std::uint64_t v = 0; v < n; ++v) {
            ZnSet image = applyAffine(AffineMap(static_cast<std::int64_t>(u), static_cast<std::int64_t>(v), n), set);
            if (canonicalLess(image, best)) best = std::move(image);
        }
    }
    return best;
}

std::vector<ZnSet> orbit(const ZnSet& set) {
    const std::uint64_t n = set.modulus();
    std::vector<ZnSet> images;
    for (std::uint64_t u : units(n)) {
        for (std::uint64_t v = 0; v < n; ++v) {
            images.push_back(applyAffine(AffineMap(static_cast<std::int64_t>(u), static_cast<std::int64_t>(v), n), set));
        }
    }
    std::sort(images.begin(), images.end(), canonicalLess);
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return images;
}

bool isCanonicalSorted(std::uint64_t n, const std::vector<Residue>& members, std::uint64_t gap) {
    if (members.empty()) return true;
    if (members[0] != 0) return false;
    if (members.size() == 1) return true;
    if (members[1] != gap) return false;

    // An image beats `members` only if it also starts {0, gap, ...}, which
    // needs a translation by -a and a unit u with u * (x - a) = gap.
    const std::uint64_t reduced = n / gap;
    std::vector<Residue> image(members.size());
    for (Residue a : members) {
        for (Residue x : members) {
            if (x == a) continue;
            const std::uint64_t delta = (x + n - a) % n;
            if (std::gcd(delta, n) != gap) continue;
            const std::uint64_t base = inverseMod((delta / gap) % reduced, reduced);
            for (std::uint64_t u = base; u < n; u += reduced) {
                if (std::gcd(u, n) != 1) continue;
                for (std::size_t i = 0; i < members.size(); ++i) {
                    image[i] = (u * ((members[i] + n - a) % n)) % n;
                }
                std::sort(image.begin(), image.end());
                if (std::lexicographical_compare(image.begin(), image.end(), members.begin(), members.end())) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool isCanonical(const ZnSet& set) {
    const std::uint64_t n = set.modulus();
    const auto members = set.members();
    std::uint64_t gap = n;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) gap = std::min(gap, std::gcd(members[j] - members[i], n));
    }
    return isCanonicalSorted(n, members, gap);
}

}  // namespace cycorder
