#pragma once

#include <cstdint>
#include <vector>

#include "cycorder/rational.hpp"
#include "cycorder/zn_set.hpp"

namespace cycorder {

/// The numerically least residue ||x||_n, in (-n/2, n/2]. Requires n >= 1.
SignedResidue numericallyLeastResidue(std::int64_t x, std::uint64_t n);

/// Divisors of n in increasing order. Requires n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t eulerPhi(std::uint64_t n);

/// Units of Z_n in increasing order (just {0} for n = 1).
std::vector<std::uint64_t> units(std::uint64_t n);

/// Inverse of u modulo n. Requires gcd(u, n) = 1.
std::uint64_t inverseMod(std::uint64_t u, std::uint64_t n);

/// Whether some h >= 1 has hA = Z_n.
///
/// Uses gcd({a - a0} together with n) = 1, which needs |A| >= 2 unless
/// n = 1. The plain gcd-of-elements test misclassifies singletons such as
/// {1} in Z_5. The empty set is not a basis.
bool isBasis(const ZnSet& set);

/// min over l in [1, k] of |rho - n/l|, and the smallest l attaining it.
struct NearestHarmonic {
    std::uint64_t l;
    Rational gap;
};

NearestHarmonic nearestHarmonic(std::uint64_t rho, std::uint64_t n, std::uint64_t k);

}  // namespace cycorder
