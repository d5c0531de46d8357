#include "cycorder/number_theory.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "cycorder/errors.hpp"
#include "cycorder/rational.hpp"

namespace cycorder {

SignedResidue numericallyLeastResidue(std::int64_t x, std::uint64_t n) {
    if (n == 0) throw UsageError("modulus must be positive");
    const auto m = static_cast<std::int64_t>(n);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    // r in [0, n); move to (-n/2, n/2].
    if (2 * r > m) r -= m;
    return {r, n};
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw UsageError("divisors of 0 are not enumerable");
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::uint64_t eulerPhi(std::uint64_t n) {
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<std::uint64_t> units(std::uint64_t n) {
    if (n == 1) return {0};
    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) == 1) out.push_back(u);
    }
    return out;
}

std::uint64_t inverseMod(std::uint64_t u, std::uint64_t n) {
    if (n == 1) return 0;
    std::int64_t oldR = static_cast<std::int64_t>(u % n), r = static_cast<std::int64_t>(n);
    std::int64_t oldS = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = oldR / r;
        oldR = std::exchange(r, oldR - q * r);
        oldS = std::exchange(s, oldS - q * s);
    }
    if (oldR != 1) throw UsageError(std::to_string(u) + " is not invertible modulo " + std::to_string(n));
    const auto m = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(((oldS % m) + m) % m);
}

bool isBasis(const ZnSet& set) {
    if (set.empty()) return false;
    const std::uint64_t n = set.modulus();
    if (n == 1) return true;
    const auto members = set.members();
    if (members.size() < 2) return false;
    std::uint64_t g = n;
    for (std::size_t i = 1; i < members.size(); ++i) g = std::gcd(g, members[i] - members[0]);
    return g == 1;
}

NearestHarmonic nearestHarmonic(std::uint64_t rho, std::uint64_t n, std::uint64_t k) {
    if (k == 0) throw UsageError("k must be at least 1");
    NearestHarmonic best{1, absValue(Rational(static_cast<std::int64_t>(rho)) - static_cast<std::int64_t>(n))};
    for (std::uint64_t l = 2; l <= k; ++l) {
        const Rational gap = absValue(Rational(static_cast<std::int64_t>(rho)) -
                                      Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(l)));
        if (gap < best.gap) best = {l, gap};
    }
    return best;
}

std::string toFractionString(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parseFraction(std::string_view text) {
    auto parseInt = [&](std::string_view part) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw UsageError("malformed fraction \"" + std::string(text) + "\"");
        }
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parseInt(text));
    const std::int64_t den = parseInt(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(parseInt(text.substr(0, slash)), den);
}

}  // namespace cycorder
