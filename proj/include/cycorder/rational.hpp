#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace cycorder {

using Rational = boost::rational<std::int64_t>;

inline Rational absValue(const Rational& r) { return r < 0 ? -r : r; }

/// Always "p/q" with q >= 1, so "1/1" for one and "-5/4" for negatives.
std::string toFractionString(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws UsageError otherwise.
Rational parseFraction(std::string_view text);

}  // namespace cycorder
