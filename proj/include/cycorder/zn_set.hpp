#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cycorder {

using Residue = std::uint64_t;

/// Largest modulus accepted anywhere in the library.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

/// A subset of Z_n stored as a dense bit vector of length n.
///
/// Bits at positions >= n in the last word are always zero, so word-wise
/// equality and popcount are exact.
class ZnSet {
public:
    /// Empty subset of Z_n. Throws UsageError unless 1 <= n <= kMaxModulus.
    explicit ZnSet(std::uint64_t modulus);

    /// Throws UsageError if a member is >= modulus. Duplicates collapse.
    ZnSet(std::uint64_t modulus, std::span<const Residue> members);
    ZnSet(std::uint64_t modulus, std::initializer_list<Residue> members);

    static ZnSet full(std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t size() const;
    bool empty() const;
    bool contains(Residue r) const;
    void insert(Residue r);

    /// Smallest member. Precondition: nonempty.
    Residue min() const;
    std::vector<Residue> members() const;

    std::span<const std::uint64_t> words() const { return words_; }

    /// {x + shift mod n : x in *this}.
    ZnSet rotated(std::uint64_t shift) const;
    /// *this |= rotated(other, shift), without materializing the rotation.
    void uniteRotated(const ZnSet& other, std::uint64_t shift);
    void unite(const ZnSet& other);

    bool operator==(const ZnSet&) const = default;

private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> words_;
};

/// Total order used for canonical forms: characteristic vectors compared
/// lexicographically from residue 0 upward, a present element sorting before
/// an absent one. Among sets of equal size this is lexicographic order on the
/// sorted member lists, so {0,1} precedes {0,2}.
std::strong_ordering canonicalCompare(const ZnSet& a, const ZnSet& b);

inline bool canonicalLess(const ZnSet& a, const ZnSet& b) {
    return canonicalCompare(a, b) < 0;
}

/// Parses "0,1,3". Rejects empty fields, non-numbers, out-of-range and
/// duplicate entries with UsageError. An empty string gives the empty set.
ZnSet parseZnSet(std::uint64_t modulus, std::string_view literal);

/// Inverse of parseZnSet; `separator` is ';' inside CSV fields.
std::string formatMembers(const ZnSet& set, char separator = ',');

/// A finite set of nonnegative integers, stored as a growable bit vector.
class IntSet {
public:
    IntSet() = default;
    explicit IntSet(std::span<const std::uint64_t> members);
    IntSet(std::initializer_list<std::uint64_t> members);

    void insert(std::uint64_t x);
    bool contains(std::uint64_t x) const;
    std::uint64_t size() const;
    bool empty() const { return size() == 0; }
    /// Largest member; the span l of a normalized set. Precondition: nonempty.
    std::uint64_t max() const;
    std::vector<std::uint64_t> members() const;

    /// Integer sumset {x + y}, no wraparound.
    IntSet plus(const IntSet& other) const;

    bool operator==(const IntSet& other) const;

private:
    std::vector<std::uint64_t> words_;
};

IntSet parseIntSet(std::string_view literal);

/// The representative of a residue class lying in (-n/2, n/2].
struct SignedResidue {
    std::int64_t value;
    std::uint64_t modulus;

    bool operator==(const SignedResidue&) const = default;
};

/// rho(A): a finite positive integer, or infinite when A is not a basis.
class OrderValue {
public:
    static OrderValue finite(std::uint64_t h);
    static OrderValue infinite() { return OrderValue{}; }

    bool isFinite() const { return value_.has_value(); }
    /// Precondition: isFinite().
    std::uint64_t value() const { return *value_; }

    /// Finite values order numerically; infinite sorts last.
    std::strong_ordering operator<=>(const OrderValue& other) const;
    bool operator==(const OrderValue&) const = default;

    /// Decimal digits, or "inf".
    std::string toString() const;

private:
    OrderValue() = default;
    std::optional<std::uint64_t> value_;
};

}  // namespace cycorder
