#include "cycorder/zn_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "cycorder/errors.hpp"

namespace cycorder {

namespace {

constexpr std::uint64_t kWordBits = 64;

std::uint64_t wordCount(std::uint64_t bits) { return (bits + kWordBits - 1) / kWordBits; }

std::uint64_t lowMask(std::uint64_t count) {
    return count >= kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

// Reads `count` <= 64 bits starting at bit `pos`; the range must lie inside `words`.
std::uint64_t readBits(std::span<const std::uint64_t> words, std::uint64_t pos, std::uint64_t count) {
    const std::uint64_t index = pos / kWordBits;
    const std::uint64_t offset = pos % kWordBits;
    std::uint64_t value = words[index] >> offset;
    if (offset != 0 && offset + count > kWordBits) {
        value |= words[index + 1] << (kWordBits - offset);
    }
    return value & lowMask(count);
}

// dst[dstPos, dstPos + len) |= src[srcPos, srcPos + len)
void orBits(std::span<std::uint64_t> dst, std::uint64_t dstPos, std::span<const std::uint64_t> src,
            std::uint64_t srcPos, std::uint64_t len) {
    while (len > 0) {
        const std::uint64_t offset = dstPos % kWordBits;
        const std::uint64_t chunk = std::min(len, kWordBits - offset);
        dst[dstPos / kWordBits] |= readBits(src, srcPos, chunk) << offset;
        dstPos += chunk;
        srcPos += chunk;
        len -= chunk;
    }
}

std::uint64_t parseNumber(std::string_view field, std::string_view literal) {
    std::uint64_t value = 0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc{} || ptr != last) {
        throw UsageError("malformed set literal \"" + std::string(literal) + "\": bad entry \"" +
                         std::string(field) + "\"");
    }
    return value;
}

template <typename Fn>
void forEachField(std::string_view literal, Fn&& fn) {
    if (literal.empty()) return;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = literal.find(',', start);
        std::string_view field = literal.substr(start, comma == std::string_view::npos ? literal.npos : comma - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        fn(field);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
}

}  // namespace

ZnSet::ZnSet(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus == 0 || modulus > kMaxModulus) {
        throw UsageError("modulus must lie in [1, 2^32], got " + std::to_string(modulus));
    }
    words_.assign(wordCount(modulus), 0);
}

ZnSet::ZnSet(std::uint64_t modulus, std::span<const Residue> members) : ZnSet(modulus) {
    for (Residue r : members) insert(r);
}

ZnSet::ZnSet(std::uint64_t modulus, std::initializer_list<Residue> members)
    : ZnSet(modulus, std::span<const Residue>(members.begin(), members.size())) {}

ZnSet ZnSet::full(std::uint64_t modulus) {
    ZnSet set(modulus);
    std::fill(set.words_.begin(), set.words_.end(), ~std::uint64_t{0});
    set.words_.back() &= lowMask(modulus - (set.words_.size() - 1) * kWordBits);
    return set;
}

std::uint64_t ZnSet::size() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

bool ZnSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ZnSet::contains(Residue r) const {
    return r < modulus_ && ((words_[r / kWordBits] >> (r % kWordBits)) & 1U) != 0;
}

void ZnSet::insert(Residue r) {
    if (r >= modulus_) {
        throw UsageError("residue " + std::to_string(r) + " out of range for modulus " + std::to_string(modulus_));
    }
    words_[r / kWordBits] |= std::uint64_t{1} << (r % kWordBits);
}

Residue ZnSet::min() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) return i * kWordBits + static_cast<std::uint64_t>(std::countr_zero(words_[i]));
    }
    throw UsageError("min() of an empty set");
}

std::vector<Residue> ZnSet::members() const {
    std::vector<Residue> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(i * kWordBits + static_cast<std::uint64_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

ZnSet ZnSet::rotated(std::uint64_t shift) const {
    ZnSet out(modulus_);
    out.uniteRotated(*this, shift);
    return out;
}

void ZnSet::uniteRotated(const ZnSet& other, std::uint64_t shift) {
    if (other.modulus_ != modulus_) {
        throw UsageError("modulus mismatch: " + std::to_string(modulus_) + " vs " + std::to_string(other.modulus_));
    }
    shift %= modulus_;
    const std::uint64_t n = modulus_;
    // Bits [0, n - shift) land at [shift, n); bits [n - shift, n) wrap to [0, shift).
    orBits(words_, shift, other.words_, 0, n - shift);
    orBits(words_, 0, other.words_, n - shift, shift);
}

void ZnSet::unite(const ZnSet& other) {
    if (other.modulus_ != modulus_) {
        throw UsageError("modulus mismatch: " + std::to_string(modulus_) + " vs " + std::to_string(other.modulus_));
    }
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
}

std::strong_ordering canonicalCompare(const ZnSet& a, const ZnSet& b) {
    if (a.modulus() != b.modulus()) return a.modulus() <=> b.modulus();
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) {
        if (wa[i] == wb[i]) continue;
        const std::uint64_t lowest = std::countr_zero(wa[i] ^ wb[i]);
        return ((wa[i] >> lowest) & 1U) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

ZnSet parseZnSet(std::uint64_t modulus, std::string_view literal) {
    ZnSet set(modulus);
    forEachField(literal, [&](std::string_view field) {
        const std::uint64_t value = parseNumber(field, literal);
        if (value >= modulus) {
            throw UsageError("residue " + std::to_string(value) + " out of range [0, " + std::to_string(modulus) + ")");
        }
        if (set.contains(value)) {
            throw UsageError("duplicate residue " + std::to_string(value) + " in \"" + std::string(literal) + "\"");
        }
        set.insert(value);
    });
    return set;
}

std::string formatMembers(const ZnSet& set, char separator) {
    std::string out;
    for (Residue r : set.members()) {
        if (!out.empty()) out.push_back(separator);
        out += std::to_string(r);
    }
    return out;
}

IntSet::IntSet(std::span<const std::uint64_t> members) {
    for (std::uint64_t x : members) insert(x);
}

IntSet::IntSet(std::initializer_list<std::uint64_t> members)
    : IntSet(std::span<const std::uint64_t>(members.begin(), members.size())) {}

void IntSet::insert(std::uint64_t x) {
    if (x / kWordBits >= words_.size()) words_.resize(x / kWordBits + 1, 0);
    words_[x / kWordBits] |= std::uint64_t{1} << (x % kWordBits);
}

bool IntSet::contains(std::uint64_t x) const {
    return x / kWordBits < words_.size() && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U) != 0;
}

std::uint64_t IntSet::size() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::uint64_t IntSet::max() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != 0) return i * kWordBits + (kWordBits - 1 - static_cast<std::uint64_t>(std::countl_zero(words_[i])));
    }
    throw UsageError("max() of an empty integer set");
}

std::vector<std::uint64_t> IntSet::members() const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(i * kWordBits + static_cast<std::uint64_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

IntSet IntSet::plus(const IntSet& other) const {
    IntSet result;
    if (empty() || other.empty()) return result;
    const IntSet& driver = size() <= other.size() ? *this : other;
    const IntSet& body = size() <= other.size() ? other : *this;
    const std::uint64_t bodyBits = body.max() + 1;
    result.words_.assign(wordCount(driver.max() + bodyBits), 0);
    for (std::uint64_t x : driver.members()) orBits(result.words_, x, body.words_, 0, bodyBits);
    return result;
}

bool IntSet::operator==(const IntSet& other) const {
    const std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (words_[i] != other.words_[i]) return false;
    }
    const auto& longer = words_.size() > other.words_.size() ? words_ : other.words_;
    return std::all_of(longer.begin() + static_cast<std::ptrdiff_t>(common), longer.end(),
                       [](std::uint64_t w) { return w == 0; });
}

IntSet parseIntSet(std::string_view literal) {
    IntSet set;
    forEachField(literal, [&](std::string_view field) {
        const std::uint64_t value = parseNumber(field, literal);
        if (value >= kMaxModulus) throw UsageError("integer " + std::to_string(value) + " too large");
        if (set.contains(value)) throw UsageError("duplicate integer " + std::to_string(value));
        set.insert(value);
    });
    return set;
}

OrderValue OrderValue::finite(std::uint64_t h) {
    if (h == 0) throw UsageError("an order is at least 1");
    OrderValue v;
    v.value_ = h;
    return v;
}

std::strong_ordering OrderValue::operator<=>(const OrderValue& other) const {
    if (isFinite() && other.isFinite()) return *value_ <=> *other.value_;
    if (isFinite()) return std::strong_ordering::less;
    if (other.isFinite()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string OrderValue::toString() const { return isFinite() ? std::to_string(*value_) : "inf"; }

}  // namespace cycorder
