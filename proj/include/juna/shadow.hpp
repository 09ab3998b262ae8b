#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "juna/types.hpp"

namespace juna {

/// A bit string b_1...b_n, stored most significant (leftmost) first.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("BitString: bits must be 0 or 1");
    }

    static BitString from_string(const std::string& s) {
        std::vector<std::uint8_t> v;
        v.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("BitString: expected '0'/'1'");
            v.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return BitString(std::move(v));
    }

    /// Value interpretation: b_1 is the most significant bit of an nbits-wide integer.
    static BitString from_int(const Int& value, std::size_t nbits) {
        if (value < 0 || bit_length(value) > nbits)
            throw std::invalid_argument("BitString: value does not fit in the requested width");
        std::vector<std::uint8_t> v(nbits);
        for (std::size_t i = 0; i < nbits; ++i)
            v[i] = static_cast<std::uint8_t>(boost::multiprecision::bit_test(value, nbits - 1 - i) ? 1 : 0);
        return BitString(std::move(v));
    }

    static BitString from_hex(const std::string& hex, std::size_t nbits) {
        if (hex.size() * 4 != nbits)
            throw std::invalid_argument("BitString: hex length must be exactly nbits/4 digits");
        return from_int(juna::from_hex(hex), nbits);
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    bool nonzero() const {
        return std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
    }

    Int to_int() const {
        Int v = 0;
        for (auto b : bits_) v = (v << 1) | b;
        return v;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    /// Lowercase hex of exactly size()/4 digits, leading zeros kept.
    std::string to_hex() const {
        if (bits_.size() % 4 != 0)
            throw std::logic_error("BitString::to_hex: length not a multiple of 4");
        static const char digits[] = "0123456789abcdef";
        std::string s;
        s.reserve(bits_.size() / 4);
        for (std::size_t i = 0; i < bits_.size(); i += 4) {
            int nib = (bits_[i] << 3) | (bits_[i + 1] << 2) | (bits_[i + 2] << 1) | bits_[i + 3];
            s.push_back(digits[nib]);
        }
        return s;
    }

    BitString concat(const BitString& tail) const {
        std::vector<std::uint8_t> v = bits_;
        v.insert(v.end(), tail.bits_.begin(), tail.bits_.end());
        return BitString(std::move(v));
    }

    BitString prefix(std::size_t n) const {
        if (n > bits_.size()) throw std::invalid_argument("BitString::prefix: too long");
        return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + n));
    }

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Bitwise complement.
inline BitString complement(const BitString& b) {
    std::vector<std::uint8_t> v;
    v.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) v.push_back(static_cast<std::uint8_t>(1 - b[i]));
    return BitString(std::move(v));
}

/// B_1...B_{n/2}: each pair holds a value in {0,1,2,3} (00, 01, 10, 11).
struct BitPairString {
    std::vector<std::uint8_t> pairs;

    std::size_t size() const { return pairs.size(); }
    bool nonzero() const {
        return std::any_of(pairs.begin(), pairs.end(), [](std::uint8_t p) { return p != 0; });
    }
    bool operator==(const BitPairString&) const = default;
};

/// Adjacent bits taken high bit first: pair value = 2*b_{2j-1} + b_{2j}.
inline BitPairString pair_string(const BitString& b) {
    if (b.size() % 2 != 0) throw std::invalid_argument("pair_string: bit string length must be even");
    BitPairString out;
    out.pairs.reserve(b.size() / 2);
    for (std::size_t i = 0; i < b.size(); i += 2)
        out.pairs.push_back(static_cast<std::uint8_t>(2 * b[i] + b[i + 1]));
    return out;
}

/// Inverse of pair_string.
inline BitString bits_of(const BitPairString& p) {
    std::vector<std::uint8_t> v;
    v.reserve(2 * p.size());
    for (auto pv : p.pairs) {
        v.push_back(static_cast<std::uint8_t>(pv >> 1));
        v.push_back(static_cast<std::uint8_t>(pv & 1));
    }
    return BitString(std::move(v));
}

inline std::size_t count_00(const BitPairString& p) {
    return static_cast<std::size_t>(std::count(p.pairs.begin(), p.pairs.end(), std::uint8_t{0}));
}

/// Bit shadows of a nonzero bit string.
///
/// shadow[i] = 0 for a 0-bit; otherwise 1 + the number of successive 0-bits
/// immediately before it, and the leftmost 1-bit additionally absorbs the
/// 0-run after the rightmost 1-bit. The shadows of a nonzero string always
/// sum to its length.
inline std::vector<int> bit_shadow(const BitString& b) {
    if (!b.nonzero()) throw std::invalid_argument("bit_shadow: input must be nonzero");
    const std::size_t n = b.size();
    std::vector<int> shadow(n, 0);
    std::size_t leftmost = n, rightmost = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (b[i]) {
            if (leftmost == n) leftmost = i;
            rightmost = i;
        }
    std::size_t run = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i] == 0) {
            ++run;
        } else {
            shadow[i] = static_cast<int>(1 + run);
            run = 0;
        }
    }
    shadow[leftmost] += static_cast<int>(n - 1 - rightmost); // trailing zeros
    return shadow;
}

/// Pair shadows plus the anchor position (leftmost non-00 pair, 0-based).
struct PairShadowString {
    std::vector<int> shadows;
    std::size_t anchor_index = 0;

    std::size_t size() const { return shadows.size(); }
};

/// Pair-level analogue of bit_shadow over 2-bit units.
inline PairShadowString pair_shadow(const BitPairString& p) {
    if (!p.nonzero()) throw std::invalid_argument("pair_shadow: input must be nonzero");
    const std::size_t half = p.size();
    PairShadowString out;
    out.shadows.assign(half, 0);
    std::size_t leftmost = half, rightmost = 0;
    for (std::size_t i = 0; i < half; ++i)
        if (p.pairs[i]) {
            if (leftmost == half) leftmost = i;
            rightmost = i;
        }
    std::size_t run = 0;
    for (std::size_t i = 0; i < half; ++i) {
        if (p.pairs[i] == 0) {
            ++run;
        } else {
            out.shadows[i] = static_cast<int>(1 + run);
            run = 0;
        }
    }
    out.shadows[leftmost] += static_cast<int>(half - 1 - rightmost);
    out.anchor_index = leftmost;
    return out;
}

} // namespace juna
