#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace juna {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every randomized operation takes an explicit engine so that identical
// seeds yield identical outputs. mt19937_64 is fully specified by the
// standard; std::uniform_int_distribution is not, so the helpers below
// draw raw 64-bit words themselves.
using Rng = std::mt19937_64;

inline std::size_t bit_length(const Int& x) {
    if (x <= 0) return 0;
    return boost::multiprecision::msb(x) + 1;
}

/// Smallest k with 2^k >= x (the paper's ceil(lg x)); x must be positive.
inline unsigned ceil_log2(const Int& x) {
    if (x <= 0) throw std::invalid_argument("ceil_log2: argument must be positive");
    if (x == 1) return 0;
    return static_cast<unsigned>(bit_length(x - 1));
}

/// Uniform value in [0, 2^nbits).
inline Int random_bits(Rng& rng, std::size_t nbits) {
    Int out = 0;
    std::size_t produced = 0;
    while (produced < nbits) {
        std::uint64_t word = rng();
        std::size_t take = std::min<std::size_t>(64, nbits - produced);
        if (take < 64) word &= (std::uint64_t{1} << take) - 1;
        out |= Int(word) << produced;
        produced += take;
    }
    return out;
}

/// Uniform value in [0, bound) by rejection sampling.
inline Int random_below(Rng& rng, const Int& bound) {
    if (bound <= 0) throw std::invalid_argument("random_below: bound must be positive");
    std::size_t nbits = bit_length(bound);
    for (;;) {
        Int candidate = random_bits(rng, nbits);
        if (candidate < bound) return candidate;
    }
}

/// Uniform value in [lo, hi] inclusive.
inline Int random_range(Rng& rng, const Int& lo, const Int& hi) {
    if (lo > hi) throw std::invalid_argument("random_range: empty range");
    return lo + random_below(rng, hi - lo + 1);
}

inline bool random_bit(Rng& rng) { return (rng() & 1u) != 0; }

/// Lowercase hex, most significant digit first, no leading zeros ("0" for zero).
inline std::string to_hex(const Int& x) {
    if (x < 0) throw std::invalid_argument("to_hex: negative value");
    if (x == 0) return "0";
    std::string s = x.str(0, std::ios_base::hex);
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline Int from_hex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("from_hex: empty string");
    Int out = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument(std::string("from_hex: invalid digit '") + c + "'");
        out = (out << 4) | d;
    }
    return out;
}

} // namespace juna
