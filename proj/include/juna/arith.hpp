#pragma once

#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <utility>
#include <vector>

#include "juna/profile.hpp"
#include "juna/types.hpp"

namespace juna {

struct EgcdResult {
    Int g, x, y; // g = a*x + b*y
};

inline EgcdResult egcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = std::exchange(b, r);
        Int nx = x0 - q * x1;
        Int ny = y0 - q * y1;
        x0 = std::exchange(x1, nx);
        y0 = std::exchange(y1, ny);
    }
    return {a, x0, y0};
}

/// a^-1 mod m; throws if gcd(a, m) != 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    if (m <= 1) throw std::invalid_argument("mod_inverse: modulus must be > 1");
    Int ar = a % m;
    if (ar < 0) ar += m;
    auto [g, x, y] = egcd(ar, m);
    if (g != 1) throw std::invalid_argument("mod_inverse: argument not invertible");
    Int inv = x % m;
    if (inv < 0) inv += m;
    return inv;
}

/// base^exponent mod m with a signed exponent. Negative exponents are
/// resolved through the modular inverse, so the base must be invertible.
inline Int mod_pow(const Int& base, const Int& exponent, const Int& m) {
    if (m <= 1) throw std::invalid_argument("mod_pow: modulus must be > 1");
    Int b = base % m;
    if (b < 0) b += m;
    if (exponent < 0) return boost::multiprecision::powm(mod_inverse(b, m), -exponent, m);
    return boost::multiprecision::powm(b, exponent, m);
}

/// Primes below 100000, cached.
inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 100000;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

/// Miller-Rabin with a small-prime prefilter. 48 rounds keep the error
/// probability below 2^-96.
inline bool is_probable_prime(const Int& n, Rng& rng, unsigned rounds = 48) {
    if (n < 2) return false;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > n) return true; // fully trial-divided
        if (n % p == 0) return n == p;
    }
    return boost::multiprecision::miller_rabin_test(n, rounds, rng);
}

/// Random prime of exactly `bits` bits.
inline Int random_prime(Rng& rng, std::size_t bits, std::size_t budget = 1u << 20) {
    if (bits < 2) throw std::invalid_argument("random_prime: need at least 2 bits");
    for (std::size_t i = 0; i < budget; ++i) {
        Int c = random_bits(rng, bits - 1) | (Int(1) << (bits - 1)) | 1;
        if (is_probable_prime(c, rng)) return c;
    }
    throw std::runtime_error("random_prime: budget exhausted");
}

/// A prime modulus M together with the full factorization of M-1.
///
/// order_prime is the planted prime factor F of M-1 that key generation
/// turns into the order of W; zero for hand-built or parsed records.
struct ModulusRecord {
    Int M;
    Int Mbar; // M - 1
    std::vector<std::pair<Int, unsigned>> factorization; // of Mbar, ascending primes
    Int order_prime = 0;

    bool factored() const { return !factorization.empty(); }
};

/// Record for a known prime M with a caller-supplied factorization of M-1.
/// Verifies that the factorization multiplies back exactly.
inline ModulusRecord make_modulus_record(const Int& M,
                                         std::vector<std::pair<Int, unsigned>> factorization) {
    ModulusRecord rec;
    rec.M = M;
    rec.Mbar = M - 1;
    std::sort(factorization.begin(), factorization.end());
    Int prod = 1;
    for (const auto& [p, e] : factorization)
        for (unsigned i = 0; i < e; ++i) prod *= p;
    if (prod != rec.Mbar)
        throw std::invalid_argument("make_modulus_record: factorization does not multiply to M-1");
    rec.factorization = std::move(factorization);
    return rec;
}

/// Order of x in Z_M^*, computed from the stored factorization of M-1.
inline Int element_order(const Int& x, const ModulusRecord& m) {
    if (x < 1 || x >= m.M) throw std::invalid_argument("element_order: x out of range");
    if (boost::multiprecision::gcd(x, m.M) != 1)
        throw std::invalid_argument("element_order: x not coprime to M");
    if (!m.factored()) throw std::logic_error("element_order: factorization of M-1 required");
    Int order = m.Mbar;
    for (const auto& [p, e] : m.factorization) {
        for (unsigned i = 0; i < e; ++i) {
            if (order % p != 0) break;
            Int reduced = order / p;
            if (mod_pow(x, reduced, m.M) != 1) break;
            order = reduced;
        }
    }
    return order;
}

/// Generator of Z_M^* (order exactly M-1).
inline Int find_generator(const ModulusRecord& m, Rng& rng) {
    if (!m.factored()) throw std::logic_error("find_generator: factorization of M-1 required");
    if (m.M == 3) return 2;
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Int g = random_range(rng, 2, m.M - 2);
        bool ok = true;
        for (const auto& [p, e] : m.factorization) {
            if (mod_pow(g, m.Mbar / p, m.M) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::runtime_error("find_generator: no generator found (is M prime?)");
}

/// Prime modulus construction for key generation.
///
/// M-1 is assembled rather than searched blindly: M-1 = S * F * t with
///   S = p_1^2 * ... * p_k^2   (first k primes, prod(e_i) = 2^k >= the
///                              profile threshold, p_k < n+pad),
///   F a random prime of min_order_bits+1 bits (the future order of W),
///   t a random prime sized so M lands on tbar bits,
/// and t, F redrawn until M = S*F*t + 1 is prime, has bit length tbar and
/// exceeds lower_bound. The factorization of M-1 is then complete by
/// construction.
inline ModulusRecord build_modulus(const SchemeProfile& profile, const Int& lower_bound,
                                   Rng& rng, std::size_t trial_budget = 200000) {
    const int tbar = profile.tbar;
    if (lower_bound >= (Int(1) << tbar))
        throw std::invalid_argument("build_modulus: lower bound leaves no room below 2^tbar");

    // Smooth part: square the first k primes until prod(e_i) = 2^k reaches
    // the threshold.
    unsigned k = 0;
    long prod_e = 1;
    while (prod_e < profile.min_exp_product) {
        prod_e *= 2;
        ++k;
    }
    if (k == 0) k = 1;
    const auto& primes = small_primes();
    Int smooth = 1;
    std::vector<std::pair<Int, unsigned>> factors;
    for (unsigned i = 0; i < k; ++i) {
        std::uint32_t p = primes[i];
        if (static_cast<int>(p) >= profile.nt())
            throw std::invalid_argument("build_modulus: smooth part needs primes >= n+pad");
        smooth *= Int(p) * p;
        factors.emplace_back(p, 2);
    }

    const int f_bits = profile.min_order_bits + 1;
    const int t_bits = tbar - static_cast<int>(bit_length(smooth)) - f_bits - 1;
    if (t_bits < 17)
        throw std::invalid_argument("build_modulus: tbar too small for the requested structure");

    std::size_t trials = 0;
    while (trials < trial_budget) {
        Int t = random_prime(rng, static_cast<std::size_t>(t_bits));
        for (int draw = 0; draw < 4 * tbar && trials < trial_budget; ++draw, ++trials) {
            Int f = random_prime(rng, static_cast<std::size_t>(f_bits));
            if (f == t) continue;
            Int mbar = smooth * f * t;
            Int m = mbar + 1;
            if (static_cast<int>(bit_length(m)) != tbar) continue;
            if (m <= lower_bound) continue;
            if (!is_probable_prime(m, rng)) continue;

            ModulusRecord rec;
            rec.M = m;
            rec.Mbar = mbar;
            rec.factorization = factors;
            rec.factorization.emplace_back(f, 1);
            rec.factorization.emplace_back(t, 1);
            std::sort(rec.factorization.begin(), rec.factorization.end());
            rec.order_prime = f;
            return rec;
        }
    }
    throw std::runtime_error("build_modulus: trial budget exhausted (incompatible profile?)");
}

} // namespace juna
