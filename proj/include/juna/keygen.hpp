#pragma once

#include <vector>

#include "juna/arith.hpp"
#include "juna/coprime.hpp"
#include "juna/profile.hpp"
#include "juna/types.hpp"

namespace juna {

/// The secret lever values l(1)...l(3*nt/2). Triple j holds a signed
/// permutation of {6j-1, 6j+1, 6j+3}: every magnitude used once inside the
/// triple, each with an independent sign, so all values are odd and all
/// magnitudes distinct across the set.
struct LeverSet {
    std::vector<long> values;

    std::size_t size() const { return values.size(); }
    long operator[](std::size_t index0) const { return values[index0]; }
};

inline LeverSet gen_omega(int nt, Rng& rng) {
    if (nt < 2 || nt % 2 != 0) throw std::invalid_argument("gen_omega: nt must be even and positive");
    LeverSet out;
    out.values.reserve(static_cast<std::size_t>(3 * nt / 2));
    for (int j = 1; j <= nt / 2; ++j) {
        long mags[3] = {6L * j - 1, 6L * j + 1, 6L * j + 3};
        for (int i = 2; i > 0; --i) std::swap(mags[i], mags[rng() % static_cast<unsigned>(i + 1)]);
        for (long m : mags) out.values.push_back(random_bit(rng) ? m : -m);
    }
    return out;
}

struct PublicKey {
    SchemeProfile profile;
    std::vector<Int> C; // C_1..C_{3*nt/2}
    Int M;
};

struct PrivateKey {
    SchemeProfile profile;
    CoprimeSequence A;
    Int W;
    Int delta;
    Int delta_inv; // delta^-1 mod M-1, cached for decryption
    ModulusRecord mod;
};

/// Everything the paper discards after key generation, retained in memory
/// only so the key-transform identities stay testable. Never serialized.
struct DebugKey {
    LeverSet levers;
    Int w_order; // ||W||
};

struct KeyMaterial {
    PublicKey pub;
    PrivateKey prv;
    DebugKey debug;
};

/// Key generation: coprime sequence, structured modulus above the
/// decryption bound, lever set, W of guaranteed large order, and the
/// transform C_i = (A_i * W^l(i))^delta mod M.
inline KeyMaterial keygen(const SchemeProfile& profile, Rng& rng) {
    profile.validate();

    CoprimeSequence seq = gen_coprime_sequence(profile, rng);
    Int bound = modulus_lower_bound(seq, profile.nt());
    ModulusRecord mod = build_modulus(profile, bound, rng);

    LeverSet levers = gen_omega(profile.nt(), rng);

    // W = g^((M-1)/F) has order exactly F, the prime planted by
    // build_modulus, so ||W|| >= 2^min_order_bits holds by construction.
    Int g = find_generator(mod, rng);
    Int w = mod_pow(g, mod.Mbar / mod.order_prime, mod.M);

    Int delta;
    do {
        delta = random_range(rng, 2, mod.Mbar - 1);
    } while (boost::multiprecision::gcd(delta, mod.Mbar) != 1);

    KeyMaterial out;
    out.prv = PrivateKey{profile, std::move(seq), w, delta, mod_inverse(delta, mod.Mbar), mod};
    out.pub.profile = profile;
    out.pub.M = mod.M;
    out.pub.C.reserve(static_cast<std::size_t>(profile.seq_len()));
    for (std::size_t i = 0; i < out.prv.A.size(); ++i) {
        Int base = out.prv.A.elements[i] * mod_pow(w, levers[i], mod.M) % mod.M;
        out.pub.C.push_back(mod_pow(base, delta, mod.M));
    }
    out.debug = DebugKey{std::move(levers), mod.order_prime};
    return out;
}

} // namespace juna
