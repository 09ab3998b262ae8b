#pragma once

#include <stdexcept>
#include <string>

namespace juna {

/// All public parameters of one scheme instance.
///
/// The three full-scale profiles are fixed; the toy profile shrinks the
/// thresholds far enough that exhaustive enumeration over plaintexts,
/// paddings and permutation strings stays tractable.
struct SchemeProfile {
    std::string name;
    int n = 0;    // plaintext block bits
    int pad = 0;  // random padding bits appended before encryption
    int tbar = 0; // modulus bit length, ceil(lg M)
    int pbar = 0; // maximal element of the coprime sequence

    // prod(e_i) threshold for the smooth part of M-1, and the exponent
    // threshold for ||W|| (||W|| >= 2^min_order_bits).
    long min_exp_product = 1;
    int min_order_bits = 1;

    // Allow same-prime triples such as (3, 9, 27) inside one triple of the
    // coprime sequence. Off by default; the two largest profiles need it
    // because there are not enough odd primes <= pbar otherwise.
    bool note2_relaxation = false;

    int nt() const { return n + pad; }          // padded block bits
    int half() const { return nt() / 2; }       // number of bit-pairs
    int seq_len() const { return 3 * nt() / 2; } // coprime sequence length

    void validate() const {
        if (n < 2 || n % 2 != 0) throw std::invalid_argument("profile: n must be even and >= 2");
        if (pad < 2 || pad % 2 != 0) throw std::invalid_argument("profile: pad must be even and >= 2");
        // nt/2 must itself be even or the lever sum k could be odd and the
        // decryption search over even k would never terminate.
        if (nt() % 4 != 0) throw std::invalid_argument("profile: n + pad must be divisible by 4");
        if (tbar < 16) throw std::invalid_argument("profile: tbar too small");
        if (pbar < 5) throw std::invalid_argument("profile: pbar too small");
        if (min_exp_product < 1) throw std::invalid_argument("profile: min_exp_product must be >= 1");
        if (min_order_bits < 1) throw std::invalid_argument("profile: min_order_bits must be >= 1");
    }

    static SchemeProfile toy() {
        return {"toy", 8, 4, 44, 101, 4, 10, false};
    }
    static SchemeProfile n80() {
        return {"n80", 80, 16, 464, 937, 1024, 60, false};
    }
    static SchemeProfile n96() {
        return {"n96", 96, 16, 544, 991, 1024, 76, true};
    }
    static SchemeProfile n112() {
        return {"n112", 112, 16, 640, 1201, 1024, 92, true};
    }

    static SchemeProfile by_name(const std::string& name) {
        if (name == "toy") return toy();
        if (name == "n80") return n80();
        if (name == "n96") return n96();
        if (name == "n112") return n112();
        throw std::invalid_argument("unknown profile '" + name + "' (expected toy, n80, n96 or n112)");
    }
};

} // namespace juna
