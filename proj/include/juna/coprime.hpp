#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "juna/arith.hpp"
#include "juna/profile.hpp"
#include "juna/shadow.hpp"
#include "juna/types.hpp"

namespace juna {

/// The private sequence A_1...A_{3*nt/2}, viewed as nt/2 triples
/// (A_{3j-2}, A_{3j-1}, A_{3j}). Generated sequences contain only odd
/// elements; the Definition-1 checks below also accept arbitrary inputs.
struct CoprimeSequence {
    std::vector<Int> elements;

    std::size_t size() const { return elements.size(); }
    std::size_t triple_count() const { return elements.size() / 3; }

    /// A_{3(i-1)+B} for 0-based pair index i and pair value b in {1,2,3}.
    const Int& element(std::size_t pair_index, int b) const {
        return elements.at(3 * pair_index + static_cast<std::size_t>(b) - 1);
    }
};

namespace detail {

// Definition-1 scan. Pairs (i, j) lying in the same triple are exempt when
// triple_exempt is set (the same-prime-triple relaxation); only one element
// of a triple can ever occur in a product, so sharing inside one is harmless.
inline bool coprime_condition(const std::vector<Int>& seq, bool triple_exempt) {
    const std::size_t n = seq.size();
    for (const Int& a : seq)
        if (a <= 0) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (seq[i] == seq[j]) return false; // pairwise distinct
            if (triple_exempt && i / 3 == j / 3) continue;
            Int f = boost::multiprecision::gcd(seq[i], seq[j]);
            if (f == 1) continue;
            Int ci = seq[i] / f, cj = seq[j] / f;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (seq[k] % ci == 0 || seq[k] % cj == 0) return false;
            }
        }
    return true;
}

inline std::size_t bounded_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

template <typename T>
inline void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded_index(rng, i)]);
}

} // namespace detail

/// Definition-1 check: for every pair with gcd F != 1, neither cofactor
/// divides any other element.
inline bool is_coprime_sequence(const std::vector<Int>& seq) {
    return detail::coprime_condition(seq, false);
}

/// Definition-1 check with same-triple pairs exempt; this is the condition
/// generated key sequences satisfy when same-prime triples are enabled.
inline bool is_key_sequence(const std::vector<Int>& seq) {
    return detail::coprime_condition(seq, true);
}

/// max(A_{3j-2}, A_{3j-1}, A_{3j}) for each triple j.
inline std::vector<Int> triple_maxima(const CoprimeSequence& seq) {
    std::vector<Int> maxima;
    maxima.reserve(seq.triple_count());
    for (std::size_t j = 0; j < seq.triple_count(); ++j)
        maxima.push_back(std::max({seq.elements[3 * j], seq.elements[3 * j + 1], seq.elements[3 * j + 2]}));
    return maxima;
}

/// The decryption-soundness bound from key generation: with the triple
/// maxima sorted descending, Amax_1^(nt/4+1) * Amax_2 * ... * Amax_{nt/4}.
/// Every admissible anomalous product stays <= this value, so any prime
/// modulus above it decodes by exact division.
inline Int modulus_lower_bound(const CoprimeSequence& seq, int nt) {
    if (nt < 4 || nt % 4 != 0) throw std::invalid_argument("modulus_lower_bound: nt must be a positive multiple of 4");
    if (seq.size() != static_cast<std::size_t>(3 * nt / 2))
        throw std::invalid_argument("modulus_lower_bound: sequence length does not match nt");
    std::vector<Int> maxima = triple_maxima(seq);
    std::sort(maxima.begin(), maxima.end(), std::greater<>());
    const int quarter = nt / 4;
    Int bound = 1;
    for (int i = 0; i < quarter + 1; ++i) bound *= maxima[0];
    for (int i = 1; i < quarter; ++i) bound *= maxima[static_cast<std::size_t>(i)];
    return bound;
}

/// Subset product G' over the non-00 pairs: prod A_{3(i-1)+B_i}.
inline Int subset_product(const CoprimeSequence& seq, const BitPairString& p) {
    if (p.size() != seq.triple_count())
        throw std::invalid_argument("subset_product: pair string length does not match sequence");
    Int g = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.pairs[i] != 0) g *= seq.element(i, p.pairs[i]);
    return g;
}

/// Anomalous product G: prod A_{3(i-1)+B_i}^{shadow_i}.
inline Int anomalous_product(const CoprimeSequence& seq, const BitPairString& p) {
    if (p.size() != seq.triple_count())
        throw std::invalid_argument("anomalous_product: pair string length does not match sequence");
    PairShadowString sh = pair_shadow(p); // rejects the all-zero string
    Int g = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.pairs[i] != 0) {
            Int e = seq.element(i, p.pairs[i]);
            for (int rep = 0; rep < sh.shadows[i]; ++rep) g *= e;
        }
    return g;
}

/// Random coprime sequence for a profile: 3*nt/2 distinct odd elements
/// <= pbar passing the Definition-1 condition, with a lower bound small
/// enough that a tbar-bit modulus above it exists.
///
/// Elements are odd primes, preferring small ones; when the profile allows
/// same-prime triples, power groups such as (3, 9, 27) or (11, 121) are
/// brought in as needed, each freeing one of the largest primes. Partitions
/// are re-drawn (and finally packed deterministically) until the bound fits
/// below 2^(tbar-1).
inline CoprimeSequence gen_coprime_sequence(const SchemeProfile& profile, Rng& rng) {
    profile.validate();
    const std::size_t m = static_cast<std::size_t>(profile.seq_len());
    const Int bound_limit = Int(1) << (profile.tbar - 1);

    std::vector<long> pool; // odd primes <= pbar, ascending
    for (std::uint32_t p : small_primes()) {
        if (static_cast<int>(p) > profile.pbar) break;
        if (p != 2) pool.push_back(static_cast<long>(p));
    }

    // Optional same-prime groups, small bases first. A triple group fills a
    // whole triple; a pair group is completed by one ordinary prime.
    struct Group {
        long base;
        std::vector<long> members;
    };
    std::vector<Group> expanders;
    if (profile.note2_relaxation) {
        for (long p : {3L, 5L, 7L})
            if (p * p * p <= profile.pbar) expanders.push_back({p, {p, p * p, p * p * p}});
        for (long p : pool) {
            if (p <= 7) continue;
            if (p * p > profile.pbar) break;
            expanders.push_back({p, {p, p * p}});
        }
    }

    for (std::size_t use = 0; use <= expanders.size(); ++use) {
        std::vector<Group> groups(expanders.begin(), expanders.begin() + static_cast<long>(use));
        std::size_t group_elems = 0;
        for (const auto& g : groups) group_elems += g.members.size();
        if (group_elems > m) break;
        const std::size_t need = m - group_elems;

        std::vector<long> singles_pool;
        for (long p : pool)
            if (std::none_of(groups.begin(), groups.end(), [&](const Group& g) { return g.base == p; }))
                singles_pool.push_back(p);
        if (need > singles_pool.size()) continue;

        // Random drop inside a small window keeps the selection biased to
        // the small primes the bound needs.
        const std::size_t slack = std::min<std::size_t>(8, singles_pool.size() - need);
        std::vector<long> window(singles_pool.begin(),
                                 singles_pool.begin() + static_cast<long>(need + slack));
        detail::shuffle_vec(window, rng);
        window.resize(need);

        auto assemble = [&](const std::vector<long>& singles,
                            bool sorted_packing) -> CoprimeSequence {
            std::vector<std::vector<long>> triples;
            std::vector<long> rest = singles;
            if (sorted_packing)
                std::sort(rest.begin(), rest.end(), std::greater<>());
            else
                detail::shuffle_vec(rest, rng);
            // Pair groups take the smallest singles as their third element.
            std::vector<const Group*> pair_groups;
            for (const auto& g : groups)
                if (g.members.size() == 2) pair_groups.push_back(&g);
            for (const Group* g : pair_groups) {
                auto it = std::min_element(rest.begin(), rest.end());
                std::vector<long> t = g->members;
                t.push_back(*it);
                rest.erase(it);
                triples.push_back(std::move(t));
            }
            for (const auto& g : groups)
                if (g.members.size() == 3) triples.push_back(g.members);
            for (std::size_t i = 0; i + 3 <= rest.size(); i += 3)
                triples.push_back({rest[i], rest[i + 1], rest[i + 2]});

            detail::shuffle_vec(triples, rng);
            CoprimeSequence seq;
            seq.elements.reserve(m);
            for (auto& t : triples) {
                detail::shuffle_vec(t, rng);
                for (long v : t) seq.elements.emplace_back(v);
            }
            if (seq.elements.size() != m)
                throw std::logic_error("gen_coprime_sequence: internal partition mismatch");
            return seq;
        };

        for (int attempt = 0; attempt < 64; ++attempt) {
            CoprimeSequence seq = assemble(window, attempt == 63);
            if (modulus_lower_bound(seq, profile.nt()) < bound_limit) return seq;
        }
        // Bound infeasible at this expander level; widen if possible.
    }
    throw std::runtime_error("gen_coprime_sequence: prime pool exhausted for this profile");
}

} // namespace juna
