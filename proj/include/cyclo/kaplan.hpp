#pragma once

// Per-coefficient evaluation for three odd primes p < q < r via Kaplan's
// lemma: with f(m) the representative of r^{-1}(k - m) in [0, pq),
//
//     a_pqr(k) = sum_{m=0}^{p-1} ( b(f(m)) - b(f(m+q)) ),
//
// where b(i) is the (p,q) coefficient at i truncated by r*i <= k. The sum
// is valid for every k >= 0 (indices past the degree give 0). Each call
// costs O(p) modular steps; no polynomial is expanded.

#include <vector>

#include "cyclo/binary.hpp"

namespace cyclo {

struct PrimeTriple {
    i64 p = 0;
    i64 q = 0;
    i64 r = 0;
};

struct KaplanContext {
    PrimeTriple triple;
    BinaryContext binary;  // context for the pair (p, q)
    i64 r_inv = 0;         // r^{-1} mod pq
    i64 n = 0;             // p*q*r
    i64 phi = 0;           // (p-1)(q-1)(r-1)
};

inline KaplanContext make_kaplan_context(i64 p, i64 q, i64 r) {
    if (q <= p || r <= q || !is_prime(static_cast<u64>(r))) {
        throw InvalidPrimes("make_kaplan_context: need odd primes p < q < r");
    }
    KaplanContext ctx;
    ctx.triple = {p, q, r};
    ctx.binary = make_context(p, q);
    ctx.r_inv = mod_inverse(r % ctx.binary.pq, ctx.binary.pq);
    ctx.n = checked_mul(ctx.binary.pq, r);
    ctx.phi = (p - 1) * (q - 1) * (r - 1);
    return ctx;
}

// Representative of r^{-1}(k - m) modulo pq, in [0, pq).
inline i64 f_index(i64 m, i64 k, const KaplanContext& ctx) {
    i64 pq = ctx.binary.pq;
    i64 t = mod_floor(k - m, pq);
    return static_cast<i64>(i128(t) * ctx.r_inv % pq);
}

inline i64 ternary_coeff(i64 k, const KaplanContext& ctx) {
    if (k < 0) throw std::invalid_argument("ternary_coeff: k must be >= 0");
    const i64 pq = ctx.binary.pq;
    const i64 r = ctx.triple.r;
    // f(m) and f(m+q) both drop by r_inv (mod pq) as m steps by 1.
    i64 fm = f_index(0, k, ctx);
    i64 fmq = fm - static_cast<i64>(i128(ctx.triple.q) * ctx.r_inv % pq);
    if (fmq < 0) fmq += pq;
    i64 acc = 0;
    for (i64 m = 0; m < ctx.triple.p; ++m) {
        acc += b_value(fm, ctx.binary, k, r) - b_value(fmq, ctx.binary, k, r);
        fm -= ctx.r_inv;
        if (fm < 0) fm += pq;
        fmq -= ctx.r_inv;
        if (fmq < 0) fmq += pq;
    }
    return acc;
}

inline std::vector<i64> coeff_range(i64 k_lo, i64 k_hi, const KaplanContext& ctx) {
    if (k_lo < 0 || k_hi < k_lo) throw std::invalid_argument("coeff_range: need 0 <= k_lo <= k_hi");
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (i64 k = k_lo; k <= k_hi; ++k) out.push_back(ternary_coeff(k, ctx));
    return out;
}

// Index pairing for a mirror prime t = -r (mod pq): writing
// n_idx = floor(n_idx / r) * r + n0 and n1 = q + p - 1 - n0 (mod pq),
// the (p,q,t) coefficient at floor(n_idx / r) * t + n1 equals the negated
// (p,q,r) coefficient at n_idx.
inline i64 mirror_index(i64 n_idx, const KaplanContext& ctx, i64 t) {
    const i64 pq = ctx.binary.pq;
    if (n_idx < 0) throw std::invalid_argument("mirror_index: index must be >= 0");
    if (t <= pq || !is_prime(static_cast<u64>(t)) || mod_floor(t + ctx.triple.r, pq) != 0) {
        throw BadMirrorPrime("mirror_index: t must be a prime > pq with t = -r (mod pq)");
    }
    i64 quot = n_idx / ctx.triple.r;
    i64 n0 = n_idx % ctx.triple.r;
    i64 n1 = mod_floor(ctx.triple.q + ctx.triple.p - 1 - n0, pq);
    return checked_add(checked_mul(quot, t), n1);
}

// Smallest prime t with pq < t <= limit and t = -r (mod pq).
inline i64 find_mirror_prime(const KaplanContext& ctx, i64 limit) {
    const i64 pq = ctx.binary.pq;
    i64 start = mod_floor(-ctx.triple.r, pq);
    if (start <= pq) start += pq * ((pq - start) / pq + 1);
    for (i64 t = start; t <= limit; t += pq) {
        if (is_prime(static_cast<u64>(t))) return t;
    }
    throw SearchExhausted("find_mirror_prime: no prime = -r (mod pq) up to " +
                          std::to_string(limit));
}

}  // namespace cyclo
