#pragma once

// Coefficients of the two-prime cyclotomic polynomial, evaluated in closed
// form. For odd primes p < q there are unique non-negative rho, sigma with
//
//     1 + pq = (rho + 1) * p + (sigma + 1) * q,
//
// and the coefficient of x^m in the (p,q) cyclotomic polynomial is
//
//     +1  if  [m]_p <= rho and [m]_q <= sigma,
//     -1  if  [m]_p >  rho and [m]_q >  sigma,
//      0  otherwise,
//
// where [m]_p in [0, q) solves [m]_p * p = m (mod q) and [m]_q in [0, p)
// solves [m]_q * q = m (mod p). No polynomial is ever expanded here.

#include "cyclo/arith.hpp"

namespace cyclo {

struct PartPair {
    i64 p_part;  // [m]_p, in [0, q)
    i64 q_part;  // [m]_q, in [0, p)
};

struct BinaryContext {
    i64 p = 0;
    i64 q = 0;
    i64 pq = 0;
    i64 rho = 0;
    i64 sigma = 0;
    i64 p_inv_mod_q = 0;
    i64 q_inv_mod_p = 0;
};

inline PartPair parts(i64 m, const BinaryContext& ctx) {
    if (m < 0 || m >= ctx.pq) throw OutOfRange("parts: index must lie in [0, pq)");
    PartPair pp;
    pp.p_part = static_cast<i64>(i128(m % ctx.q) * ctx.p_inv_mod_q % ctx.q);
    pp.q_part = static_cast<i64>(i128(m % ctx.p) * ctx.q_inv_mod_p % ctx.p);
    return pp;
}

inline BinaryContext make_context(i64 p, i64 q) {
    if (p <= 2 || q <= p || !is_prime(static_cast<u64>(p)) || !is_prime(static_cast<u64>(q))) {
        throw InvalidPrimes("make_context: need odd primes p < q");
    }
    BinaryContext ctx;
    ctx.p = p;
    ctx.q = q;
    ctx.pq = checked_mul(p, q);
    ctx.p_inv_mod_q = mod_inverse(p, q);
    ctx.q_inv_mod_p = mod_inverse(q, p);

    // 1 + pq = (rho+1)p + (sigma+1)q has exactly one solution with
    // rho in [0, q-1) and sigma in [0, p-1).
    bool found = false;
    for (i64 sigma = 0; sigma < p - 1; ++sigma) {
        i64 rest = 1 + ctx.pq - (sigma + 1) * q;
        if (rest > 0 && rest % p == 0) {
            ctx.rho = rest / p - 1;
            ctx.sigma = sigma;
            found = true;
            break;
        }
    }
    if (!found || ctx.rho < 0 || ctx.rho >= q - 1) {
        throw Error("make_context: no decomposition of 1 + pq (unreachable)");
    }

    // Independent derivation: rho and sigma are the parts of (p-1)(q-1).
    PartPair check = parts((p - 1) * (q - 1) % ctx.pq, ctx);
    if (check.p_part != ctx.rho || check.q_part != ctx.sigma) {
        throw Error("make_context: rho/sigma cross-check failed (unreachable)");
    }
    return ctx;
}

inline int binary_coeff(i64 m, const BinaryContext& ctx) {
    PartPair pp = parts(m, ctx);
    bool lo_p = pp.p_part <= ctx.rho;
    bool lo_q = pp.q_part <= ctx.sigma;
    if (lo_p && lo_q) return 1;
    if (!lo_p && !lo_q) return -1;
    return 0;
}

// Truncated value used by the three-prime formula: the coefficient at i,
// kept only while r*i <= k.
inline int b_value(i64 i, const BinaryContext& ctx, i64 k, i64 r) {
    if (i128(r) * i > k) return 0;
    return binary_coeff(i, ctx);
}

}  // namespace cyclo
