#pragma once

// Exact 64-bit integer number theory: overflow-checked ops, deterministic
// primality, factorization, totient, modular inverse, CRT, sieves.
// Everything here is pure and safe to call concurrently.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("i64 add overflow");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("i64 sub overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("i64 mul overflow");
    return r;
}

inline u64 checked_mul_u64(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("u64 mul overflow");
    return r;
}

// Least non-negative residue, valid for negative a as well.
inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the first twelve primes are a proven witness
// set for every 64-bit input.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors;  // (prime, exponent), primes ascending

    int distinct_count() const { return static_cast<int>(factors.size()); }

    int total_count() const {
        int c = 0;
        for (const auto& [p, e] : factors) c += e;
        return c;
    }

    int distinct_odd_count() const {
        int c = 0;
        for (const auto& [p, e] : factors) c += (p != 2);
        return c;
    }

    u64 radical() const {
        u64 r = 1;
        for (const auto& [p, e] : factors) r *= p;
        return r;
    }
};

inline Factorization factorize(u64 n) {
    if (n == 0) throw OutOfRange("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

inline u64 euler_phi(const Factorization& f) {
    u64 phi = f.n;
    for (const auto& [p, e] : f.factors) phi = phi / p * (p - 1);
    return phi;
}

inline u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

// Inverse of a modulo m (m >= 2) by the extended Euclidean algorithm.
inline i64 mod_inverse(i64 a, i64 m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    i64 r0 = m, r1 = mod_floor(a, m);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) {
        throw NotInvertible("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                            std::to_string(m));
    }
    return mod_floor(t0, m);
}

// Unique x in [0, m1*m2) with x = r1 (mod m1) and x = r2 (mod m2).
inline i64 crt2(i64 r1, i64 m1, i64 r2, i64 m2) {
    if (m1 < 1 || m2 < 1) throw std::invalid_argument("crt2: moduli must be >= 1");
    if (std::gcd(m1, m2) != 1) {
        throw NotCoprime("crt2: moduli " + std::to_string(m1) + " and " + std::to_string(m2) +
                         " are not coprime");
    }
    checked_mul(m1, m2);
    r1 = mod_floor(r1, m1);
    if (m2 == 1) return r1;
    i64 t = mod_floor(mod_floor(r2, m2) - r1, m2);
    t = static_cast<i64>(i128(t) * mod_inverse(m1 % m2, m2) % m2);
    return r1 + m1 * t;
}

inline std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (u64 m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return primes;
}

// Smallest-prime-factor table for fast factorization of many small n.
inline std::vector<std::uint32_t> spf_sieve(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i) {
                if (spf[j] == 0) spf[j] = i;
            }
        }
    }
    return spf;
}

inline Factorization factorize_with_spf(std::uint32_t n, const std::vector<std::uint32_t>& spf) {
    if (n == 0 || n >= spf.size()) throw OutOfRange("factorize_with_spf: n outside sieve range");
    Factorization f;
    f.n = n;
    while (n > 1) {
        std::uint32_t p = spf[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    return f;
}

}  // namespace cyclo
