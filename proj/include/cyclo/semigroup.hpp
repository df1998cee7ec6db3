#pragma once

// Numerical semigroups from a finite generating set: membership of every
// non-negative integer combination, the Frobenius number (largest gap),
// and the associated polynomial P_S(x) = (1 - x) * sum_{s in S} x^s, a
// polynomial of degree F(S) + 1 exactly when gcd(generators) = 1. For two
// coprime generators p, q this polynomial is the (p,q) cyclotomic
// polynomial, which gives an independent route to its coefficients.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "cyclo/binary.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

struct SemigroupTable {
    std::vector<i64> generators;            // sorted, deduplicated
    std::vector<std::uint8_t> membership;   // membership[x] for x in [0, bound]
    i64 bound = 0;
    std::optional<i64> frobenius;           // largest gap; -1 if none; empty if gcd > 1

    bool numerical() const { return frobenius.has_value(); }

    bool contains(i64 x) const {
        if (x < 0) return false;
        if (x <= bound) return membership[static_cast<std::size_t>(x)] != 0;
        if (numerical()) return true;  // bound always covers the last gap
        throw OutOfRange("contains: index beyond truncated table");
    }
};

namespace detail {

inline void extend_membership(std::vector<std::uint8_t>& member, const std::vector<i64>& gens,
                              std::size_t upto) {
    std::size_t old = member.size();
    member.resize(upto + 1, 0);
    if (old == 0) {
        member[0] = 1;
        old = 1;
    }
    for (std::size_t x = old; x <= upto; ++x) {
        for (i64 g : gens) {
            if (static_cast<std::size_t>(g) > x) break;
            if (member[x - static_cast<std::size_t>(g)]) {
                member[x] = 1;
                break;
            }
        }
    }
}

}  // namespace detail

// Builds the membership table. For a numerical set (gcd 1) the table is
// grown until a full run of min(generators) consecutive members appears,
// which certifies every later integer is a member; the Frobenius number is
// then the last gap before that run. For gcd > 1 the table is truncated at
// truncation_cap and no Frobenius number exists.
inline SemigroupTable build_table(std::vector<i64> generators, i64 truncation_cap = i64{1} << 16) {
    if (generators.empty()) throw std::invalid_argument("build_table: need at least one generator");
    for (i64 g : generators) {
        if (g < 1) throw std::invalid_argument("build_table: generators must be >= 1");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    SemigroupTable t;
    t.generators = generators;
    i64 g = 0;
    for (i64 gen : generators) g = std::gcd(g, gen);

    if (g != 1) {
        detail::extend_membership(t.membership, generators, static_cast<std::size_t>(truncation_cap));
        t.bound = truncation_cap;
        return t;
    }

    const i64 window = generators.front();
    constexpr i64 kHardCap = i64{1} << 28;
    i64 bound = window;
    for (std::size_t i = 1; i < generators.size(); ++i) {
        bound = checked_add(bound, checked_mul(generators[i - 1], generators[i]));
    }
    while (true) {
        if (bound > kHardCap) throw TooLarge("build_table: certified bound exceeds hard cap");
        detail::extend_membership(t.membership, generators, static_cast<std::size_t>(bound));
        i64 run = 0;
        i64 run_end = -1;
        for (i64 x = 0; x <= bound; ++x) {
            run = t.membership[static_cast<std::size_t>(x)] ? run + 1 : 0;
            if (run == window) {
                run_end = x;
                break;
            }
        }
        if (run_end >= 0) {
            i64 frob = -1;
            for (i64 x = run_end; x >= 0; --x) {
                if (!t.membership[static_cast<std::size_t>(x)]) {
                    frob = x;
                    break;
                }
            }
            t.frobenius = frob;
            t.bound = bound;
            return t;
        }
        bound = checked_mul(bound, 2);
    }
}

inline std::optional<i64> frobenius(const SemigroupTable& t) { return t.frobenius; }

// (1 - x) * H_S(x) truncated at degree F(S) + 1, where H_S is the
// generating function of membership. Requires a numerical table.
inline CoeffVector semigroup_polynomial(const SemigroupTable& t) {
    if (!t.numerical()) throw NotNumerical("semigroup_polynomial: generators have gcd > 1");
    i64 deg = *t.frobenius + 1;
    CoeffVector f;
    f.coeffs.assign(static_cast<std::size_t>(deg) + 1, 0);
    for (i64 k = 0; k <= deg; ++k) {
        i64 cur = t.contains(k) ? 1 : 0;
        i64 prev = k > 0 && t.contains(k - 1) ? 1 : 0;
        f.coeffs[static_cast<std::size_t>(k)] = cur - prev;
    }
    f.normalize();
    return f;
}

// Coefficient of x^k in the (p,q) cyclotomic polynomial, read off the
// semigroup generated by p and q as the difference sequence of its
// membership indicator. Bypasses both the closed form and the expansion.
inline int binary_via_semigroup(i64 p, i64 q, i64 k) {
    if (p <= 2 || q <= p || !is_prime(static_cast<u64>(p)) || !is_prime(static_cast<u64>(q))) {
        throw InvalidPrimes("binary_via_semigroup: need odd primes p < q");
    }
    if (k < 0) throw std::invalid_argument("binary_via_semigroup: k must be >= 0");
    SemigroupTable t = build_table({p, q});
    i64 deg = *t.frobenius + 1;
    if (k > deg) return 0;
    i64 cur = t.contains(k) ? 1 : 0;
    i64 prev = k > 0 && t.contains(k - 1) ? 1 : 0;
    return static_cast<int>(cur - prev);
}

struct IndicatorResult {
    bool ok = false;                // prefix sums all landed in {0, 1}
    std::vector<i64> partial_sums;  // sigma(k) for k = 0..degree
    std::vector<i64> exponents;     // indices with sigma(k) == 1, when ok
};

// Tests whether the n-th cyclotomic polynomial can be written as
// (1 - x) * sum_{s in S} x^s for a set S of non-negative integers, by
// checking that all prefix sums of its coefficients are 0 or 1.
inline IndicatorResult indicator_check(u64 n, u64 cap = default_degree_cap()) {
    CoeffVector f = cyclotomic_poly(n, cap);
    IndicatorResult r;
    r.ok = true;
    r.partial_sums.reserve(f.coeffs.size());
    i64 sum = 0;
    for (i64 c : f.coeffs) {
        sum += c;
        r.partial_sums.push_back(sum);
        if (sum != 0 && sum != 1) r.ok = false;
    }
    if (r.ok) {
        for (std::size_t k = 0; k < r.partial_sums.size(); ++k) {
            if (r.partial_sums[k] == 1) r.exponents.push_back(static_cast<i64>(k));
        }
    }
    return r;
}

}  // namespace cyclo
