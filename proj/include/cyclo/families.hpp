#pragma once

// Parametric families of prime triples whose coefficient sequences attain
// the extreme spread p. The base family (after Moeller) takes
//
//     q = 2 (mod p),   r = (p-1)/2 (mod p),   r = (q-1)/2 (mod q),
//
// and at k = (p-1)(qr+1)/2 reaches a(k) = (p+1)/2 next to
// a(k - r) = -(p-1)/2; the value (p-1)/2 also appears at the classical
// index (p-3)(qr+1)/2. The mirrored family flips both residues,
//
//     r = (p+1)/2 (mod p),   r = (q+1)/2 (mod q),
//
// and at k = (p-1)(qr+1)/2 + q reaches -(p+1)/2 next to (p-1)/2. Both
// exhibit spread exactly p, the largest possible.

#include <optional>

#include "cyclo/kaplan.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/properties.hpp"

namespace cyclo {

enum class FamilyKind { Moeller, MoellerMirror };

struct FamilyInstance {
    FamilyKind kind = FamilyKind::Moeller;
    i64 p = 0, q = 0, r = 0;
    i64 n = 0;
    i64 k = 0;                        // index of the extreme coefficient
    i64 value_at_k = 0;               // expected a(k)
    i64 value_at_k_minus_r = 0;       // expected a(k - r)
    std::optional<i64> lehmer_index;  // base family only
    i64 lehmer_value = 0;

    i64 lo() const { return std::min(value_at_k, value_at_k_minus_r); }
    i64 hi() const { return std::max(value_at_k, value_at_k_minus_r); }
};

// Smallest qualifying q, then smallest qualifying r, both bounded by limit.
inline FamilyInstance find_family_instance(FamilyKind kind, i64 p, i64 limit = 2'000'000) {
    if (p <= 3 || !is_prime(static_cast<u64>(p))) {
        throw InvalidPrimes("find_family_instance: p must be a prime >= 5");
    }
    i64 q = 0;
    for (i64 c = p + 2; c <= limit; c += p) {
        if (is_prime(static_cast<u64>(c))) {
            q = c;
            break;
        }
    }
    if (q == 0) throw SearchExhausted("find_family_instance: no q = 2 (mod p) up to " +
                                      std::to_string(limit));

    bool mirror = kind == FamilyKind::MoellerMirror;
    i64 rp = mirror ? (p + 1) / 2 : (p - 1) / 2;
    i64 rq = mirror ? (q + 1) / 2 : (q - 1) / 2;
    i64 pq = checked_mul(p, q);
    i64 r = 0;
    for (i64 c = crt2(rp, p, rq, q); c <= limit; c += pq) {
        if (c > q && is_prime(static_cast<u64>(c))) {
            r = c;
            break;
        }
    }
    if (r == 0) throw SearchExhausted("find_family_instance: no qualifying r up to " +
                                      std::to_string(limit));

    FamilyInstance inst;
    inst.kind = kind;
    inst.p = p;
    inst.q = q;
    inst.r = r;
    inst.n = checked_mul(pq, r);
    i64 half = checked_mul(q, r) / 2 + 1;  // (qr+1)/2, qr is odd
    inst.k = checked_mul(p - 1, half);
    if (mirror) {
        inst.k = checked_add(inst.k, q);
        inst.value_at_k = -(p + 1) / 2;
        inst.value_at_k_minus_r = (p - 1) / 2;
    } else {
        inst.value_at_k = (p + 1) / 2;
        inst.value_at_k_minus_r = -(p - 1) / 2;
        inst.lehmer_index = checked_mul(p - 3, half);
        inst.lehmer_value = (p - 1) / 2;
    }
    return inst;
}

struct FamilyCheck {
    FamilyInstance inst;
    i64 at_k = 0;
    i64 at_k_minus_r = 0;
    std::optional<i64> at_lehmer;
    bool oracle_used = false;
    bool ok = false;  // every computed value matched its expectation
};

// Recomputes the family's predicted coefficients per-index and, when the
// degree fits under oracle_cap, also via full expansion.
inline FamilyCheck verify_family(const FamilyInstance& inst, u64 oracle_cap = default_degree_cap()) {
    FamilyCheck chk;
    chk.inst = inst;
    KaplanContext ctx = make_kaplan_context(inst.p, inst.q, inst.r);
    chk.at_k = ternary_coeff(inst.k, ctx);
    chk.at_k_minus_r = ternary_coeff(inst.k - inst.r, ctx);
    chk.ok = chk.at_k == inst.value_at_k && chk.at_k_minus_r == inst.value_at_k_minus_r;
    if (inst.lehmer_index) {
        chk.at_lehmer = ternary_coeff(*inst.lehmer_index, ctx);
        chk.ok = chk.ok && *chk.at_lehmer == inst.lehmer_value;
    }
    if (static_cast<u64>(ctx.phi) <= oracle_cap) {
        CoeffVector f = cyclotomic_poly(static_cast<u64>(inst.n), oracle_cap);
        chk.oracle_used = true;
        chk.ok = chk.ok && f.at(inst.k) == chk.at_k && f.at(inst.k - inst.r) == chk.at_k_minus_r;
        if (inst.lehmer_index) chk.ok = chk.ok && f.at(*inst.lehmer_index) == *chk.at_lehmer;
    }
    return chk;
}

struct OptimalRangeCheck {
    CoeffSummary summary;               // of the full expansion
    std::vector<i64> window_present;    // values attained on [k-r, k], ascending
    bool set_is_full_range = false;     // attained set == [lo, hi] with no gaps
    bool window_covers = false;         // the window alone attains all of [lo, hi]
    bool optimal = false;               // spread == p
};

// Expands the instance fully and checks that the attained coefficient set
// is exactly [lo, hi], that the short window [k-r, k] already attains all
// of it, and that the spread is the extreme value p.
inline OptimalRangeCheck verify_optimal_range(const FamilyInstance& inst,
                                              u64 oracle_cap = default_degree_cap()) {
    OptimalRangeCheck chk;
    CoeffVector f = cyclotomic_poly(static_cast<u64>(inst.n), oracle_cap);
    chk.summary = coeff_set(f);
    std::set<i64> window;
    for (i64 k = inst.k - inst.r; k <= inst.k; ++k) window.insert(f.at(k));
    chk.window_present.assign(window.begin(), window.end());
    chk.set_is_full_range =
        chk.summary.min == inst.lo() && chk.summary.max == inst.hi() && chk.summary.gaps.empty();
    chk.window_covers = static_cast<i64>(window.size()) == inst.hi() - inst.lo() + 1 &&
                        *window.begin() == inst.lo() && *window.rbegin() == inst.hi();
    chk.optimal = chk.summary.max - chk.summary.min == inst.p;
    return chk;
}

}  // namespace cyclo
