#pragma once

// Structure of a coefficient sequence: the set of values attained, gaps in
// its span, flatness, neighbour jumps, and convexity. Also the bulk scans
// built on top (ternary jump check, convexity sweeps, height grids).
// Convexity asks that the attained values together with 0 form a block of
// consecutive integers; the strong form drops the "together with 0".

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "cyclo/kaplan.hpp"
#include "cyclo/parallel.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

struct CoeffSummary {
    i64 min = 0;
    i64 max = 0;
    std::vector<i64> present;  // attained values, ascending
    std::vector<i64> gaps;     // integers in [min, max] never attained, ascending
    bool zero_included = false;
    bool flat = false;
    bool jump_one = false;
    bool convex = false;
    bool strongly_convex = false;
};

inline CoeffSummary coeff_set(const CoeffVector& f) {
    if (f.is_zero()) throw std::invalid_argument("coeff_set: zero polynomial has no summary");
    CoeffSummary s;
    std::set<i64> values;
    s.min = s.max = f.coeffs[0];
    i64 prev = 0;  // virtual coefficient below index 0
    bool jump_ok = true;
    for (i64 c : f.coeffs) {
        values.insert(c);
        if (c < s.min) s.min = c;
        if (c > s.max) s.max = c;
        i64 d = c - prev;
        if (d > 1 || d < -1) jump_ok = false;
        prev = c;
    }
    s.present.assign(values.begin(), values.end());
    for (i64 v = s.min; v <= s.max; ++v) {
        if (!values.count(v)) s.gaps.push_back(v);
    }
    s.zero_included = values.count(0) > 0;
    s.flat = s.min >= -1 && s.max <= 1;
    s.jump_one = jump_ok;
    i64 lo0 = std::min<i64>(s.min, 0), hi0 = std::max<i64>(s.max, 0);
    s.convex = static_cast<i64>(values.size()) + (s.zero_included ? 0 : 1) == hi0 - lo0 + 1;
    s.strongly_convex = s.gaps.empty();
    return s;
}

inline bool is_flat(const CoeffSummary& s) { return s.flat; }

inline bool is_coefficient_optimal(i64 p, const CoeffSummary& s) { return s.max - s.min == p; }

struct JumpCheck {
    bool ok = true;
    i64 first_violation = -1;  // smallest k with |a(k) - a(k-1)| > 1
    i64 max_jump = 0;
    i64 max_jump_index = -1;   // smallest k attaining max_jump
};

// Neighbour differences |a(k) - a(k-1)| for k = 0..degree, with a(-1) = 0.
inline JumpCheck check_jump_one(const CoeffVector& f) {
    JumpCheck jc;
    i64 prev = 0;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        i64 d = f.coeffs[k] - prev;
        if (d < 0) d = -d;
        if (d > jc.max_jump) {
            jc.max_jump = d;
            jc.max_jump_index = static_cast<i64>(k);
        }
        if (d > 1 && jc.ok) {
            jc.ok = false;
            jc.first_violation = static_cast<i64>(k);
        }
        prev = f.coeffs[k];
    }
    return jc;
}

// --- ternary jump sweep ---------------------------------------------------

struct JumpViolation {
    u64 n = 0;
    i64 first_k = -1;
    i64 jump = 0;
};

struct JumpSweepResult {
    u64 scanned = 0;
    std::vector<JumpViolation> violations;
};

// Expands every n = p*q*r (odd primes p < q < r) up to max_n and records
// any neighbour jump exceeding 1. Findings are ordered by (p, q, r).
inline JumpSweepResult ternary_jump_sweep(u64 max_n, unsigned threads = 0) {
    std::vector<u64> primes = primes_up_to(max_n / 15 + 1);
    std::vector<PrimeTriple> items;
    for (std::size_t a = 0; a < primes.size(); ++a) {
        if (primes[a] == 2) continue;
        for (std::size_t b = a + 1; b < primes.size(); ++b) {
            u64 pq = primes[a] * primes[b];
            if (pq * primes[b] > max_n) break;
            for (std::size_t c = b + 1; c < primes.size(); ++c) {
                u64 n = pq * primes[c];
                if (n > max_n) break;
                items.push_back({static_cast<i64>(primes[a]), static_cast<i64>(primes[b]),
                                 static_cast<i64>(primes[c])});
            }
        }
    }
    auto checks = parallel_index_map<JumpCheck>(items.size(), threads, [&](std::size_t i) {
        u64 n = static_cast<u64>(items[i].p) * items[i].q * items[i].r;
        return check_jump_one(cyclotomic_poly(n, max_n));
    });
    JumpSweepResult res;
    res.scanned = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!checks[i].ok) {
            u64 n = static_cast<u64>(items[i].p) * items[i].q * items[i].r;
            res.violations.push_back({n, checks[i].first_violation, checks[i].max_jump});
        }
    }
    return res;
}

// --- convexity sweep -------------------------------------------------------

struct ConvexViolation {
    u64 n = 0;
    i64 min = 0;
    i64 max = 0;
    std::vector<i64> gaps;
};

struct ConvexSweepResult {
    u64 scanned = 0;
    std::vector<ConvexViolation> violations;
};

enum class PolyKind { Phi, Psi };

namespace detail {

// Convexity only depends on the value set together with 0, and reindexing
// through x -> x^s never changes that set beyond possibly adding 0. So each
// verdict is computed once per radical and reused for every n above it.
struct ConvexWorkerState {
    std::unordered_map<u64, bool> verdict_by_radical;
};

inline bool eligible_for_sweep(const Factorization& f, PolyKind kind, int max_factors,
                               bool distinct_odd) {
    int count = distinct_odd ? f.distinct_odd_count()
                             : (kind == PolyKind::Psi ? f.distinct_count() : f.total_count());
    return count <= max_factors;
}

}  // namespace detail

// Checks convexity of the chosen expansion for every eligible n in
// [1, max_n]. Eligibility counts prime factors with multiplicity for Phi
// and distinct primes for Psi; with distinct_odd set, only odd primes are
// counted (either kind). Violations are ordered by n.
inline ConvexSweepResult convex_sweep(PolyKind kind, u64 max_n, int max_factors,
                                      bool distinct_odd, unsigned threads = 0) {
    if (max_n < 1) return {};
    std::vector<std::uint32_t> spf = spf_sieve(static_cast<std::uint32_t>(max_n));
    struct Acc {
        u64 scanned = 0;
        std::vector<ConvexViolation> violations;
    };
    auto accs = parallel_chunks<Acc>(1, max_n + 1, threads, [&](std::size_t lo, std::size_t hi, Acc& acc) {
        detail::ConvexWorkerState state;
        for (std::size_t n = lo; n < hi; ++n) {
            Factorization f = factorize_with_spf(static_cast<std::uint32_t>(n), spf);
            if (!detail::eligible_for_sweep(f, kind, max_factors, distinct_odd)) continue;
            ++acc.scanned;
            u64 rad = f.radical();
            auto it = state.verdict_by_radical.find(rad);
            bool convex;
            if (it != state.verdict_by_radical.end()) {
                convex = it->second;
            } else {
                CoeffVector base = kind == PolyKind::Phi ? cyclotomic_poly(rad, max_n)
                                                         : inverse_cyclotomic_poly(rad, max_n);
                convex = coeff_set(base).convex;
                state.verdict_by_radical.emplace(rad, convex);
            }
            if (!convex) {
                CoeffVector full = kind == PolyKind::Phi ? cyclotomic_poly(n, max_n)
                                                         : inverse_cyclotomic_poly(n, max_n);
                CoeffSummary s = coeff_set(full);
                acc.violations.push_back({static_cast<u64>(n), s.min, s.max, s.gaps});
            }
        }
    });
    ConvexSweepResult res;
    for (const Acc& acc : accs) {
        res.scanned += acc.scanned;
        res.violations.insert(res.violations.end(), acc.violations.begin(), acc.violations.end());
    }
    return res;
}

// --- per-coefficient grids --------------------------------------------------

struct HeightScanResult {
    i64 max_abs = 0;
    i64 q = 0;
    i64 r = 0;
    i64 k = -1;  // smallest index attaining max_abs for the winning pair
    u64 pairs_scanned = 0;
};

namespace detail {

inline std::vector<std::pair<i64, i64>> prime_pair_grid(i64 p, i64 q_max, i64 r_max) {
    std::vector<u64> primes = primes_up_to(static_cast<u64>(std::max(q_max, r_max)));
    std::vector<std::pair<i64, i64>> pairs;
    for (u64 q : primes) {
        if (static_cast<i64>(q) <= p || static_cast<i64>(q) > q_max) continue;
        for (u64 r : primes) {
            if (r <= q || static_cast<i64>(r) > r_max) continue;
            pairs.emplace_back(static_cast<i64>(q), static_cast<i64>(r));
        }
    }
    return pairs;
}

}  // namespace detail

// Largest |a(k)| over all pairs p < q <= q_max, q < r <= r_max, scanning
// k over the first half of the degree range (the sequence is palindromic).
// Ties resolve to the earliest pair in (q, r) order, then the smallest k.
inline HeightScanResult height_scan(i64 p, i64 q_max, i64 r_max, unsigned threads = 0) {
    if (p <= 2 || !is_prime(static_cast<u64>(p))) throw InvalidPrimes("height_scan: p must be an odd prime");
    auto pairs = detail::prime_pair_grid(p, q_max, r_max);
    struct Best {
        i64 abs = -1;
        i64 k = -1;
    };
    auto bests = parallel_index_map<Best>(pairs.size(), threads, [&](std::size_t i) {
        KaplanContext ctx = make_kaplan_context(p, pairs[i].first, pairs[i].second);
        Best b;
        b.abs = 0;
        for (i64 k = 0; k <= ctx.phi / 2; ++k) {
            i64 v = ternary_coeff(k, ctx);
            if (v < 0) v = -v;
            if (v > b.abs) {
                b.abs = v;
                b.k = k;
            }
        }
        return b;
    });
    HeightScanResult res;
    res.pairs_scanned = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (bests[i].abs > res.max_abs) {
            res.max_abs = bests[i].abs;
            res.q = pairs[i].first;
            res.r = pairs[i].second;
            res.k = bests[i].k;
        }
    }
    return res;
}

struct OptimalFinding {
    i64 q = 0;
    i64 r = 0;
    i64 n = 0;
    i64 min = 0;
    i64 max = 0;
};

struct OptimalScanResult {
    u64 pairs_scanned = 0;
    std::vector<OptimalFinding> findings;  // pairs with max - min == p, in (q, r) order
};

// Scans the same grid for pairs whose coefficient spread max - min reaches
// exactly p, the largest value the spread can take.
inline OptimalScanResult optimal_scan(i64 p, i64 q_max, i64 r_max, unsigned threads = 0) {
    if (p <= 2 || !is_prime(static_cast<u64>(p))) throw InvalidPrimes("optimal_scan: p must be an odd prime");
    auto pairs = detail::prime_pair_grid(p, q_max, r_max);
    struct MinMax {
        i64 min = 0;
        i64 max = 0;
    };
    auto spans = parallel_index_map<MinMax>(pairs.size(), threads, [&](std::size_t i) {
        KaplanContext ctx = make_kaplan_context(p, pairs[i].first, pairs[i].second);
        MinMax mm;
        for (i64 k = 0; k <= ctx.phi / 2; ++k) {
            i64 v = ternary_coeff(k, ctx);
            if (v < mm.min) mm.min = v;
            if (v > mm.max) mm.max = v;
        }
        return mm;
    });
    OptimalScanResult res;
    res.pairs_scanned = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (spans[i].max - spans[i].min == p) {
            res.findings.push_back({pairs[i].first, pairs[i].second,
                                    p * pairs[i].first * pairs[i].second, spans[i].min,
                                    spans[i].max});
        }
    }
    return res;
}

}  // namespace cyclo
