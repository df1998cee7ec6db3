// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Run with no arguments for the full battery or with an index (1..12) for a
// single criterion. Exits 0 only if every executed criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/cyclo.hpp"

using namespace cyclo;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += "FAILED: " + what;
        }
    }

    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }

    void time_budget(double took, double limit, const std::string& label) {
        std::ostringstream os;
        os.precision(2);
        os << std::fixed << label << " " << took << " s";
        note(os.str());
        expect(took < limit, label + " exceeded " + std::to_string(limit) + " s");
    }
};

std::string join_i64(const std::vector<i64>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

// Shared random grid for criteria 3 and 10: 125 triples with eight sampled
// indices each, drawn from a fixed seed so both criteria see the same grid.
struct GridTriple {
    i64 p, q, r;
    std::vector<i64> ks;
};

std::vector<GridTriple> sample_grid() {
    std::vector<u64> primes = primes_up_to(200);
    std::vector<i64> odd;
    for (u64 p : primes) {
        if (p >= 3) odd.push_back(static_cast<i64>(p));
    }
    std::mt19937_64 rng(0xC3C310);
    std::vector<GridTriple> grid;
    while (grid.size() < 125) {
        std::size_t a = rng() % odd.size();
        std::size_t b = rng() % odd.size();
        std::size_t c = rng() % odd.size();
        if (a == b || b == c || a == c) continue;
        std::vector<i64> t{odd[a], odd[b], odd[c]};
        std::sort(t.begin(), t.end());
        GridTriple g{t[0], t[1], t[2], {}};
        i64 phi = (g.p - 1) * (g.q - 1) * (g.r - 1);
        for (int i = 0; i < 8; ++i) {
            g.ks.push_back(static_cast<i64>(rng() % static_cast<u64>(phi + 1)));
        }
        grid.push_back(std::move(g));
    }
    return grid;
}

constexpr u64 kGridCap = 8'000'000;  // phi(pqr) < 7.46e6 for primes <= 199

Outcome criterion1() {
    Outcome o;
    KaplanContext ctx = make_kaplan_context(17, 29, 41);
    auto t0 = Clock::now();
    i64 v = ternary_coeff(4801, ctx);
    double kaplan_s = seconds_since(t0);
    o.expect(v == -10, "a(4801) = " + std::to_string(v) + ", want -10");
    o.time_budget(kaplan_s, 0.1, "per-index path");

    t0 = Clock::now();
    CoeffVector f = cyclotomic_poly(20213);
    o.expect(f.degree() == 17920, "degree 17920");
    bool all = true;
    for (i64 k = 0; k <= f.degree(); ++k) {
        if (ternary_coeff(k, ctx) != f.at(k)) {
            all = false;
            o.expect(false, "mismatch at k=" + std::to_string(k));
            break;
        }
    }
    if (all) o.note("expansion agrees at all 17921 indices");
    o.time_budget(seconds_since(t0), 5.0, "expansion check");
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto t0 = Clock::now();
    JumpSweepResult res = ternary_jump_sweep(30000);
    o.expect(res.violations.empty(),
             std::to_string(res.violations.size()) + " jump violations");
    o.note("scanned " + std::to_string(res.scanned) + " ternary n");
    o.time_budget(seconds_since(t0), 120.0, "sweep");
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::vector<GridTriple> grid = sample_grid();
    int checked = 0, agreed = 0;
    for (const GridTriple& g : grid) {
        KaplanContext ctx = make_kaplan_context(g.p, g.q, g.r);
        CoeffVector f = cyclotomic_poly(static_cast<u64>(ctx.n), kGridCap);
        for (i64 k : g.ks) {
            ++checked;
            if (ternary_coeff(k, ctx) == f.at(k)) {
                ++agreed;
            } else {
                o.expect(false, "disagreement at n=" + std::to_string(ctx.n) +
                                    " k=" + std::to_string(k));
            }
        }
    }
    o.expect(checked == 1000, "expected 1000 tuples, got " + std::to_string(checked));
    o.note(std::to_string(agreed) + "/" + std::to_string(checked) + " tuples agree exactly");
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::vector<u64> primes = primes_up_to(50);
    int pairs = 0;
    for (std::size_t i = 1; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            i64 p = static_cast<i64>(primes[i]), q = static_cast<i64>(primes[j]);
            ++pairs;
            SemigroupTable t = build_table({p, q});
            CoeffVector from_semigroup = semigroup_polynomial(t);
            CoeffVector from_oracle = cyclotomic_poly(static_cast<u64>(p * q));
            if (from_semigroup.coeffs != from_oracle.coeffs) {
                o.expect(false, "semigroup polynomial mismatch at (" + std::to_string(p) + "," +
                                    std::to_string(q) + ")");
                continue;
            }
            BinaryContext ctx = make_context(p, q);
            for (i64 m = 0; m < ctx.pq; ++m) {
                if (binary_coeff(m, ctx) != from_oracle.at(m)) {
                    o.expect(false, "closed form mismatch at (" + std::to_string(p) + "," +
                                        std::to_string(q) + ") m=" + std::to_string(m));
                    break;
                }
            }
        }
    }
    o.note(std::to_string(pairs) + " odd prime pairs, three routes coincide");
    return o;
}

Outcome family_criterion(FamilyKind kind, i64 p, i64 want_q, i64 want_r, i64 want_k,
                         i64 want_at_k, i64 want_prev, std::optional<i64> lehmer,
                         std::vector<i64> want_set) {
    Outcome o;
    auto t0 = Clock::now();
    FamilyInstance inst = find_family_instance(kind, p);
    o.expect(inst.q == want_q && inst.r == want_r && inst.k == want_k,
             "instance (q,r,k) = (" + std::to_string(inst.q) + "," + std::to_string(inst.r) +
                 "," + std::to_string(inst.k) + ")");
    FamilyCheck chk = verify_family(inst);
    o.expect(chk.at_k == want_at_k, "a(k) = " + std::to_string(chk.at_k));
    o.expect(chk.at_k_minus_r == want_prev, "a(k-r) = " + std::to_string(chk.at_k_minus_r));
    if (lehmer) {
        o.expect(chk.at_lehmer.has_value() && *chk.at_lehmer == *lehmer,
                 "classical index value");
    }
    o.expect(chk.ok, "family check");
    OptimalRangeCheck rng = verify_optimal_range(inst);
    o.expect(rng.summary.present == want_set,
             "attained set " + join_i64(rng.summary.present) + ", want " + join_i64(want_set));
    o.expect(rng.set_is_full_range && rng.window_covers && rng.optimal,
             "range/window/optimal flags");
    o.note("n=" + std::to_string(inst.n) + " attained " + join_i64(rng.summary.present));
    o.time_budget(seconds_since(t0), 1.0, "family");
    return o;
}

Outcome criterion5() {
    return family_criterion(FamilyKind::Moeller, 5, 7, 17, 240, 3, -2, 2,
                            {-2, -1, 0, 1, 2, 3});
}

Outcome criterion6() {
    return family_criterion(FamilyKind::MoellerMirror, 5, 7, 53, 751, -3, 2, std::nullopt,
                            {-3, -2, -1, 0, 1, 2});
}

Outcome criterion7() {
    Outcome o;
    auto t0 = Clock::now();

    CoeffSummary s1 = coeff_set(inverse_cyclotomic_poly(60095));
    o.expect(s1.gaps == std::vector<i64>{-11, 11}, "60095 gaps " + join_i64(s1.gaps));
    o.expect(s1.min == -12 && s1.max == 12, "60095 range");

    CoeffSummary s2 = coeff_set(inverse_cyclotomic_poly(207805));
    o.expect(s2.gaps == std::vector<i64>{-15, -13, 13, 15}, "207805 gaps " + join_i64(s2.gaps));
    o.expect(s2.min == -16 && s2.max == 16, "207805 range");

    // The computed gap set for 335257 is symmetric under negation, as the
    // antipalindromy of these polynomials forces; the asymmetric published
    // set omits +36. Both are reported; the symmetric one is asserted.
    CoeffSummary s3 = coeff_set(inverse_cyclotomic_poly(335257));
    std::vector<i64> computed{-39, -37, -36, 36, 37, 39};
    std::vector<i64> published{-39, -37, -36, 37, 39};
    o.expect(s3.gaps == computed, "335257 gaps " + join_i64(s3.gaps));
    o.expect(s3.min == -40 && s3.max == 40, "335257 range");
    bool published_subset = std::includes(s3.gaps.begin(), s3.gaps.end(), published.begin(),
                                          published.end());
    o.expect(published_subset, "published gap values are gaps");
    o.note("335257 computed " + join_i64(computed) + " vs published " + join_i64(published) +
           " (symmetric completion)");

    o.time_budget(seconds_since(t0), 60.0, "three expansions");
    return o;
}

Outcome criterion8() {
    Outcome o;
    auto t0 = Clock::now();

    CoeffSummary s1 = coeff_set(cyclotomic_poly(7735));
    o.expect(!s1.convex, "7735 should be non-convex");
    o.note("7735 attained [" + std::to_string(s1.min) + "," + std::to_string(s1.max) +
           "] minus " + join_i64(s1.gaps));

    CoeffVector f = cyclotomic_poly(530689);
    o.expect(f.degree() == 449280, "530689 degree");
    CoeffSummary s2 = coeff_set(f);
    o.expect(s2.min == -50, "530689 min " + std::to_string(s2.min));
    o.expect(s2.max == 52, "530689 max " + std::to_string(s2.max));
    o.expect(s2.gaps == std::vector<i64>{-48, 47, 48, 49, 50, 51},
             "530689 gaps " + join_i64(s2.gaps));

    o.time_budget(seconds_since(t0), 120.0, "both expansions");
    return o;
}

Outcome criterion9() {
    Outcome o;
    CoeffVector f = cyclotomic_poly(40426);
    JumpCheck jc = check_jump_one(f);
    o.expect(!jc.ok, "doubling a non-flat ternary index must break the jump bound");
    o.expect(jc.max_jump >= 19, "max jump " + std::to_string(jc.max_jump) + ", want >= 19");
    i64 witness = f.at(4801) - f.at(4800);
    if (witness < 0) witness = -witness;
    o.expect(witness == 19, "|a(4801) - a(4800)| = " + std::to_string(witness));
    o.note("max jump " + std::to_string(jc.max_jump) + " at k=" +
           std::to_string(jc.max_jump_index) + ", first violation k=" +
           std::to_string(jc.first_violation));
    return o;
}

Outcome criterion10() {
    Outcome o;
    std::vector<GridTriple> grid = sample_grid();
    i64 worst_spread_slack = INT64_MAX;
    for (const GridTriple& g : grid) {
        CoeffVector f = cyclotomic_poly(static_cast<u64>(g.p) * g.q * g.r, kGridCap);
        CoeffSummary s = coeff_set(f);
        i64 spread = s.max - s.min;
        if (g.p - spread < worst_spread_slack) worst_spread_slack = g.p - spread;
        if (spread > g.p) {
            o.expect(false, "spread " + std::to_string(spread) + " exceeds p=" +
                                std::to_string(g.p) + " at n=" +
                                std::to_string(g.p * g.q * g.r));
        }
        i64 height = std::max(std::llabs(s.min), std::llabs(s.max));
        if (height > g.p) {
            o.expect(false, "height " + std::to_string(height) + " exceeds p=" +
                                std::to_string(g.p));
        }
    }
    o.note("125 full coefficient sets obey spread <= p and |a| <= p (tightest slack " +
           std::to_string(worst_spread_slack) + ")");
    return o;
}

Outcome criterion11() {
    Outcome o;
    auto t0 = Clock::now();
    ConvexSweepResult phi = convex_sweep(PolyKind::Phi, 100000, 3, false);
    o.expect(phi.violations.empty(),
             std::to_string(phi.violations.size()) + " non-convex three-factor expansions");
    o.note("phi sweep scanned " + std::to_string(phi.scanned));

    ConvexSweepResult psi = convex_sweep(PolyKind::Psi, 100000, 3, true);
    o.expect(psi.violations.empty(),
             std::to_string(psi.violations.size()) + " non-convex cofactor expansions");
    o.note("psi sweep scanned " + std::to_string(psi.scanned));
    o.time_budget(seconds_since(t0), 600.0, "both sweeps");
    return o;
}

Outcome criterion12() {
    Outcome o;

    {  // palindromy of Phi (n >= 2) and antipalindromy of Psi (n >= 2)
        std::mt19937_64 rng(0xC12A);
        int ok = 0;
        for (int t = 0; t < 1000; ++t) {
            u64 n = rng() % 19999 + 2;
            CoeffVector f = cyclotomic_poly(n);
            bool good = true;
            for (i64 k = 0; k <= f.degree(); ++k) {
                if (f.at(k) != f.at(f.degree() - k)) good = false;
            }
            CoeffVector g = inverse_cyclotomic_poly(n);
            for (i64 k = 0; k <= g.degree(); ++k) {
                if (g.at(k) != -g.at(g.degree() - k)) good = false;
            }
            ok += good;
        }
        o.expect(ok == 1000, "palindromy " + std::to_string(ok) + "/1000");
        o.note("palindromy 1000/1000");
    }

    {  // the pair multiplies back to x^n - 1
        std::mt19937_64 rng(0xC12B);
        int ok = 0;
        for (int t = 0; t < 1000; ++t) {
            u64 n = rng() % 5000 + 1;
            CoeffVector prod = multiply(cyclotomic_poly(n), inverse_cyclotomic_poly(n));
            ok += prod.coeffs == xn_minus_1(n).coeffs;
        }
        o.expect(ok == 1000, "product identity " + std::to_string(ok) + "/1000");
        o.note("product identity 1000/1000");
    }

    {  // doubling an odd index negates the variable
        std::mt19937_64 rng(0xC12C);
        int ok = 0;
        for (int t = 0; t < 1000; ++t) {
            u64 n = (rng() % 15000) * 2 + 3;
            ok += cyclotomic_poly(2 * n).coeffs == negate_variable(cyclotomic_poly(n)).coeffs;
        }
        o.expect(ok == 1000, "variable negation " + std::to_string(ok) + "/1000");
        o.note("variable negation 1000/1000");
    }

    {  // Frobenius DP against the two-generator closed form
        std::mt19937_64 rng(0xC12D);
        int ok = 0, tried = 0;
        while (tried < 1000) {
            i64 a = static_cast<i64>(rng() % 399) + 2;
            i64 b = static_cast<i64>(rng() % 399) + 2;
            if (a == b || std::gcd(a, b) != 1) continue;
            ++tried;
            SemigroupTable t = build_table({a, b});
            ok += t.numerical() && *t.frobenius == a * b - a - b;
        }
        o.expect(ok == 1000, "frobenius closed form " + std::to_string(ok) + "/1000");
        o.note("frobenius closed form 1000/1000");
    }

    {  // CRT and modular-inverse round trips
        std::mt19937_64 rng(0xC12E);
        int ok = 0, tried = 0;
        while (tried < 1000) {
            i64 m1 = static_cast<i64>(rng() % 100000) + 2;
            i64 m2 = static_cast<i64>(rng() % 100000) + 2;
            if (std::gcd(m1, m2) != 1) continue;
            ++tried;
            i64 r1 = static_cast<i64>(rng() % static_cast<u64>(m1));
            i64 r2 = static_cast<i64>(rng() % static_cast<u64>(m2));
            i64 x = crt2(r1, m1, r2, m2);
            bool good = x >= 0 && x < m1 * m2 && x % m1 == r1 && x % m2 == r2;
            i64 inv = mod_inverse(m1, m2);
            good = good && static_cast<i64>(i128(inv) * m1 % m2) == 1;
            ok += good;
        }
        o.expect(ok == 1000, "crt/inverse round trips " + std::to_string(ok) + "/1000");
        o.note("crt/inverse round trips 1000/1000");
    }

    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::function<Outcome()>> criteria = {
        criterion1, criterion2, criterion3, criterion4,  criterion5,  criterion6,
        criterion7, criterion8, criterion9, criterion10, criterion11, criterion12,
    };
    int which = 0;
    if (argc > 1) {
        which = std::atoi(argv[1]);
        if (which < 1 || which > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: %s [1..%zu]\n", argv[0], criteria.size());
            return 2;
        }
    }
    bool all_ok = true;
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) {
        if (which != 0 && i != which) continue;
        auto t0 = Clock::now();
        Outcome o = criteria[static_cast<std::size_t>(i - 1)]();
        std::printf("criterion %2d: %s - %s (%.2f s)\n", i, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
        all_ok = all_ok && o.pass;
    }
    return all_ok ? 0 : 1;
}
