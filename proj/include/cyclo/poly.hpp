#pragma once

// Full coefficient expansion of the n-th cyclotomic polynomial and its
// cofactor in x^n - 1. Construction works on the radical: over the
// squarefree part we fold factors (1 - x^d) in or out according to the
// Moebius function, truncated to the target length, then reindex through
// x -> x^(n/rad). Multiplication passes all run before division passes so
// intermediate coefficients stay small; every add/sub is overflow-checked.

#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "cyclo/arith.hpp"

namespace cyclo {

inline constexpr u64 kDefaultDegreeCap = u64{1} << 22;

// Degree cap for expansions, overridable via the CYCLO_CAP variable.
inline u64 default_degree_cap() {
    if (const char* env = std::getenv("CYCLO_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultDegreeCap;
}

// Dense coefficient vector; coeffs[k] is the coefficient of x^k.
// An empty vector is the zero polynomial. label records which index n the
// vector came from (0 for anonymous results).
struct CoeffVector {
    i64 label = 0;
    std::vector<i64> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    i64 degree() const { return static_cast<i64>(coeffs.size()) - 1; }

    i64 at(i64 k) const {
        if (k < 0 || k >= static_cast<i64>(coeffs.size())) return 0;
        return coeffs[static_cast<std::size_t>(k)];
    }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
};

namespace detail {

// c *= (1 - x^d), truncated to the existing length.
inline void mul_one_minus_pow(std::vector<i64>& c, u64 d) {
    if (d >= c.size()) return;
    for (std::size_t i = c.size(); i-- > d;) c[i] = checked_sub(c[i], c[i - d]);
}

// c /= (1 - x^d), truncated to the existing length.
inline void div_one_minus_pow(std::vector<i64>& c, u64 d) {
    if (d >= c.size()) return;
    for (std::size_t i = d; i < c.size(); ++i) c[i] = checked_add(c[i], c[i - d]);
}

// Truncated product of (1 - x^d)^e(d) over the divisors d of the radical,
// where e(d) = mu(rad/d) when invert is false and -mu(rad/d) when true.
inline std::vector<i64> radical_coeffs(const std::vector<u64>& primes, std::size_t length,
                                       bool invert) {
    std::vector<i64> c(length, 0);
    c[0] = 1;
    std::vector<u64> mul_ds, div_ds;
    const unsigned k = static_cast<unsigned>(primes.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        u64 d = 1;
        for (unsigned b = 0; b < k; ++b) {
            if (mask & (1u << b)) d = checked_mul_u64(d, primes[b]);
        }
        if (d >= length) continue;
        bool mu_positive = ((k - __builtin_popcount(mask)) % 2) == 0;
        if (invert) mu_positive = !mu_positive;
        (mu_positive ? mul_ds : div_ds).push_back(d);
    }
    for (u64 d : mul_ds) mul_one_minus_pow(c, d);
    for (u64 d : div_ds) div_one_minus_pow(c, d);
    return c;
}

// Reindex through x -> x^s.
inline std::vector<i64> inflate(const std::vector<i64>& base, u64 s) {
    if (s == 1) return base;
    std::vector<i64> out((base.size() - 1) * s + 1, 0);
    for (std::size_t i = 0; i < base.size(); ++i) out[i * s] = base[i];
    return out;
}

}  // namespace detail

inline CoeffVector cyclotomic_poly(u64 n, u64 cap = default_degree_cap()) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    CoeffVector f;
    f.label = static_cast<i64>(n);
    if (n == 1) {
        f.coeffs = {-1, 1};
        return f;
    }
    Factorization fac = factorize(n);
    u64 rad = fac.radical();
    u64 phi_rad = 1;
    std::vector<u64> primes;
    primes.reserve(fac.factors.size());
    for (const auto& [p, e] : fac.factors) {
        primes.push_back(p);
        phi_rad *= p - 1;
    }
    u64 s = n / rad;
    u64 phi = checked_mul_u64(phi_rad, s);
    if (phi > cap) {
        throw TooLarge("cyclotomic_poly: degree " + std::to_string(phi) + " exceeds cap " +
                       std::to_string(cap));
    }
    f.coeffs = detail::inflate(detail::radical_coeffs(primes, phi_rad + 1, false), s);
    return f;
}

inline CoeffVector inverse_cyclotomic_poly(u64 n, u64 cap = default_degree_cap()) {
    if (n == 0) throw std::invalid_argument("inverse_cyclotomic_poly: n must be >= 1");
    CoeffVector f;
    f.label = static_cast<i64>(n);
    if (n == 1) {
        f.coeffs = {1};
        return f;
    }
    Factorization fac = factorize(n);
    u64 rad = fac.radical();
    u64 phi_rad = 1;
    std::vector<u64> primes;
    primes.reserve(fac.factors.size());
    for (const auto& [p, e] : fac.factors) {
        primes.push_back(p);
        phi_rad *= p - 1;
    }
    u64 s = n / rad;
    u64 deg = checked_mul_u64(rad - phi_rad, s);
    if (deg > cap) {
        throw TooLarge("inverse_cyclotomic_poly: degree " + std::to_string(deg) +
                       " exceeds cap " + std::to_string(cap));
    }
    std::vector<i64> base = detail::radical_coeffs(primes, rad - phi_rad + 1, true);
    for (i64& c : base) c = -c;
    f.coeffs = detail::inflate(base, s);
    return f;
}

inline CoeffVector xn_minus_1(u64 n) {
    if (n == 0) throw std::invalid_argument("xn_minus_1: n must be >= 1");
    CoeffVector f;
    f.coeffs.assign(n + 1, 0);
    f.coeffs[0] = -1;
    f.coeffs[n] = 1;
    return f;
}

inline CoeffVector negate_variable(const CoeffVector& f) {
    CoeffVector g;
    g.coeffs = f.coeffs;
    for (std::size_t i = 1; i < g.coeffs.size(); i += 2) g.coeffs[i] = -g.coeffs[i];
    return g;
}

inline CoeffVector multiply(const CoeffVector& a, const CoeffVector& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::vector<i64>& s = a.coeffs.size() <= b.coeffs.size() ? a.coeffs : b.coeffs;
    const std::vector<i64>& l = a.coeffs.size() <= b.coeffs.size() ? b.coeffs : a.coeffs;
    CoeffVector out;
    out.coeffs.assign(s.size() + l.size() - 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        i64 si = s[i];
        if (si == 0) continue;
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (l[j] == 0) continue;
            out.coeffs[i + j] = checked_add(out.coeffs[i + j], checked_mul(si, l[j]));
        }
    }
    return out;
}

// Exact quotient num / den; den must have leading coefficient +-1 and the
// division must leave no remainder.
inline CoeffVector exact_div(const CoeffVector& num, const CoeffVector& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    i64 lead = den.coeffs.back();
    if (lead != 1 && lead != -1) {
        throw InexactDivision("exact_div: divisor leading coefficient must be +-1");
    }
    if (num.is_zero()) return {};
    if (num.degree() < den.degree()) throw InexactDivision("exact_div: remainder is nonzero");
    std::vector<i64> rem = num.coeffs;
    const std::size_t dd = den.coeffs.size() - 1;
    CoeffVector quot;
    quot.coeffs.assign(num.coeffs.size() - dd, 0);
    for (std::size_t k = quot.coeffs.size(); k-- > 0;) {
        i64 c = rem[k + dd] * lead;  // lead is +-1, so this is exact division
        quot.coeffs[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k + j] = checked_sub(rem[k + j], checked_mul(c, den.coeffs[j]));
        }
    }
    for (i64 v : rem) {
        if (v != 0) throw InexactDivision("exact_div: remainder is nonzero");
    }
    return quot;
}

// Bounded memo for expansions, keyed by n; safe for concurrent use.
// Eviction is FIFO over a total coefficient budget, with the proviso that
// the most recent insertion always stays resident.
class CycloCache {
  public:
    explicit CycloCache(u64 cap = default_degree_cap(), std::size_t coeff_budget = std::size_t{1} << 23)
        : cap_(cap), budget_(coeff_budget) {}

    std::shared_ptr<const CoeffVector> phi(u64 n) { return get(n, false); }
    std::shared_ptr<const CoeffVector> psi(u64 n) { return get(n, true); }

    u64 cap() const { return cap_; }

  private:
    std::shared_ptr<const CoeffVector> get(u64 n, bool inverse) {
        const u64 key = (n << 1) | (inverse ? 1 : 0);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto value = std::make_shared<const CoeffVector>(
            inverse ? inverse_cyclotomic_poly(n, cap_) : cyclotomic_poly(n, cap_));
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = map_.emplace(key, value);
        if (inserted) {
            order_.push_back(key);
            held_ += value->coeffs.size();
            while (held_ > budget_ && order_.size() > 1) {
                u64 victim = order_.front();
                order_.pop_front();
                auto vit = map_.find(victim);
                held_ -= vit->second->coeffs.size();
                map_.erase(vit);
            }
        }
        return it->second;
    }

    const u64 cap_;
    const std::size_t budget_;
    std::mutex mu_;
    std::unordered_map<u64, std::shared_ptr<const CoeffVector>> map_;
    std::deque<u64> order_;
    std::size_t held_ = 0;
};

}  // namespace cyclo
