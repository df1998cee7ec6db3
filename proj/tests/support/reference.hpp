#pragma once

// Reference constructions for cross-checking: the n-th cyclotomic factor
// obtained by dividing x^n - 1 by every lower-order factor, and its
// cofactor. Quadratic and memo-hungry, but shares no code with the
// production construction beyond exact_div/multiply.

#include <map>

#include "cyclo/poly.hpp"

namespace testref {

inline const cyclo::CoeffVector& reference_cyclotomic(cyclo::u64 n,
                                                      std::map<cyclo::u64, cyclo::CoeffVector>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    cyclo::CoeffVector f = cyclo::xn_minus_1(n);
    for (cyclo::u64 d = 1; d <= n / 2; ++d) {
        if (n % d == 0) f = cyclo::exact_div(f, reference_cyclotomic(d, memo));
    }
    f.label = static_cast<cyclo::i64>(n);
    return memo.emplace(n, std::move(f)).first->second;
}

inline cyclo::CoeffVector reference_cyclotomic(cyclo::u64 n) {
    std::map<cyclo::u64, cyclo::CoeffVector> memo;
    return reference_cyclotomic(n, memo);
}

inline cyclo::CoeffVector reference_inverse_cyclotomic(cyclo::u64 n) {
    std::map<cyclo::u64, cyclo::CoeffVector> memo;
    return cyclo::exact_div(cyclo::xn_minus_1(n), reference_cyclotomic(n, memo));
}

}  // namespace testref
