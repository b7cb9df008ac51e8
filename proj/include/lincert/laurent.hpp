#pragma once

#include <cstdint>
#include <vector>

#include "lincert/matrix.hpp"

namespace lincert {

/// Sum of A[i][j] * X^(i-j); exponent range trimmed to the nonzero support.
struct LaurentPoly {
    std::ptrdiff_t lo = 0;                   // exponent of coeff[0]
    std::vector<PrimeField::Element> coeff;  // empty for the zero polynomial

    bool empty() const { return coeff.empty(); }
    std::ptrdiff_t min_exp() const { return lo; }
    std::ptrdiff_t max_exp() const { return lo + static_cast<std::ptrdiff_t>(coeff.size()) - 1; }
    bool has_negative_exponents() const { return !coeff.empty() && lo < 0; }
};

LaurentPoly laurent_poly(const FMatrix& m);

/// Exact evaluation; requires lambda != 0 when negative exponents exist
/// (and by contract always, matching the protocol usage).
PrimeField::Element eval_laurent(const PrimeField& f, const LaurentPoly& g,
                                 PrimeField::Element lambda);

}  // namespace lincert
