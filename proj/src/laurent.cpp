#include "lincert/laurent.hpp"

namespace lincert {

LaurentPoly laurent_poly(const FMatrix& m) {
    const PrimeField& f = m.field();
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(m.rows());
    const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(m.cols());
    std::ptrdiff_t lo = -(cols - 1);
    std::vector<PrimeField::Element> c(static_cast<std::size_t>(rows + cols - 1), 0);
    for (std::ptrdiff_t i = 0; i < rows; ++i)
        for (std::ptrdiff_t j = 0; j < cols; ++j) {
            std::size_t idx = static_cast<std::size_t>(i - j - lo);
            c[idx] = f.add(c[idx], m.at(i, j));
        }
    // trim to the nonzero support
    std::size_t first = 0, last = c.size();
    while (first < last && c[first] == 0) ++first;
    while (last > first && c[last - 1] == 0) --last;
    LaurentPoly g;
    g.lo = lo + static_cast<std::ptrdiff_t>(first);
    g.coeff.assign(c.begin() + first, c.begin() + last);
    if (g.coeff.empty()) g.lo = 0;
    return g;
}

PrimeField::Element eval_laurent(const PrimeField& f, const LaurentPoly& g,
                                 PrimeField::Element lambda) {
    if (lambda == 0) throw ZeroEvaluationPoint();
    if (g.coeff.empty()) return 0;
    // Horner from the top exponent, then scale by lambda^lo
    PrimeField::Element acc = 0;
    for (std::size_t i = g.coeff.size(); i-- > 0;) acc = f.add(f.mul(acc, lambda), g.coeff[i]);
    std::ptrdiff_t e = g.lo;
    if (e >= 0) return f.mul(acc, f.pow(lambda, static_cast<std::uint64_t>(e)));
    return f.mul(acc, f.pow(f.inv(lambda), static_cast<std::uint64_t>(-e)));
}

}  // namespace lincert
