#include "phases.hpp"

namespace lincert {
namespace detail {

std::optional<Vec> particular_solution(const PluqFactors& fac, const Vec& b) {
    const PrimeField& f = fac.l.field();
    const std::size_t m = fac.l.rows(), r = fac.rank, n = fac.q.size();
    if (b.size() != m) throw DimensionMismatch("solve rhs");
    // P L U Q x = b
    Vec y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = b[fac.p.image(i)];
    Vec z(r);
    for (std::size_t k = 0; k < r; ++k) {
        PrimeField::Element acc = y[k];
        for (std::size_t l = 0; l < k; ++l) acc = f.sub(acc, f.mul(fac.l.at(k, l), z[l]));
        z[k] = acc;
    }
    for (std::size_t i = r; i < m; ++i) {
        PrimeField::Element acc = y[i];
        for (std::size_t l = 0; l < r; ++l) acc = f.sub(acc, f.mul(fac.l.at(i, l), z[l]));
        if (acc != 0) return std::nullopt;
    }
    // free (non-pivot) coordinates of the gathered solution stay zero
    Vec t(n, 0);
    for (std::size_t kk = r; kk-- > 0;) {
        PrimeField::Element acc = z[kk];
        for (std::size_t j = kk + 1; j < r; ++j) acc = f.sub(acc, f.mul(fac.u.at(kk, j), t[j]));
        t[kk] = f.div(acc, fac.u.at(kk, kk));
    }
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = t[fac.q.image(j)];
    return x;
}

FMatrix solve_equivalence(const PluqFactors& fac_a, const FMatrix& b) {
    const PrimeField& f = b.field();
    const std::size_t n = fac_a.q.size();
    FMatrix t(f, n, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto sol = particular_solution(fac_a, b.col(j));
        if (!sol) continue;
        for (std::size_t i = 0; i < n; ++i) t.set(i, j, (*sol)[i]);
    }
    return t;
}

LuFactors lu_nopivot(const FMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("square matrix required");
    const PrimeField& f = a.field();
    const std::size_t n = a.rows();
    FMatrix w = a;
    FMatrix l = FMatrix::identity(f, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (w.at(k, k) == 0) throw SingularMatrix("zero pivot: no generic rank profile");
        PrimeField::Element inv = f.inv(w.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            PrimeField::Element fac = f.mul(w.at(i, k), inv);
            l.set(i, k, fac);
            if (fac == 0) continue;
            for (std::size_t j = k; j < n; ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(fac, w.at(k, j))));
        }
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) w.set(i, j, 0);
    return LuFactors{std::move(l), std::move(w)};
}

Vec minimality_fold(const PrimeField& f, std::size_t n, const std::vector<std::uint32_t>& cols,
                    const Vec& v, const Vec& x, const Vec& y) {
    const std::size_t r = cols.size();
    // (W x)_i = sum of x_k over columns whose mask reaches row i, as a suffix sum
    Vec wx(n, 0);
    Vec suffix(r + 1, 0);
    for (std::size_t k = r; k-- > 0;) suffix[k] = f.add(suffix[k + 1], x[k]);
    for (std::size_t i = 0; i < n; ++i) {
        // smallest k with climit[k] > i, where climit[k] = cols[k+1] (or n)
        std::size_t k = 0;
        while (k < r && (k + 1 < r ? cols[k + 1] : n) <= i) ++k;
        wx[i] = suffix[k];
    }
    Vec z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = f.mul(v[i], wx[i]);
    for (std::size_t j = 0; j < r; ++j) z[cols[j]] = f.sub(z[cols[j]], y[j]);
    return z;
}

}  // namespace detail
}  // namespace lincert
