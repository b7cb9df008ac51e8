#include "lincert/oracle.hpp"

#include <algorithm>

namespace lincert {
namespace oracle {

namespace {

// Gaussian elimination with full pivoting; returns rank only.
std::size_t rank_full_pivot(FMatrix w) {
    const PrimeField& f = w.field();
    const std::size_t m = w.rows(), n = w.cols();
    std::size_t r = 0;
    std::vector<bool> row_used(m, false), col_used(n, false);
    for (;;) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = 0; i < m && pi == m; ++i) {
            if (row_used[i]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!col_used[j] && w.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        }
        if (pi == m) return r;
        row_used[pi] = true;
        col_used[pj] = true;
        ++r;
        PrimeField::Element inv = f.inv(w.at(pi, pj));
        for (std::size_t i = 0; i < m; ++i) {
            if (row_used[i] || w.at(i, pj) == 0) continue;
            PrimeField::Element fac = f.mul(w.at(i, pj), inv);
            for (std::size_t j = 0; j < n; ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(fac, w.at(pi, j))));
        }
    }
}

// Incremental independence tester: reduce a vector against the stored basis,
// keep it if a nonzero residual remains.
class Basis {
public:
    explicit Basis(const PrimeField& f) : f_(f) {}

    bool insert(Vec v) {
        for (const auto& b : rows_) {
            PrimeField::Element c = v[b.second];
            if (c == 0) continue;
            PrimeField::Element fac = f_.mul(c, f_.inv(b.first[b.second]));
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = f_.sub(v[j], f_.mul(fac, b.first[j]));
        }
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                rows_.emplace_back(std::move(v), j);
                return true;
            }
        return false;
    }

private:
    PrimeField f_;
    std::vector<std::pair<Vec, std::size_t>> rows_;
};

}  // namespace

std::size_t rank(const FMatrix& a) { return rank_full_pivot(a); }

RankProfile crp(const FMatrix& a) {
    // include column j iff it raises the rank of the prefix: the definition
    Basis basis(a.field());
    RankProfile out;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (basis.insert(a.col(j))) out.push_back(static_cast<std::uint32_t>(j));
    return out;
}

RankProfile rrp(const FMatrix& a) {
    Basis basis(a.field());
    RankProfile out;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (basis.insert(a.row(i))) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

FMatrix rpm(const FMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    // leading-rank table, one elimination per (i, j)
    std::vector<std::vector<std::size_t>> rk(m + 1, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::uint32_t> ri, ci;
    for (std::size_t i = 1; i <= m; ++i) {
        ri.push_back(static_cast<std::uint32_t>(i - 1));
        ci.clear();
        for (std::size_t j = 1; j <= n; ++j) {
            ci.push_back(static_cast<std::uint32_t>(j - 1));
            rk[i][j] = rank_full_pivot(a.submatrix(ri, ci));
        }
    }
    FMatrix r(a.field(), m, n);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (rk[i][j] + rk[i - 1][j - 1] == rk[i - 1][j] + rk[i][j - 1] + 1)
                r.set(i - 1, j - 1, a.field().one());
    return r;
}

PrimeField::Element det(const FMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant of nonsquare matrix");
    const PrimeField& f = a.field();
    FMatrix w = a;
    const std::size_t n = w.rows();
    PrimeField::Element acc = f.one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = n;
        for (std::size_t i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                pi = i;
                break;
            }
        if (pi == n) return 0;
        if (pi != k) {
            for (std::size_t j = 0; j < n; ++j) {
                auto t = w.at(k, j);
                w.set(k, j, w.at(pi, j));
                w.set(pi, j, t);
            }
            acc = f.neg(acc);
        }
        acc = f.mul(acc, w.at(k, k));
        PrimeField::Element inv = f.inv(w.at(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            PrimeField::Element fac = f.mul(w.at(i, k), inv);
            if (fac == 0) continue;
            for (std::size_t j = k; j < n; ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(fac, w.at(k, j))));
        }
    }
    return acc;
}

bool grp(const FMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("square matrix required");
    std::size_t r = rank(a);
    std::vector<std::uint32_t> idx;
    for (std::size_t k = 1; k <= r; ++k) {
        idx.push_back(static_cast<std::uint32_t>(k - 1));
        if (det(a.submatrix(idx, idx)) == 0) return false;
    }
    return true;
}

namespace {

// char poly of an integer symmetric matrix via traces of powers and Newton's
// identities; coefficients come out exactly rational (in fact integral).
std::vector<Rational> char_poly(const QMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> power_sums(n + 1);  // p_k = trace(A^k)
    QMatrix acc = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = acc.mul(a);
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += acc.at(i, i);
        power_sums[k] = tr;
    }
    // e_k from p_k: k*e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    std::vector<Rational> e(n + 1);
    e[0] = Rational(1);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational s;
        for (std::size_t i = 1; i <= k; ++i) {
            Rational term = e[k - i] * power_sums[i];
            s += (i % 2 == 1) ? term : -term;
        }
        e[k] = s / Rational(static_cast<long>(k));
    }
    // det(xI - A) = sum_k (-1)^k e_k x^(n-k); store by ascending degree
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational v = e[k];
        if (k % 2 == 1) v = -v;
        c[n - k] = v;
    }
    return c;
}

int sign_variations(const std::vector<Rational>& coeffs) {
    int prev = 0, var = 0;
    for (const auto& c : coeffs) {
        int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace

std::tuple<int, int, int> signature(const QMatrix& a) {
    if (!a.is_symmetric()) throw NotSymmetric();
    const std::size_t n = a.rows();
    std::vector<Rational> c = char_poly(a);
    // zero eigenvalues = trailing zero coefficients
    int zero = 0;
    while (zero <= static_cast<int>(n) && c[zero].is_zero()) ++zero;
    std::vector<Rational> reduced(c.begin() + zero, c.end());
    // all roots are real, so the Descartes counts are exact
    int pos = sign_variations(reduced);
    std::vector<Rational> flipped = reduced;
    for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
    int neg = sign_variations(flipped);
    return {pos, neg, zero};
}

std::size_t rank_q(const QMatrix& a) {
    QMatrix w = a;
    const std::size_t m = w.rows(), n = w.cols();
    std::size_t r = 0;
    std::vector<bool> row_used(m, false), col_used(n, false);
    for (;;) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = 0; i < m && pi == m; ++i) {
            if (row_used[i]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!col_used[j] && !w.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        }
        if (pi == m) return r;
        row_used[pi] = true;
        col_used[pj] = true;
        ++r;
        Rational inv = w.at(pi, pj).inv();
        for (std::size_t i = 0; i < m; ++i) {
            if (row_used[i] || w.at(i, pj).is_zero()) continue;
            Rational fac = w.at(i, pj) * inv;
            for (std::size_t j = 0; j < n; ++j) w.set(i, j, w.at(i, j) - fac * w.at(pi, j));
        }
    }
}

RankProfile crp_q(const QMatrix& a) {
    RankProfile out;
    std::vector<std::uint32_t> all_rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) all_rows[i] = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> prefix;
    std::size_t prev = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        prefix.push_back(static_cast<std::uint32_t>(j));
        std::size_t r = rank_q(a.submatrix(all_rows, prefix));
        if (r > prev) {
            out.push_back(static_cast<std::uint32_t>(j));
            prev = r;
        }
    }
    return out;
}

}  // namespace oracle
}  // namespace lincert
