#include "lincert/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace lincert {

FMatrix PluqFactors::assemble() const {
    FMatrix lu = l.mul(u);
    return lu.permute_rows(p).permute_cols(q);
}

PluqFactors pluq_crp(const FMatrix& a) {
    const PrimeField& f = a.field();
    const std::size_t m = a.rows(), n = a.cols();
    FMatrix w = a;
    std::vector<bool> used(m, false);
    std::vector<std::uint32_t> pivot_rows, pivot_cols;
    // multipliers indexed by (original row, pivot number)
    FMatrix mult(f, m, std::min(m, n));

    for (std::size_t j = 0; j < n && pivot_rows.size() < m; ++j) {
        std::size_t pi = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (!used[i] && w.at(i, j) != 0) {
                pi = i;
                break;
            }
        }
        if (pi == m) continue;
        std::size_t k = pivot_rows.size();
        pivot_rows.push_back(static_cast<std::uint32_t>(pi));
        pivot_cols.push_back(static_cast<std::uint32_t>(j));
        used[pi] = true;
        PrimeField::Element inv_piv = f.inv(w.at(pi, j));
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i] || w.at(i, j) == 0) continue;
            PrimeField::Element fac = f.mul(w.at(i, j), inv_piv);
            mult.set(i, k, fac);
            for (std::size_t jj = j; jj < n; ++jj)
                w.set(i, jj, f.sub(w.at(i, jj), f.mul(fac, w.at(pi, jj))));
        }
    }

    const std::size_t r = pivot_rows.size();
    // gather pivot rows first, remaining rows in ascending order
    std::vector<std::uint32_t> row_order = pivot_rows;
    for (std::uint32_t i = 0; i < m; ++i)
        if (!used[i]) row_order.push_back(i);
    std::vector<std::uint32_t> col_order = pivot_cols;
    {
        std::vector<bool> is_piv(n, false);
        for (auto c : pivot_cols) is_piv[c] = true;
        for (std::uint32_t j = 0; j < n; ++j)
            if (!is_piv[j]) col_order.push_back(j);
    }

    FMatrix lhat(f, m, r), uhat(f, r, n);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t orig = row_order[i];
        for (std::size_t k = 0; k < r; ++k) {
            if (i == k)
                lhat.set(i, k, f.one());
            else if (i > k || !used[orig])
                lhat.set(i, k, mult.at(orig, k));
        }
    }
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < n; ++l) uhat.set(k, l, w.at(pivot_rows[k], col_order[l]));

    return PluqFactors{Permutation(row_order), std::move(lhat), std::move(uhat),
                       Permutation(col_order).inverse(), r};
}

std::vector<std::uint32_t> crp_of(const PluqFactors& f) {
    std::vector<std::uint32_t> out(f.rank);
    for (std::size_t k = 0; k < f.rank; ++k) out[k] = f.q.preimage(k);
    return out;
}

PluqFactors pluq_rpm(const FMatrix& a) {
    const PrimeField& f = a.field();
    const std::size_t m = a.rows(), n = a.cols();
    FMatrix w = a;
    std::vector<std::uint32_t> rowp(m), colp(n);
    std::iota(rowp.begin(), rowp.end(), 0);
    std::iota(colp.begin(), colp.end(), 0);

    auto rotate_rows = [&](std::size_t dst, std::size_t src) {
        if (dst == src) return;
        // row at src moves to dst, rows dst..src-1 shift down one
        for (std::size_t j = 0; j < n; ++j) {
            PrimeField::Element keep = w.at(src, j);
            for (std::size_t i = src; i > dst; --i) w.set(i, j, w.at(i - 1, j));
            w.set(dst, j, keep);
        }
        std::uint32_t keep = rowp[src];
        for (std::size_t i = src; i > dst; --i) rowp[i] = rowp[i - 1];
        rowp[dst] = keep;
    };
    auto rotate_cols = [&](std::size_t dst, std::size_t src) {
        if (dst == src) return;
        for (std::size_t i = 0; i < m; ++i) {
            PrimeField::Element keep = w.at(i, src);
            for (std::size_t j = src; j > dst; --j) w.set(i, j, w.at(i, j - 1));
            w.set(i, dst, keep);
        }
        std::uint32_t keep = colp[src];
        for (std::size_t j = src; j > dst; --j) colp[j] = colp[j - 1];
        colp[dst] = keep;
    };

    std::size_t r = 0;
    for (;;) {
        // lexicographically minimal nonzero entry of the trailing block
        std::size_t pi = m, pj = n;
        for (std::size_t i = r; i < m && pi == m; ++i)
            for (std::size_t j = r; j < n; ++j)
                if (w.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m) break;
        rotate_rows(r, pi);
        rotate_cols(r, pj);
        PrimeField::Element inv_piv = f.inv(w.at(r, r));
        for (std::size_t i = r + 1; i < m; ++i) {
            PrimeField::Element fac = f.mul(w.at(i, r), inv_piv);
            w.set(i, r, fac);
            if (fac == 0) continue;
            for (std::size_t j = r + 1; j < n; ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(fac, w.at(r, j))));
        }
        ++r;
    }

    FMatrix lhat(f, m, r), uhat(f, r, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < r && k <= i; ++k)
            lhat.set(i, k, i == k ? f.one() : w.at(i, k));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = k; j < n; ++j) uhat.set(k, j, w.at(k, j));

    return PluqFactors{Permutation(rowp), std::move(lhat), std::move(uhat),
                       Permutation(colp).inverse(), r};
}

FMatrix rpm_matrix(const PluqFactors& f) {
    const PrimeField& fld = f.l.field();
    FMatrix e(fld, f.p.size(), f.q.size());
    for (std::size_t k = 0; k < f.rank; ++k) e.set(k, k, fld.one());
    return e.permute_rows(f.p).permute_cols(f.q);
}

FMatrix LdupFactors::assemble() const {
    const PrimeField& f = l.field();
    std::size_t n = d.size();
    FMatrix du(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) du.set(i, j, f.mul(d[i], u1.at(i, j)));
    return l.mul(du).permute_cols(p);
}

PrimeField::Element LdupFactors::det(const PrimeField& f) const {
    PrimeField::Element acc = f.one();
    for (auto v : d) acc = f.mul(acc, v);
    if (p.sign() < 0) acc = f.neg(acc);
    return acc;
}

LdupFactors ldup(const FMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("square matrix required");
    const PrimeField& f = a.field();
    const std::size_t n = a.rows();
    PluqFactors rf = pluq_rpm(a);
    if (rf.rank < n) throw SingularMatrix();
    Permutation perm = rf.p.compose(rf.q);  // the rank profile matrix of a nonsingular input
    FMatrix b = a.permute_cols(perm.inverse());  // A * P^T, has generic rank profile

    FMatrix l = FMatrix::identity(f, n), u1 = FMatrix::identity(f, n);
    Vec d(n);
    FMatrix w = b;
    for (std::size_t k = 0; k < n; ++k) {
        PrimeField::Element piv = w.at(k, k);
        if (piv == 0) throw SingularMatrix("pivot vanished, input lacks generic rank profile");
        d[k] = piv;
        PrimeField::Element inv_piv = f.inv(piv);
        for (std::size_t j = k + 1; j < n; ++j) u1.set(k, j, f.mul(w.at(k, j), inv_piv));
        for (std::size_t i = k + 1; i < n; ++i) {
            PrimeField::Element fac = f.mul(w.at(i, k), inv_piv);
            l.set(i, k, fac);
            if (fac == 0) continue;
            for (std::size_t j = k; j < n; ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(fac, w.at(k, j))));
        }
    }
    return LdupFactors{std::move(l), std::move(d), std::move(u1), std::move(perm)};
}

Vec lower_solve(const FMatrix& t, const Vec& b, bool unit_diagonal) {
    if (t.rows() != t.cols() || b.size() != t.rows()) throw DimensionMismatch("lower solve");
    const PrimeField& f = t.field();
    Vec x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        PrimeField::Element acc = b[i];
        for (std::size_t j = 0; j < i; ++j) acc = f.sub(acc, f.mul(t.at(i, j), x[j]));
        if (unit_diagonal) {
            x[i] = acc;
        } else {
            if (t.at(i, i) == 0) throw SingularMatrix("zero on triangular diagonal");
            x[i] = f.div(acc, t.at(i, i));
        }
    }
    return x;
}

Vec upper_solve(const FMatrix& t, const Vec& b, bool unit_diagonal) {
    if (t.rows() != t.cols() || b.size() != t.rows()) throw DimensionMismatch("upper solve");
    const PrimeField& f = t.field();
    const std::size_t n = b.size();
    Vec x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        PrimeField::Element acc = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc = f.sub(acc, f.mul(t.at(ii, j), x[j]));
        if (unit_diagonal) {
            x[ii] = acc;
        } else {
            if (t.at(ii, ii) == 0) throw SingularMatrix("zero on triangular diagonal");
            x[ii] = f.div(acc, t.at(ii, ii));
        }
    }
    return x;
}

std::optional<Vec> solve_full_column_rank(const PluqFactors& fac, const Vec& b) {
    const PrimeField& f = fac.l.field();
    const std::size_t m = fac.l.rows(), r = fac.rank, n = fac.q.size();
    if (r < n) return std::nullopt;
    if (b.size() != m) throw DimensionMismatch("solve rhs");
    // P L U Q x = b
    Vec y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = b[fac.p.image(i)];
    Vec z(r);
    for (std::size_t k = 0; k < r; ++k) {
        PrimeField::Element acc = y[k];
        for (std::size_t l = 0; l < k; ++l) acc = f.sub(acc, f.mul(fac.l.at(k, l), z[l]));
        z[k] = acc;  // unit diagonal
    }
    for (std::size_t i = r; i < m; ++i) {
        PrimeField::Element acc = y[i];
        for (std::size_t l = 0; l < r; ++l) acc = f.sub(acc, f.mul(fac.l.at(i, l), z[l]));
        if (acc != 0) return std::nullopt;  // inconsistent
    }
    Vec t(r);
    for (std::size_t kk = r; kk-- > 0;) {
        PrimeField::Element acc = z[kk];
        for (std::size_t j = kk + 1; j < r; ++j) acc = f.sub(acc, f.mul(fac.u.at(kk, j), t[j]));
        t[kk] = f.div(acc, fac.u.at(kk, kk));
    }
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = t[fac.q.image(j)];
    return x;
}

bool is_lower_triangular(const FMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

bool is_upper_triangular(const FMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i && j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

bool is_row_echelon(const FMatrix& m) {
    std::ptrdiff_t last = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::ptrdiff_t lead = -1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) {
                lead = static_cast<std::ptrdiff_t>(j);
                break;
            }
        if (lead < 0) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row || lead <= last) return false;
        last = lead;
    }
    return true;
}

bool is_column_echelon(const FMatrix& m) {
    return is_row_echelon(m.transpose());
}

FMatrix conjugate_by_perm(const FMatrix& m, const Permutation& p) {
    return m.permute_rows(p).permute_cols(p.inverse());
}

std::size_t BlockDiagonal::dimension() const {
    std::size_t d = 0;
    for (const auto& b : blocks) d += b.two_by_two ? 2 : 1;
    return d;
}

bool BlockDiagonal::all_invertible() const {
    for (const auto& b : blocks) {
        if (!b.two_by_two) {
            if (b.a.is_zero()) return false;
        } else if ((b.a * b.c - b.b * b.b).is_zero()) {
            return false;
        }
    }
    return true;
}

QMatrix BlockDiagonal::to_matrix() const {
    QMatrix m(dimension(), dimension());
    std::size_t k = 0;
    for (const auto& b : blocks) {
        if (!b.two_by_two) {
            m.set(k, k, b.a);
            k += 1;
        } else {
            m.set(k, k, b.a);
            m.set(k, k + 1, b.b);
            m.set(k + 1, k, b.b);
            m.set(k + 1, k + 1, b.c);
            k += 2;
        }
    }
    return m;
}

std::pair<int, int> BlockDiagonal::inertia() const {
    int pos = 0, neg = 0;
    for (const auto& b : blocks) {
        if (!b.two_by_two) {
            (b.a.sign() > 0 ? pos : neg) += 1;
        } else {
            Rational det = b.a * b.c - b.b * b.b;
            if (det.sign() < 0) {
                pos += 1;
                neg += 1;
            } else {
                // both eigenvalues share the sign of the trace
                ((b.a + b.c).sign() > 0 ? pos : neg) += 2;
            }
        }
    }
    return {pos, neg};
}

SymLdlt symmetric_block_ldlt(const QMatrix& b) {
    if (!b.is_symmetric()) throw NotSymmetric();
    const std::size_t n = b.rows();
    QMatrix w = b;
    QMatrix l = QMatrix::identity(n);
    BlockDiagonal delta;

    std::size_t k = 0;
    while (k < n) {
        if (!w.at(k, k).is_zero()) {
            Rational piv = w.at(k, k);
            delta.blocks.push_back({false, piv, Rational(), Rational()});
            Rational inv = piv.inv();
            for (std::size_t i = k + 1; i < n; ++i) l.set(i, k, w.at(i, k) * inv);
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    w.set(i, j, w.at(i, j) - l.at(i, k) * w.at(k, j));
            k += 1;
        } else {
            if (k + 1 >= n || w.at(k + 1, k).is_zero())
                throw PivotFailure("no invertible 1x1 or 2x2 leading pivot");
            Rational pb = w.at(k + 1, k), pc = w.at(k + 1, k + 1);
            delta.blocks.push_back({true, Rational(0), pb, pc});
            // inverse of [0 b; b c] is (-1/b^2) [c -b; -b 0]
            Rational det = -(pb * pb);
            Rational i00 = pc / det, i01 = -pb / det, i11 = Rational(0);
            for (std::size_t i = k + 2; i < n; ++i) {
                Rational wi0 = w.at(i, k), wi1 = w.at(i, k + 1);
                l.set(i, k, wi0 * i00 + wi1 * i01);
                l.set(i, k + 1, wi0 * i01 + wi1 * i11);
            }
            for (std::size_t i = k + 2; i < n; ++i)
                for (std::size_t j = k + 2; j < n; ++j)
                    w.set(i, j, w.at(i, j) - l.at(i, k) * w.at(k, j) - l.at(i, k + 1) * w.at(k + 1, j));
            k += 2;
        }
    }
    if (!delta.all_invertible()) throw SingularMatrix("singular block pivot");
    return SymLdlt{std::move(l), std::move(delta)};
}

Permutation grp_forcing_permutation(const QMatrix& b, RandomSource& rng) {
    if (!b.is_symmetric()) throw NotSymmetric();
    const std::size_t n = b.rows();
    std::vector<std::uint64_t> used_primes;
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::uint64_t q = random_prime(31, used_primes, rng);
        used_primes.push_back(q);
        FMatrix w(PrimeField(q), 0, 0);
        try {
            w = b.mod(PrimeField(q));
        } catch (const BadPrime&) {
            continue;
        }
        const PrimeField f = w.field();
        std::vector<std::uint32_t> pos(n);
        std::iota(pos.begin(), pos.end(), 0);
        auto sym_swap = [&](std::size_t x, std::size_t y) {
            if (x == y) return;
            for (std::size_t j = 0; j < n; ++j) {
                auto t = w.at(x, j);
                w.set(x, j, w.at(y, j));
                w.set(y, j, t);
            }
            for (std::size_t i = 0; i < n; ++i) {
                auto t = w.at(i, x);
                w.set(i, x, w.at(i, y));
                w.set(i, y, t);
            }
            std::swap(pos[x], pos[y]);
        };
        bool ok = true;
        std::size_t k = 0;
        while (k < n && ok) {
            std::size_t t1 = n;
            for (std::size_t t = k; t < n; ++t)
                if (w.at(t, t) != 0) {
                    t1 = t;
                    break;
                }
            if (t1 < n) {
                sym_swap(k, t1);
                PrimeField::Element inv = f.inv(w.at(k, k));
                for (std::size_t i = k + 1; i < n; ++i) {
                    PrimeField::Element fac = f.mul(w.at(i, k), inv);
                    if (fac == 0) continue;
                    for (std::size_t j = k; j < n; ++j)
                        w.set(i, j, f.sub(w.at(i, j), f.mul(fac, w.at(k, j))));
                }
                k += 1;
                continue;
            }
            // whole trailing diagonal vanished; take an anti-diagonal 2x2 pivot
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (w.at(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                ok = false;  // trailing block vanished mod q, retry with another prime
                break;
            }
            sym_swap(k, pi);
            sym_swap(k + 1, pj);
            PrimeField::Element pb = w.at(k + 1, k);
            PrimeField::Element pcv = w.at(k + 1, k + 1);
            PrimeField::Element det = f.neg(f.mul(pb, pb));
            PrimeField::Element i00 = f.div(pcv, det), i01 = f.neg(f.div(pb, det));
            for (std::size_t i = k + 2; i < n; ++i) {
                PrimeField::Element li0 = f.add(f.mul(w.at(i, k), i00), f.mul(w.at(i, k + 1), i01));
                PrimeField::Element li1 = f.mul(w.at(i, k), i01);
                for (std::size_t j = k; j < n; ++j)
                    w.set(i, j, f.sub(w.at(i, j),
                                      f.add(f.mul(li0, w.at(k, j)), f.mul(li1, w.at(k + 1, j)))));
            }
            k += 2;
        }
        if (ok) return Permutation(pos);
    }
    throw SingularMatrix("no usable permutation found; matrix is likely singular");
}

}  // namespace lincert
