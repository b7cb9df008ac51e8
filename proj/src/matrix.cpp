#include "lincert/matrix.hpp"

#include <algorithm>

namespace lincert {

FMatrix FMatrix::identity(PrimeField f, std::size_t n) {
    FMatrix a(f, n, n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, f.one());
    return a;
}

FMatrix FMatrix::random(PrimeField f, std::size_t m, std::size_t n, RandomSource& rng,
                        const SampleSet& set) {
    FMatrix a(f, m, n);
    for (auto& v : a.e_) v = set.sample(f, rng);
    return a;
}

FMatrix FMatrix::random_rank(PrimeField f, std::size_t m, std::size_t n, std::size_t r,
                             RandomSource& rng) {
    if (r > std::min(m, n)) throw DimensionMismatch("rank exceeds dimensions");
    // unit lower trapezoid times full-row-rank upper trapezoid, then random
    // row/column permutations so the rank profiles are scattered
    FMatrix l(f, m, r), u(f, r, n);
    auto nz = SampleSet::nonzero();
    auto whole = SampleSet::whole_field();
    for (std::size_t k = 0; k < r; ++k) {
        l.set(k, k, f.one());
        for (std::size_t i = k + 1; i < m; ++i) l.set(i, k, whole.sample(f, rng));
        u.set(k, k, nz.sample(f, rng));
        for (std::size_t j = k + 1; j < n; ++j) u.set(k, j, whole.sample(f, rng));
    }
    FMatrix a = l.mul(u);
    std::vector<std::uint32_t> rp(m), cp(n);
    for (std::size_t i = 0; i < m; ++i) rp[i] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j < n; ++j) cp[j] = static_cast<std::uint32_t>(j);
    for (std::size_t i = m; i > 1; --i) std::swap(rp[i - 1], rp[rng.uniform_below(i)]);
    for (std::size_t j = n; j > 1; --j) std::swap(cp[j - 1], cp[rng.uniform_below(j)]);
    return a.permute_rows(Permutation(rp)).permute_cols(Permutation(cp));
}

FMatrix FMatrix::random_nonsingular(PrimeField f, std::size_t n, RandomSource& rng) {
    return random_rank(f, n, n, n, rng);
}

FMatrix FMatrix::random_grp(PrimeField f, std::size_t n, RandomSource& rng) {
    // L*U with nonzero diagonals and no permutation: every leading minor is
    // a product of pivots
    FMatrix l(f, n, n), u(f, n, n);
    auto nz = SampleSet::nonzero();
    auto whole = SampleSet::whole_field();
    for (std::size_t k = 0; k < n; ++k) {
        l.set(k, k, f.one());
        u.set(k, k, nz.sample(f, rng));
        for (std::size_t i = k + 1; i < n; ++i) {
            l.set(i, k, whole.sample(f, rng));
            u.set(k, i, whole.sample(f, rng));
        }
    }
    return l.mul(u);
}

FMatrix FMatrix::transpose() const {
    FMatrix t(f_, n_, m_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.set(j, i, at(i, j));
    return t;
}

FMatrix FMatrix::mul(const FMatrix& o) const {
    if (n_ != o.m_) throw DimensionMismatch("matrix multiply");
    FMatrix c(f_, m_, o.n_);
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            PrimeField::Element aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.n_; ++j)
                c.e_[i * o.n_ + j] = f_.add(c.e_[i * o.n_ + j], f_.mul(aik, o.at(k, j)));
        }
    }
    return c;
}

FMatrix FMatrix::add(const FMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionMismatch("matrix add");
    FMatrix c(f_, m_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) c.e_[i] = f_.add(e_[i], o.e_[i]);
    return c;
}

FMatrix FMatrix::sub(const FMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) throw DimensionMismatch("matrix sub");
    FMatrix c(f_, m_, n_);
    for (std::size_t i = 0; i < e_.size(); ++i) c.e_[i] = f_.sub(e_[i], o.e_[i]);
    return c;
}

bool FMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](PrimeField::Element v) { return v == 0; });
}

Vec FMatrix::matvec(const Vec& v) const {
    if (v.size() != n_) throw DimensionMismatch("matvec");
    Vec out(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
        PrimeField::Element acc = 0;
        const PrimeField::Element* row = &e_[i * n_];
        for (std::size_t j = 0; j < n_; ++j) acc = f_.add(acc, f_.mul(row[j], v[j]));
        out[i] = acc;
    }
    return out;
}

Vec FMatrix::vecmat(const Vec& u) const {
    if (u.size() != m_) throw DimensionMismatch("vecmat");
    Vec out(n_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
        PrimeField::Element ui = u[i];
        if (ui == 0) continue;
        const PrimeField::Element* row = &e_[i * n_];
        for (std::size_t j = 0; j < n_; ++j) out[j] = f_.add(out[j], f_.mul(ui, row[j]));
    }
    return out;
}

Vec FMatrix::row(std::size_t i) const {
    return Vec(e_.begin() + i * n_, e_.begin() + (i + 1) * n_);
}

Vec FMatrix::col(std::size_t j) const {
    Vec out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = at(i, j);
    return out;
}

FMatrix FMatrix::submatrix(const std::vector<std::uint32_t>& rows,
                           const std::vector<std::uint32_t>& cols) const {
    FMatrix s(f_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= m_) throw IndexOutOfRange("row selection");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= n_) throw IndexOutOfRange("column selection");
            s.set(i, j, at(rows[i], cols[j]));
        }
    }
    return s;
}

FMatrix FMatrix::columns(const std::vector<std::uint32_t>& cols) const {
    std::vector<std::uint32_t> all(m_);
    for (std::size_t i = 0; i < m_; ++i) all[i] = static_cast<std::uint32_t>(i);
    return submatrix(all, cols);
}

FMatrix FMatrix::permute_rows(const Permutation& p) const {
    if (p.size() != m_) throw DimensionMismatch("row permutation");
    FMatrix out(f_, m_, n_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.set(p.image(i), j, at(i, j));
    return out;
}

FMatrix FMatrix::permute_cols(const Permutation& q) const {
    if (q.size() != n_) throw DimensionMismatch("column permutation");
    FMatrix out(f_, m_, n_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.set(i, j, at(i, q.image(j)));
    return out;
}

PrimeField::Element dot(const PrimeField& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product");
    PrimeField::Element acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

Vec apply_perm(const Permutation& p, const Vec& v) {
    if (p.size() != v.size()) throw DimensionMismatch("permutation apply");
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[p.image(j)] = v[j];
    return out;
}

Vec apply_perm_transposed(const Permutation& p, const Vec& v) {
    if (p.size() != v.size()) throw DimensionMismatch("permutation apply");
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[p.image(j)];
    return out;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a.set(i, i, Rational(1));
    return a;
}

bool QMatrix::is_symmetric() const {
    if (m_ != n_) return false;
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(n_, m_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t.set(j, i, at(i, j));
    return t;
}

QMatrix QMatrix::mul(const QMatrix& o) const {
    if (n_ != o.m_) throw DimensionMismatch("rational matrix multiply");
    QMatrix c(m_, o.n_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < o.n_; ++j) {
            Rational acc;
            for (std::size_t k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
            c.set(i, j, std::move(acc));
        }
    return c;
}

bool QMatrix::operator==(const QMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

QMatrix QMatrix::submatrix(const std::vector<std::uint32_t>& rows,
                           const std::vector<std::uint32_t>& cols) const {
    QMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= m_ || cols[j] >= n_) throw IndexOutOfRange("rational submatrix");
            s.set(i, j, at(rows[i], cols[j]));
        }
    return s;
}

FMatrix QMatrix::mod(const PrimeField& f) const {
    FMatrix out(f, m_, n_);
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.set(i, j, at(i, j).mod(f));
    return out;
}

FMatrix selection_embed(const PrimeField& f, std::size_t m,
                        const std::vector<std::uint32_t>& indices) {
    FMatrix e(f, m, indices.size());
    std::uint32_t prev = 0;
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= m || (j > 0 && indices[j] <= prev))
            throw IndexOutOfRange("selection indices must be strictly increasing and < m");
        prev = indices[j];
        e.set(indices[j], j, f.one());
    }
    return e;
}

}  // namespace lincert
