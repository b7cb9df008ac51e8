#pragma once

#include <cstdint>
#include <vector>

#include "lincert/field.hpp"
#include "lincert/permutation.hpp"
#include "lincert/random.hpp"
#include "lincert/rational.hpp"

namespace lincert {

using Vec = std::vector<PrimeField::Element>;

/// Dense row-major matrix over a prime field.
class FMatrix {
public:
    FMatrix(PrimeField f, std::size_t m, std::size_t n)
        : f_(f), m_(m), n_(n), e_(m * n, 0) {}

    static FMatrix identity(PrimeField f, std::size_t n);
    static FMatrix random(PrimeField f, std::size_t m, std::size_t n, RandomSource& rng,
                          const SampleSet& set = SampleSet::whole_field());
    /// Random matrix of exact rank r with scattered row/column profiles.
    static FMatrix random_rank(PrimeField f, std::size_t m, std::size_t n, std::size_t r,
                               RandomSource& rng);
    /// Random nonsingular n x n.
    static FMatrix random_nonsingular(PrimeField f, std::size_t n, RandomSource& rng);
    /// Random nonsingular n x n with all leading minors nonzero.
    static FMatrix random_grp(PrimeField f, std::size_t n, RandomSource& rng);

    const PrimeField& field() const { return f_; }
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    PrimeField::Element at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, PrimeField::Element v) { e_[i * n_ + j] = v; }
    const Vec& data() const { return e_; }

    FMatrix transpose() const;
    FMatrix mul(const FMatrix& o) const;
    FMatrix add(const FMatrix& o) const;
    FMatrix sub(const FMatrix& o) const;
    bool operator==(const FMatrix& o) const { return m_ == o.m_ && n_ == o.n_ && e_ == o.e_; }
    bool is_zero() const;

    Vec matvec(const Vec& v) const;            // A * v
    Vec vecmat(const Vec& u) const;            // u^T * A
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    /// Rows and columns picked by 0-based index lists.
    FMatrix submatrix(const std::vector<std::uint32_t>& rows,
                      const std::vector<std::uint32_t>& cols) const;
    FMatrix columns(const std::vector<std::uint32_t>& cols) const;

    FMatrix permute_rows(const Permutation& p) const;   // P * A
    FMatrix permute_cols(const Permutation& q) const;   // A * Q

private:
    PrimeField f_;
    std::size_t m_, n_;
    Vec e_;
};

/// Vector helpers over a field.
PrimeField::Element dot(const PrimeField& f, const Vec& a, const Vec& b);
Vec apply_perm(const Permutation& p, const Vec& v);      // P * v
Vec apply_perm_transposed(const Permutation& p, const Vec& v);  // P^T * v

/// Dense matrix over the rationals; used by the signature path only.
class QMatrix {
public:
    QMatrix(std::size_t m, std::size_t n) : m_(m), n_(n), e_(m * n) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Rational v) { e_[i * n_ + j] = std::move(v); }

    bool is_symmetric() const;
    QMatrix transpose() const;
    QMatrix mul(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const;

    QMatrix submatrix(const std::vector<std::uint32_t>& rows,
                      const std::vector<std::uint32_t>& cols) const;

    /// Entry-wise reduction mod f; throws BadPrime on a divisible denominator.
    FMatrix mod(const PrimeField& f) const;

private:
    std::size_t m_, n_;
    std::vector<Rational> e_;
};

/// 0/1 selection matrix whose j-th column is the indices[j]-th canonical
/// basis vector of dimension m (indices 0-based, strictly increasing).
FMatrix selection_embed(const PrimeField& f, std::size_t m,
                        const std::vector<std::uint32_t>& indices);

}  // namespace lincert
