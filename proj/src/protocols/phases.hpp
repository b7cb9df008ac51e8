#pragma once

// Building blocks shared by the composed certificates: the per-coordinate
// triangular-projection exchange, the committed-diagonal elimination loop,
// the rank lower-bound exchange, and the profile-minimality phase.

#include <optional>

#include "lincert/instance.hpp"
#include "lincert/linalg.hpp"
#include "lincert/transcript.hpp"

namespace lincert {
namespace detail {

/// Particular solution of (P L U Q) x = b, free coordinates set to zero.
/// Returns nullopt when the system is inconsistent.
std::optional<Vec> particular_solution(const PluqFactors& fac, const Vec& b);

/// Unique T with A T = B for A of full column rank, one solve per column;
/// inconsistent columns come out zero-filled (a dishonest claim surfaces in
/// the protocol checks, not here).
FMatrix solve_equivalence(const PluqFactors& fac_a, const FMatrix& b);

/// No-pivot A = L U with unit L; throws SingularMatrix when a pivot
/// vanishes (the input lacks generic rank profile).
struct LuFactors {
    FMatrix l, u;
};
LuFactors lu_nopivot(const FMatrix& a);

/// Prover half of the coordinate-at-a-time projection y = T x, where the
/// response order matches the claimed triangular shape.  Coordinates of x
/// not yet revealed contribute zero, which doubles as the best effort of a
/// prover whose T is not actually triangular.
class TriExchangeProver {
public:
    TriExchangeProver(FMatrix t, Side side) : t_(std::move(t)), side_(side) {}

    // x arrives for index j; returns y_j
    PrimeField::Element on_x(std::size_t j, PrimeField::Element xj) {
        const PrimeField& f = t_.field();
        if (x_.empty()) x_.assign(t_.cols(), 0);
        seen_.resize(t_.cols(), false);
        x_[j] = xj;
        seen_[j] = true;
        PrimeField::Element acc = 0;
        for (std::size_t k = 0; k < t_.cols(); ++k)
            if (seen_[k]) acc = f.add(acc, f.mul(t_.at(j, k), x_[k]));
        return acc;
    }

private:
    FMatrix t_;
    Side side_;
    Vec x_;
    std::vector<bool> seen_;
};

/// Verifier half: hands out the index order (reversed for an upper claim)
/// and accumulates both vectors.
class TriExchangeVerifier {
public:
    TriExchangeVerifier(std::size_t n, Side side) : n_(n), side_(side), x_(n, 0), y_(n, 0) {}

    bool done() const { return sent_ == n_; }
    std::size_t next_index() const { return side_ == Side::Lower ? sent_ : n_ - 1 - sent_; }
    void record(std::size_t idx, PrimeField::Element xv, PrimeField::Element yv) {
        x_[idx] = xv;
        y_[idx] = yv;
        ++sent_;
    }

    const Vec& x() const { return x_; }
    const Vec& y() const { return y_; }

private:
    std::size_t n_, sent_ = 0;
    Side side_;
    Vec x_, y_;
};

/// Prover half of the committed-diagonal elimination loop: the reduced
/// projections of the strictly-triangular parts of unit factors U1 and L.
class LdupLoopProver {
public:
    LdupLoopProver(FMatrix u1, FMatrix l) : u1_(std::move(u1)), l_(std::move(l)) {
        const std::size_t n = u1_.rows();
        phi_.assign(n, 0);
        psi_.assign(n, 0);
        lambda_.assign(n, 0);
    }

    // paper index i runs n..2; 0-based coordinate is i-1
    std::pair<PrimeField::Element, PrimeField::Element> on_phi_psi(std::size_t i0,
                                                                   PrimeField::Element phi,
                                                                   PrimeField::Element psi) {
        const PrimeField& f = u1_.field();
        const std::size_t n = u1_.rows();
        phi_[i0] = phi;
        psi_[i0] = psi;
        std::size_t k = i0 - 1;  // xbar coordinate emitted at this step
        PrimeField::Element xb = 0, yb = 0;
        for (std::size_t j = k + 1; j < n; ++j) {
            xb = f.add(xb, f.mul(u1_.at(k, j), phi_[j]));
            yb = f.add(yb, f.mul(u1_.at(k, j), psi_[j]));
        }
        return {xb, yb};
    }

    PrimeField::Element on_lambda(std::size_t i0, PrimeField::Element lambda) {
        const PrimeField& f = l_.field();
        const std::size_t n = l_.rows();
        lambda_[i0] = lambda;
        std::size_t k = i0 - 1;
        PrimeField::Element zb = 0;
        for (std::size_t i = k + 1; i < n; ++i) zb = f.add(zb, f.mul(lambda_[i], l_.at(i, k)));
        return zb;
    }

private:
    FMatrix u1_, l_;
    Vec phi_, psi_, lambda_;
};

/// Verifier-side accumulation for the same loop plus the final assembly
///   x = phi + [xbar; 0],  y = psi + [ybar; 0],  z = lambda + [zbar; 0].
class LdupLoopVerifier {
public:
    explicit LdupLoopVerifier(std::size_t n) : n_(n) {
        phi_.assign(n, 0);
        psi_.assign(n, 0);
        lambda_.assign(n, 0);
        xbar_.assign(n > 0 ? n - 1 : 0, 0);
        ybar_.assign(n > 0 ? n - 1 : 0, 0);
        zbar_.assign(n > 0 ? n - 1 : 0, 0);
    }

    std::size_t size() const { return n_; }
    // loop coordinates i0 = n-1 downto 1
    void set_phi_psi(std::size_t i0, PrimeField::Element phi, PrimeField::Element psi) {
        phi_[i0] = phi;
        psi_[i0] = psi;
    }
    void set_xbar_ybar(std::size_t i0, PrimeField::Element xb, PrimeField::Element yb) {
        xbar_[i0 - 1] = xb;
        ybar_[i0 - 1] = yb;
    }
    void set_lambda(std::size_t i0, PrimeField::Element l) { lambda_[i0] = l; }
    void set_zbar(std::size_t i0, PrimeField::Element zb) { zbar_[i0 - 1] = zb; }

    struct Assembled {
        Vec x, y, z, phi, psi, lambda;
    };
    Assembled finalize(const PrimeField& f, PrimeField::Element phi1, PrimeField::Element psi1,
                       PrimeField::Element lambda1) {
        phi_[0] = phi1;
        psi_[0] = psi1;
        lambda_[0] = lambda1;
        Assembled out{phi_, psi_, lambda_, phi_, psi_, lambda_};
        for (std::size_t k = 0; k < xbar_.size(); ++k) {
            out.x[k] = f.add(out.x[k], xbar_[k]);
            out.y[k] = f.add(out.y[k], ybar_[k]);
            out.z[k] = f.add(out.z[k], zbar_[k]);
        }
        return out;
    }

private:
    std::size_t n_;
    Vec phi_, psi_, lambda_, xbar_, ybar_, zbar_;
};

/// Prover answer in the lower-bound exchange: solve A beta = v knowing the
/// support is the committed column set; returns the support coordinates.
class RankLowerProver {
public:
    RankLowerProver(const FMatrix& a, std::vector<std::uint32_t> cols)
        : cols_(std::move(cols)), fac_(pluq_crp(a.columns(cols_))) {}

    Vec answer(const Vec& v) const {
        auto sol = particular_solution(fac_, v);
        if (sol) return *sol;
        return Vec(cols_.size(), 0);  // claim is false; send something well-formed
    }

    const std::vector<std::uint32_t>& cols() const { return cols_; }

private:
    std::vector<std::uint32_t> cols_;
    PluqFactors fac_;
};

/// Prover data for the minimality phase: the upper-triangular change of
/// basis from the committed profile columns to the masked prefix sums.
class MinimalityProver {
public:
    MinimalityProver(const FMatrix& a, std::vector<std::uint32_t> cols)
        : a_(&a), cols_(std::move(cols)), fac_(pluq_crp(a.columns(cols_))) {}

    /// Gamma with A_cols * Gamma = A * Diag(v) * W, solved column by column.
    FMatrix gamma_for(const Vec& v) const {
        const PrimeField& f = a_->field();
        const std::size_t r = cols_.size();
        const std::size_t n = a_->cols();
        FMatrix g(f, r, r);
        for (std::size_t k = 0; k < r; ++k) {
            std::size_t limit = k + 1 < r ? cols_[k + 1] : n;
            Vec masked(n, 0);
            for (std::size_t i = 0; i < limit; ++i) masked[i] = v[i];
            Vec b = a_->matvec(masked);
            auto sol = particular_solution(fac_, b);
            if (sol)
                for (std::size_t j = 0; j < r; ++j) g.set(j, k, (*sol)[j]);
        }
        return g;
    }

private:
    const FMatrix* a_;
    std::vector<std::uint32_t> cols_;
    PluqFactors fac_;
};

/// Verifier completion of the minimality phase: fold the exchanged
/// projection back through the masked prefix sums; the caller then checks
/// A z == 0.
Vec minimality_fold(const PrimeField& f, std::size_t n, const std::vector<std::uint32_t>& cols,
                    const Vec& v, const Vec& x, const Vec& y);

/// f_j = sum_{i<=j} e_i * Ubar[i][j]: the interleaved left-equivalence
/// responses for the conjugated unit factor.
class EfProver {
public:
    explicit EfProver(FMatrix ubar) : ubar_(std::move(ubar)), e_(ubar_.rows(), 0) {}

    PrimeField::Element on_e(std::size_t j, PrimeField::Element ej) {
        const PrimeField& f = ubar_.field();
        e_[j] = ej;
        PrimeField::Element acc = 0;
        for (std::size_t i = 0; i <= j; ++i) acc = f.add(acc, f.mul(e_[i], ubar_.at(i, j)));
        return acc;
    }

private:
    FMatrix ubar_;
    Vec e_;
};

}  // namespace detail
}  // namespace lincert
