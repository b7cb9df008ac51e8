#include <algorithm>

#include "lincert/laurent.hpp"
#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagD = 0x02;
constexpr std::uint8_t kTagG = 0x03;
constexpr std::uint8_t kTagLambda = 0x04;
constexpr std::uint8_t kTagYresp = 0x05;
constexpr std::uint8_t kTagBundle = 0x06;
constexpr std::uint8_t kTagBetaG = 0x07;
constexpr std::uint8_t kTagW = 0x08;
constexpr std::uint8_t kTagGamma = 0x09;

// Constant-round variants: instead of revealing projections coordinate by
// coordinate, the prover commits the diagonal-weighted polynomial
// sum_{i,j} (T D)[i][j] X^(i-j) whose degree stays below n exactly when the
// hidden factor is triangular, and the verifier tests it at a random point
// against powers of that point folded through the response vector.

FMatrix reverse_cols(const FMatrix& a) {
    FMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, a.cols() - 1 - j));
    return out;
}

FMatrix reverse_both(const FMatrix& a) {
    FMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, a.at(a.rows() - 1 - i, a.cols() - 1 - j));
    return out;
}

// g as exactly n coefficients for degrees 0..n-1; any support outside that
// window is simply not representable, so a non-triangular factor cannot be
// encoded honestly
std::vector<std::uint64_t> poly_coeffs(const LaurentPoly& g, std::size_t n) {
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t k = 0; k < g.coeff.size(); ++k) {
        std::ptrdiff_t e = g.lo + static_cast<std::ptrdiff_t>(k);
        if (e >= 0 && e < static_cast<std::ptrdiff_t>(n)) out[e] = g.coeff[k];
    }
    return out;
}

Vec descending_powers(const PrimeField& f, PrimeField::Element lambda, std::size_t n) {
    Vec x(n);
    PrimeField::Element li = f.inv(lambda), acc = f.one();
    for (std::size_t k = 0; k < n; ++k) {
        x[k] = acc;
        acc = f.mul(acc, li);
    }
    return x;  // (1, lambda^-1, ..., lambda^(1-n))
}

PrimeField::Element poly_eval(const PrimeField& f, const std::vector<std::uint64_t>& coeffs,
                              PrimeField::Element lambda) {
    PrimeField::Element acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = f.add(f.mul(acc, lambda), coeffs[k]);
    return acc;
}

PrimeField::Element ascending_dot(const PrimeField& f, PrimeField::Element lambda, const Vec& y) {
    PrimeField::Element acc = 0, pw = f.one();
    for (std::size_t k = 0; k < y.size(); ++k) {
        acc = f.add(acc, f.mul(pw, y[k]));
        pw = f.mul(pw, lambda);
    }
    return acc;  // (1, lambda, ..., lambda^(r-1)) . y
}

// ---- triangular equivalence in three rounds

class TriEquivConstProver final : public ProverBase {
public:
    explicit TriEquivConstProver(const Instance& inst) {
        FMatrix a = inst.side == Side::Lower ? inst.a : reverse_cols(inst.a);
        FMatrix b = inst.side == Side::Lower ? *inst.b : reverse_cols(*inst.b);
        if (a.rows() < a.cols()) throw DimensionMismatch("rows >= cols required");
        n_ = a.cols();
        // both inputs already live in the flipped frame, so the unique factor
        // solved here is lower triangular exactly when the claim holds
        t_ = std::make_unique<FMatrix>(solve_equivalence(pluq_crp(a), b));
        a_ = std::make_unique<FMatrix>(std::move(a));
        b_ = std::make_unique<FMatrix>(std::move(b));
    }
    ProtocolId protocol() const override { return ProtocolId::TriEquivConst; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_->field();
        if (step_ == 0) {
            ++step_;
            return msg(ProtocolId::TriEquivConst, kTagCommit);
        }
        if (step_ == 1) {
            expect(in, kTagD, n_);
            count_recv(n_);
            d_ = in->items;
            ++step_;
            FMatrix td(f, n_, n_);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) td.set(i, j, f.mul(t_->at(i, j), d_[j]));
            auto g = poly_coeffs(laurent_poly(td), n_);
            count_sent(n_);
            return msg(ProtocolId::TriEquivConst, kTagG, std::move(g));
        }
        expect(in, kTagLambda, 1);
        count_recv(1);
        Vec x = descending_powers(f, in->items[0], n_);
        for (std::size_t k = 0; k < n_; ++k) x[k] = f.mul(x[k], d_[k]);
        Vec y = t_->matvec(x);
        done_ = true;
        count_sent(n_);
        return msg(ProtocolId::TriEquivConst, kTagYresp, std::move(y));
    }

private:
    std::size_t n_ = 0;
    std::unique_ptr<FMatrix> a_, b_, t_;
    Vec d_;
};

class TriEquivConstVerifier final : public VerifierBase {
public:
    TriEquivConstVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set) {
        FMatrix a = inst.side == Side::Lower ? inst.a : reverse_cols(inst.a);
        FMatrix b = inst.side == Side::Lower ? *inst.b : reverse_cols(*inst.b);
        if (a.rows() < a.cols()) throw DimensionMismatch("rows >= cols required");
        n_ = a.cols();
        a_ = std::make_unique<FMatrix>(std::move(a));
        b_ = std::make_unique<FMatrix>(std::move(b));
    }
    ProtocolId protocol() const override { return ProtocolId::TriEquivConst; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_->field();
        if (step_ == 0) {
            take(in, kTagCommit, 0);
            count_round();
            ++step_;
            d_.assign(n_, 0);
            for (std::size_t k = 0; k < n_; ++k)
                d_[k] = chal_nonzero(f, static_cast<std::uint32_t>(k));
            count_round();
            count_sent(n_);
            return msg(ProtocolId::TriEquivConst, kTagD, d_);
        }
        if (step_ == 1) {
            const Message& m = take(in, kTagG, n_);
            count_recv(n_);
            g_ = m.items;
            for (auto c : g_)
                if (c >= f.modulus()) return finish_reject(Reason::DegreeCheckFailed);
            ++step_;
            lambda_ = chal_nonzero(f);
            count_round();
            count_sent(1);
            return msg(ProtocolId::TriEquivConst, kTagLambda, {lambda_});
        }
        const Message& m = take_elems(in, kTagYresp, n_, f);
        count_recv(n_);
        Vec x = descending_powers(f, lambda_, n_);
        for (std::size_t k = 0; k < n_; ++k) x[k] = f.mul(x[k], d_[k]);
        if (mu_matvec(*a_, m.items) != mu_matvec(*b_, x))
            return finish_reject(Reason::FinalCheckFailed);
        if (poly_eval(f, g_, lambda_) != ascending_dot(f, lambda_, m.items))
            return finish_reject(Reason::EvaluationMismatch);
        Outputs o;
        o.equivalent = true;
        return finish_accept(std::move(o));
    }

private:
    std::size_t n_ = 0;
    std::unique_ptr<FMatrix> a_, b_;
    Vec d_;
    std::vector<std::uint64_t> g_;
    PrimeField::Element lambda_ = 0;
};

// ---- column rank profile in three rounds: the lower-bound exchange, the
// ---- masked-prefix challenge, and the polynomial-commitment equivalence
// ---- all share two verifier bursts

class CrpConstProver final : public ProverBase {
public:
    CrpConstProver(const Instance& inst, const ProverOptions& opt) : a_(inst.a) {
        cols_ = opt.rank_lower_cols ? *opt.rank_lower_cols : crp_of(pluq_crp(a_));
        if (!cols_.empty()) {
            lower_.emplace(a_, cols_);
            minimality_.emplace(a_, cols_);
        }
    }
    ProtocolId protocol() const override { return ProtocolId::CrpConst; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        const std::size_t m = a_.rows(), n = a_.cols(), r = cols_.size();
        if (step_ == 0) {
            ++step_;
            std::vector<std::uint64_t> items(cols_.begin(), cols_.end());
            count_sent(r);
            return msg(ProtocolId::CrpConst, kTagCommit, std::move(items));
        }
        if (r == 0) {
            expect(in, kTagW, m);
            count_recv(m);
            done_ = true;
            count_sent(n);
            return msg(ProtocolId::CrpConst, kTagGamma, Vec(n, 0));
        }
        if (step_ == 1) {
            expect(in, kTagBundle, m + n + r);
            count_recv(m + n + r);
            Vec nu(in->items.begin(), in->items.begin() + m);
            Vec v(in->items.begin() + m, in->items.begin() + m + n);
            dbar_.assign(in->items.begin() + m + n, in->items.end());
            ++step_;
            Vec beta = lower_->answer(nu);
            // flipped-to-lower change of basis, then its weighted polynomial
            FMatrix gamma = minimality_->gamma_for(v);
            lprime_ = std::make_unique<FMatrix>(reverse_both(gamma));
            FMatrix ld(f, r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) ld.set(i, j, f.mul(lprime_->at(i, j), dbar_[j]));
            auto g = poly_coeffs(laurent_poly(ld), r);
            std::vector<std::uint64_t> items = beta;
            items.insert(items.end(), g.begin(), g.end());
            count_sent(2 * r);
            return msg(ProtocolId::CrpConst, kTagBetaG, std::move(items));
        }
        expect(in, kTagLambda, 1);
        count_recv(1);
        Vec xbar = descending_powers(f, in->items[0], r);
        for (std::size_t k = 0; k < r; ++k) xbar[k] = f.mul(xbar[k], dbar_[k]);
        Vec ybar = lprime_->matvec(xbar);
        done_ = true;
        count_sent(r);
        return msg(ProtocolId::CrpConst, kTagYresp, std::move(ybar));
    }

private:
    FMatrix a_;
    std::vector<std::uint32_t> cols_;
    Vec dbar_;
    std::optional<RankLowerProver> lower_;
    std::optional<MinimalityProver> minimality_;
    std::unique_ptr<FMatrix> lprime_;
};

class CrpConstVerifier final : public VerifierBase {
public:
    CrpConstVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set), a_(inst.a) {}
    ProtocolId protocol() const override { return ProtocolId::CrpConst; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        const std::size_t m = a_.rows(), n = a_.cols();
        if (step_ == 0) {
            if (!in) throw ProtocolViolation("expected commitment");
            const Message& m0 = take(in, kTagCommit, in->items.size());
            count_round();
            count_recv(m0.items.size());
            if (!valid_index_list(m0.items, 0, m0.items.size(), n))
                return finish_reject(Reason::ClaimInvalid);
            cols_.assign(m0.items.begin(), m0.items.end());
            const std::size_t r = cols_.size();
            if (2 * r >= 2 && set_.size(f) < 2 * r - 1)
                return finish_reject(Reason::ClaimInvalid);  // soundness floor
            ++step_;
            if (r == 0) {
                Vec v(n);
                for (std::size_t i = 0; i < n; ++i) v[i] = chal(f, static_cast<std::uint32_t>(i));
                w_ = mu_matvec(a_, v);
                count_round();
                count_sent(m);
                return msg(ProtocolId::CrpConst, kTagW, w_);
            }
            // one burst: lower-bound challenge, masked-prefix seed, diagonal
            alpha_.assign(r, 0);
            Vec full(n, 0);
            for (std::size_t k = 0; k < r; ++k) {
                alpha_[k] = chal_nonzero(f, static_cast<std::uint32_t>(k));
                full[cols_[k]] = alpha_[k];
            }
            Vec nu = mu_matvec(a_, full);
            v_.assign(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                v_[i] = chal(f, static_cast<std::uint32_t>(r + i));
            dbar_.assign(r, 0);
            for (std::size_t k = 0; k < r; ++k)
                dbar_[k] = chal_nonzero(f, static_cast<std::uint32_t>(r + n + k));
            std::vector<std::uint64_t> items = nu;
            items.insert(items.end(), v_.begin(), v_.end());
            items.insert(items.end(), dbar_.begin(), dbar_.end());
            count_round();
            count_sent(m + n + r);
            return msg(ProtocolId::CrpConst, kTagBundle, std::move(items));
        }
        if (cols_.empty()) {
            const Message& mg = take_elems(in, kTagGamma, n, f);
            count_recv(n);
            for (auto g : mg.items)
                if (g != 0) return finish_reject(Reason::HammingWeightExceeded);
            if (mu_matvec(a_, mg.items) != w_) return finish_reject(Reason::FinalCheckFailed);
            Outputs o;
            o.rank = 0;
            o.col_profile = std::vector<std::uint32_t>{};
            return finish_accept(std::move(o));
        }
        const std::size_t r = cols_.size();
        if (step_ == 1) {
            const Message& mb = take_elems(in, kTagBetaG, 2 * r, f);
            count_recv(2 * r);
            Vec beta(mb.items.begin(), mb.items.begin() + r);
            if (beta != alpha_) return finish_reject(Reason::ResponseMismatch);
            g_.assign(mb.items.begin() + r, mb.items.end());
            ++step_;
            lambda_ = chal_nonzero(f);
            count_round();
            count_sent(1);
            return msg(ProtocolId::CrpConst, kTagLambda, {lambda_});
        }
        const Message& my = take_elems(in, kTagYresp, r, f);
        count_recv(r);
        const Vec& ybar = my.items;
        // back to the unreversed frame for the profile fold
        Vec xbar = descending_powers(f, lambda_, r);
        for (std::size_t k = 0; k < r; ++k) xbar[k] = f.mul(xbar[k], dbar_[k]);
        Vec x(r), y(r);
        for (std::size_t k = 0; k < r; ++k) {
            x[k] = xbar[r - 1 - k];
            y[k] = ybar[r - 1 - k];
        }
        Vec z = minimality_fold(f, n, cols_, v_, x, y);
        Vec az = mu_matvec(a_, z);
        for (auto e : az)
            if (e != 0) return finish_reject(Reason::FinalCheckFailed);
        if (poly_eval(f, g_, lambda_) != ascending_dot(f, lambda_, ybar))
            return finish_reject(Reason::EvaluationMismatch);
        Outputs o;
        o.rank = static_cast<std::uint32_t>(r);
        o.col_profile = cols_;
        return finish_accept(std::move(o));
    }

private:
    FMatrix a_;
    std::vector<std::uint32_t> cols_;
    Vec alpha_, w_, v_, dbar_;
    std::vector<std::uint64_t> g_;
    PrimeField::Element lambda_ = 0;
};

}  // namespace

std::unique_ptr<Session> tri_equiv_const_prover(const Instance& inst) {
    return std::make_unique<TriEquivConstProver>(inst);
}
std::unique_ptr<Session> tri_equiv_const_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<TriEquivConstVerifier>(inst, std::move(ctx));
}
std::unique_ptr<Session> crp_const_prover(const Instance& inst, const ProverOptions& opt) {
    return std::make_unique<CrpConstProver>(inst, opt);
}
std::unique_ptr<Session> crp_const_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<CrpConstVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
