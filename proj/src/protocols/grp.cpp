#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagPhiPsi = 0x02;
constexpr std::uint8_t kTagXY = 0x03;
constexpr std::uint8_t kTagLambda = 0x04;
constexpr std::uint8_t kTagZ = 0x05;

// Streaming check that a nonsingular matrix factors as (lower)(upper): the
// prover reveals projections of the triangular factors one coordinate at a
// time, from the last coordinate down, and the verifier closes with
// z^T [x y] == (lambda^T A) [phi psi].

class GrpProver final : public ProverBase {
public:
    explicit GrpProver(const Instance& inst) : n_(inst.a.rows()) {
        LuFactors lu = lu_nopivot(inst.a);  // throws SingularMatrix when not GRP
        l_ = std::make_unique<FMatrix>(std::move(lu.l));
        u_ = std::make_unique<FMatrix>(std::move(lu.u));
        phi_.assign(n_, 0);
        psi_.assign(n_, 0);
        lambda_.assign(n_, 0);
    }
    ProtocolId protocol() const override { return ProtocolId::Grp; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = l_->field();
        if (step_ == 0) {
            ++step_;
            return msg(ProtocolId::Grp, kTagCommit);  // claim: generic rank profile
        }
        std::size_t iter = (step_ - 1) / 2;   // 0..n-1
        std::size_t i = n_ - 1 - iter;        // coordinate handled this iteration
        if (step_ % 2 == 1) {
            expect(in, kTagPhiPsi, 2);
            count_recv(2);
            phi_[i] = in->items[0];
            psi_[i] = in->items[1];
            PrimeField::Element x = 0, y = 0;
            for (std::size_t j = i; j < n_; ++j) {
                x = f.add(x, f.mul(u_->at(i, j), phi_[j]));
                y = f.add(y, f.mul(u_->at(i, j), psi_[j]));
            }
            ++step_;
            count_sent(2);
            return msg(ProtocolId::Grp, kTagXY, {x, y});
        }
        expect(in, kTagLambda, 1);
        count_recv(1);
        lambda_[i] = in->items[0];
        PrimeField::Element z = 0;
        for (std::size_t k = i; k < n_; ++k) z = f.add(z, f.mul(lambda_[k], l_->at(k, i)));
        if (++step_ == 2 * n_ + 1) done_ = true;
        count_sent(1);
        return msg(ProtocolId::Grp, kTagZ, {z});
    }

private:
    std::size_t n_;
    std::unique_ptr<FMatrix> l_, u_;
    Vec phi_, psi_, lambda_;
};

class GrpVerifier final : public VerifierBase {
public:
    GrpVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set), a_(inst.a), n_(inst.a.rows()) {
        if (a_.rows() != a_.cols()) throw DimensionMismatch("square matrix required");
        phi_.assign(n_, 0);
        psi_.assign(n_, 0);
        lambda_.assign(n_, 0);
        x_.assign(n_, 0);
        y_.assign(n_, 0);
        z_.assign(n_, 0);
    }
    ProtocolId protocol() const override { return ProtocolId::Grp; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        if (step_ == 0) {
            take(in, kTagCommit, 0);
            count_round();
            ++step_;
            return send_phi_psi(f);
        }
        std::size_t iter = (step_ - 1) / 2;
        std::size_t i = n_ - 1 - iter;
        if (step_ % 2 == 1) {
            const Message& m = take_elems(in, kTagXY, 2, f);
            count_recv(2);
            x_[i] = m.items[0];
            y_[i] = m.items[1];
            ++step_;
            lambda_[i] = chal(f);
            count_round();
            count_sent(1);
            return msg(ProtocolId::Grp, kTagLambda, {lambda_[i]});
        }
        const Message& m = take_elems(in, kTagZ, 1, f);
        count_recv(1);
        z_[i] = m.items[0];
        ++step_;
        if (iter + 1 < n_) return send_phi_psi(f);
        // final dot-product checks against one vector-matrix product
        Vec ua = mu_vecmat(a_, lambda_);
        bool ok = dot(f, z_, x_) == dot(f, ua, phi_) && dot(f, z_, y_) == dot(f, ua, psi_);
        if (!ok) return finish_reject(Reason::FinalCheckFailed);
        Outputs o;
        o.grp = true;
        return finish_accept(std::move(o));
    }

private:
    std::optional<Message> send_phi_psi(const PrimeField& f) {
        std::size_t i = n_ - 1 - (step_ - 1) / 2;
        phi_[i] = chal(f, 0);
        psi_[i] = chal(f, 1);
        count_round();
        count_sent(2);
        return msg(ProtocolId::Grp, kTagPhiPsi, {phi_[i], psi_[i]});
    }

    FMatrix a_;
    std::size_t n_;
    Vec phi_, psi_, lambda_, x_, y_, z_;
};

}  // namespace

std::unique_ptr<Session> grp_prover(const Instance& inst) {
    return std::make_unique<GrpProver>(inst);
}
std::unique_ptr<Session> grp_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<GrpVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
