#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagPhiPsi = 0x02;
constexpr std::uint8_t kTagXbYb = 0x03;
constexpr std::uint8_t kTagLambda = 0x04;
constexpr std::uint8_t kTagZb = 0x05;

// Same streaming shape as the generic-rank-profile check, but the
// permutation and the pivot diagonal are committed up front and the
// verifier completes the first coordinate of every vector itself, which
// pins the unit-triangular normalization of both hidden factors.
// The determinant flavor additionally compares the claimed value against
// the product of the committed diagonal and the permutation sign.

class LdupProver final : public ProverBase {
public:
    LdupProver(const Instance& inst, const ProverOptions& opt)
        : id_(inst.id), n_(inst.a.rows()), fac_(ldup(inst.a)) {
        claimed_det_ = opt.det_claim ? *opt.det_claim : fac_.det(inst.a.field());
        loop_.emplace(fac_.u1, fac_.l);
    }
    ProtocolId protocol() const override { return id_; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (step_ == 0) {
            ++step_;
            std::vector<std::uint64_t> items;
            for (auto v : fac_.p.images()) items.push_back(v);
            items.insert(items.end(), fac_.d.begin(), fac_.d.end());
            count_sent(2 * n_);
            if (id_ == ProtocolId::Determinant) items.push_back(claimed_det_);
            if (n_ == 1) done_ = true;  // loop body is empty
            return msg(id_, kTagCommit, std::move(items));
        }
        std::size_t iter = (step_ - 1) / 2;  // 0..n-2
        std::size_t i0 = n_ - 1 - iter;
        if (step_ % 2 == 1) {
            expect(in, kTagPhiPsi, 2);
            count_recv(2);
            auto [xb, yb] = loop_->on_phi_psi(i0, in->items[0], in->items[1]);
            ++step_;
            count_sent(2);
            return msg(id_, kTagXbYb, {xb, yb});
        }
        expect(in, kTagLambda, 1);
        count_recv(1);
        PrimeField::Element zb = loop_->on_lambda(i0, in->items[0]);
        if (++step_ == 2 * (n_ - 1) + 1) done_ = true;
        count_sent(1);
        return msg(id_, kTagZb, {zb});
    }

private:
    ProtocolId id_;
    std::size_t n_;
    LdupFactors fac_;
    PrimeField::Element claimed_det_ = 0;
    std::optional<LdupLoopProver> loop_;
};

class LdupVerifier final : public VerifierBase {
public:
    LdupVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set),
          id_(inst.id),
          a_(inst.a),
          n_(inst.a.rows()),
          loop_(inst.a.rows()),
          expected_det_(ctx.expected_det) {
        if (a_.rows() != a_.cols()) throw DimensionMismatch("square matrix required");
    }
    ProtocolId protocol() const override { return id_; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        if (step_ == 0) {
            std::size_t extra = id_ == ProtocolId::Determinant ? 1 : 0;
            const Message& m = take(in, kTagCommit, 2 * n_ + extra);
            count_round();
            count_recv(2 * n_);
            if (!valid_perm_items(m.items, 0, n_)) return finish_reject(Reason::NotAPermutation);
            perm_.emplace(std::vector<std::uint32_t>(m.items.begin(), m.items.begin() + n_));
            d_.assign(m.items.begin() + n_, m.items.begin() + 2 * n_);
            for (auto v : d_)
                if (v == 0 || v >= f.modulus()) return finish_reject(Reason::ZeroOnDiagonal);
            if (extra) claimed_det_ = m.items[2 * n_];
            ++step_;
            if (n_ == 1) return finalize(f);
            return send_phi_psi(f);
        }
        std::size_t iter = (step_ - 1) / 2;
        std::size_t i0 = n_ - 1 - iter;
        if (step_ % 2 == 1) {
            const Message& m = take_elems(in, kTagXbYb, 2, f);
            count_recv(2);
            loop_.set_xbar_ybar(i0, m.items[0], m.items[1]);
            ++step_;
            PrimeField::Element l = chal(f);
            loop_.set_lambda(i0, l);
            count_round();
            count_sent(1);
            return msg(id_, kTagLambda, {l});
        }
        const Message& m = take_elems(in, kTagZb, 1, f);
        count_recv(1);
        loop_.set_zbar(i0, m.items[0]);
        ++step_;
        if (iter + 1 < n_ - 1) return send_phi_psi(f);
        return finalize(f);
    }

private:
    std::optional<Message> send_phi_psi(const PrimeField& f) {
        std::size_t i0 = n_ - 1 - (step_ - 1) / 2;
        PrimeField::Element phi = chal(f, 0), psi = chal(f, 1);
        loop_.set_phi_psi(i0, phi, psi);
        count_round();
        count_sent(2);
        return msg(id_, kTagPhiPsi, {phi, psi});
    }

    std::optional<Message> finalize(const PrimeField& f) {
        auto fin = loop_.finalize(f, chal(f, 0), chal(f, 1), chal(f, 2));
        Vec zd(n_);
        for (std::size_t k = 0; k < n_; ++k) zd[k] = f.mul(fin.z[k], d_[k]);
        Vec u = mu_vecmat(a_, fin.lambda);
        Vec w = apply_perm(*perm_, u);  // lambda^T A P^T
        bool ok = dot(f, zd, fin.x) == dot(f, w, fin.phi) && dot(f, zd, fin.y) == dot(f, w, fin.psi);
        if (!ok) return finish_reject(Reason::FinalCheckFailed);
        Outputs o;
        if (id_ == ProtocolId::Determinant) {
            PrimeField::Element det = f.one();
            for (auto v : d_) det = f.mul(det, v);
            if (perm_->sign() < 0) det = f.neg(det);
            if (det != claimed_det_) return finish_reject(Reason::ClaimMismatch);
            if (expected_det_ && det != *expected_det_) return finish_reject(Reason::ClaimMismatch);
            o.det = det;
        } else {
            o.grp = true;  // A P^T has generic rank profile with committed diagonal
        }
        return finish_accept(std::move(o));
    }

    ProtocolId id_;
    FMatrix a_;
    std::size_t n_;
    LdupLoopVerifier loop_;
    std::optional<Permutation> perm_;
    Vec d_;
    PrimeField::Element claimed_det_ = 0;
    std::optional<std::uint64_t> expected_det_;
};

}  // namespace

std::unique_ptr<Session> ldup_prover(const Instance& inst, const ProverOptions& opt) {
    return std::make_unique<LdupProver>(inst, opt);
}
std::unique_ptr<Session> ldup_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<LdupVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
