#include <algorithm>

#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagE = 0x02;
constexpr std::uint8_t kTagF = 0x03;
constexpr std::uint8_t kTagPhiPsi = 0x04;
constexpr std::uint8_t kTagXbYb = 0x05;
constexpr std::uint8_t kTagLambda = 0x06;
constexpr std::uint8_t kTagZb = 0x07;

// Rank profile matrix of an invertible input: the committed permutation is
// the claim, the committed-diagonal loop certifies the factorization with
// that column order, and the interleaved e/f exchange certifies that the
// conjugated unit upper factor is itself upper triangular.  Each f_j is
// committed before any later e coordinate is revealed.

class RpmInvProver final : public ProverBase {
public:
    explicit RpmInvProver(const Instance& inst) : n_(inst.a.rows()), fac_(ldup(inst.a)) {
        FMatrix ubar = fac_.u1.permute_rows(fac_.p.inverse()).permute_cols(fac_.p);
        ef_.emplace(std::move(ubar));
        loop_.emplace(fac_.u1, fac_.l);
    }
    ProtocolId protocol() const override { return ProtocolId::RpmInvertible; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (step_ == 0) {
            ++step_;
            std::vector<std::uint64_t> items;
            for (auto v : fac_.p.images()) items.push_back(v);
            items.insert(items.end(), fac_.d.begin(), fac_.d.end());
            count_sent(2 * n_);
            return msg(ProtocolId::RpmInvertible, kTagCommit, std::move(items));
        }
        if (step_ <= n_) {
            expect(in, kTagE, 1);
            count_recv(1);
            PrimeField::Element fj = ef_->on_e(step_ - 1, in->items[0]);
            ++step_;
            count_sent(1);
            return msg(ProtocolId::RpmInvertible, kTagF, {fj});
        }
        std::size_t local = step_ - n_ - 1;  // 0-based position in the loop message flow
        std::size_t iter = local / 2;
        std::size_t i0 = n_ - 1 - iter;
        if (local % 2 == 0) {
            expect(in, kTagPhiPsi, 2);
            count_recv(2);
            auto [xb, yb] = loop_->on_phi_psi(i0, in->items[0], in->items[1]);
            ++step_;
            count_sent(2);
            return msg(ProtocolId::RpmInvertible, kTagXbYb, {xb, yb});
        }
        expect(in, kTagLambda, 1);
        count_recv(1);
        PrimeField::Element zb = loop_->on_lambda(i0, in->items[0]);
        ++step_;
        if (local / 2 + 1 == n_ - 1) done_ = true;
        count_sent(1);
        return msg(ProtocolId::RpmInvertible, kTagZb, {zb});
    }

private:
    std::size_t n_;
    LdupFactors fac_;
    std::optional<EfProver> ef_;
    std::optional<LdupLoopProver> loop_;
};

class RpmInvVerifier final : public VerifierBase {
public:
    RpmInvVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set),
          a_(inst.a),
          n_(inst.a.rows()),
          loop_(inst.a.rows()) {
        if (a_.rows() != a_.cols()) throw DimensionMismatch("square matrix required");
        e_.assign(n_, 0);
        fvec_.assign(n_, 0);
    }
    ProtocolId protocol() const override { return ProtocolId::RpmInvertible; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        if (step_ == 0) {
            const Message& m = take(in, kTagCommit, 2 * n_);
            count_round();
            count_recv(2 * n_);
            if (!valid_perm_items(m.items, 0, n_)) return finish_reject(Reason::NotAPermutation);
            perm_.emplace(std::vector<std::uint32_t>(m.items.begin(), m.items.begin() + n_));
            d_.assign(m.items.begin() + n_, m.items.end());
            for (auto v : d_)
                if (v == 0 || v >= f.modulus()) return finish_reject(Reason::ZeroOnDiagonal);
            ++step_;
            return send_e(f);
        }
        if (step_ <= n_) {
            const Message& m = take_elems(in, kTagF, 1, f);
            count_recv(1);
            fvec_[step_ - 1] = m.items[0];
            ++step_;
            if (step_ <= n_) return send_e(f);
            if (n_ == 1) return finalize(f);
            return send_phi_psi(f);
        }
        std::size_t local = step_ - n_ - 1;
        std::size_t iter = local / 2;
        std::size_t i0 = n_ - 1 - iter;
        if (local % 2 == 0) {
            const Message& m = take_elems(in, kTagXbYb, 2, f);
            count_recv(2);
            loop_.set_xbar_ybar(i0, m.items[0], m.items[1]);
            ++step_;
            PrimeField::Element l = chal(f);
            loop_.set_lambda(i0, l);
            count_round();
            count_sent(1);
            return msg(ProtocolId::RpmInvertible, kTagLambda, {l});
        }
        const Message& m = take_elems(in, kTagZb, 1, f);
        count_recv(1);
        loop_.set_zbar(i0, m.items[0]);
        ++step_;
        if (iter + 1 < n_ - 1) return send_phi_psi(f);
        return finalize(f);
    }

private:
    std::optional<Message> send_e(const PrimeField& f) {
        std::size_t j = step_ - 1;
        e_[j] = chal(f);
        count_round();
        count_sent(1);
        return msg(ProtocolId::RpmInvertible, kTagE, {e_[j]});
    }
    std::optional<Message> send_phi_psi(const PrimeField& f) {
        std::size_t i0 = n_ - 1 - (step_ - n_ - 1) / 2;
        PrimeField::Element phi = chal(f, 0), psi = chal(f, 1);
        loop_.set_phi_psi(i0, phi, psi);
        count_round();
        count_sent(2);
        return msg(ProtocolId::RpmInvertible, kTagPhiPsi, {phi, psi});
    }

    std::optional<Message> finalize(const PrimeField& f) {
        auto fin = loop_.finalize(f, chal(f, 0), chal(f, 1), chal(f, 2));
        Vec zd(n_);
        for (std::size_t k = 0; k < n_; ++k) zd[k] = f.mul(fin.z[k], d_[k]);
        Vec u = mu_vecmat(a_, fin.lambda);
        Vec w = apply_perm(*perm_, u);
        bool ok = dot(f, zd, fin.x) == dot(f, w, fin.phi) && dot(f, zd, fin.y) == dot(f, w, fin.psi);
        if (!ok) return finish_reject(Reason::FinalCheckFailed);
        // e^T P^T x == f^T P^T phi pins the conjugated factor's triangularity
        if (dot(f, apply_perm(*perm_, e_), fin.x) != dot(f, apply_perm(*perm_, fvec_), fin.phi))
            return finish_reject(Reason::NotUpperTriangular);
        Outputs o;
        o.rank = static_cast<std::uint32_t>(n_);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> ones;
        for (std::size_t j = 0; j < n_; ++j)
            ones.emplace_back(perm_->image(j), static_cast<std::uint32_t>(j));
        std::sort(ones.begin(), ones.end());
        o.rpm_ones = std::move(ones);
        return finish_accept(std::move(o));
    }

    FMatrix a_;
    std::size_t n_;
    LdupLoopVerifier loop_;
    std::optional<Permutation> perm_;
    Vec d_, e_, fvec_;
};

}  // namespace

std::unique_ptr<Session> rpm_invertible_prover(const Instance& inst) {
    return std::make_unique<RpmInvProver>(inst);
}
std::unique_ptr<Session> rpm_invertible_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<RpmInvVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
