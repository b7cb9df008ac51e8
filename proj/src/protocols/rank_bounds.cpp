#include "lincert/oracle.hpp"
#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagChallenge = 0x02;
constexpr std::uint8_t kTagResponse = 0x03;

// ---- upper bound: the prover regenerates a random image vector from at
// ---- most R columns

class RankUpperProver final : public ProverBase {
public:
    RankUpperProver(const Instance& inst, const ProverOptions& opt)
        : a_(inst.a), fac_(pluq_crp(inst.a)) {
        bound_ = opt.rank_upper_bound ? *opt.rank_upper_bound
                                      : static_cast<std::uint32_t>(fac_.rank);
    }
    ProtocolId protocol() const override { return ProtocolId::RankUpper; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (step_ == 0) {
            ++step_;
            return msg(ProtocolId::RankUpper, kTagCommit, {bound_});
        }
        expect(in, kTagChallenge, a_.rows());
        count_recv(a_.rows());
        // gamma supported on the pivot columns; dishonest bounds below the
        // rank leave no consistent solution and the zero fallback loses
        Vec gamma(a_.cols(), 0);
        if (fac_.rank <= bound_) {
            auto cols = crp_of(fac_);
            auto beta = particular_solution(pluq_crp(a_.columns(cols)), in->items);
            if (beta)
                for (std::size_t k = 0; k < cols.size(); ++k) gamma[cols[k]] = (*beta)[k];
        }
        done_ = true;
        count_sent(gamma.size());
        return msg(ProtocolId::RankUpper, kTagResponse, std::move(gamma));
    }

private:
    FMatrix a_;
    PluqFactors fac_;
    std::uint32_t bound_ = 0;
};

class RankUpperVerifier final : public VerifierBase {
public:
    RankUpperVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set), a_(inst.a), expected_(ctx.expected_rank) {}
    ProtocolId protocol() const override { return ProtocolId::RankUpper; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        if (step_ == 0) {
            const Message& m = take(in, kTagCommit, 1);
            count_round();
            if (m.items[0] > a_.cols()) return finish_reject(Reason::ClaimInvalid);
            bound_ = static_cast<std::uint32_t>(m.items[0]);
            if (expected_ && bound_ != *expected_) return finish_reject(Reason::ClaimInvalid);
            ++step_;
            Vec v(a_.cols());
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = chal(f, static_cast<std::uint32_t>(i));
            w_ = mu_matvec(a_, v);
            count_round();
            count_sent(w_.size());
            return msg(ProtocolId::RankUpper, kTagChallenge, w_);
        }
        const Message& m = take_elems(in, kTagResponse, a_.cols(), f);
        count_recv(a_.cols());
        std::size_t weight = 0;
        for (auto v : m.items) weight += v != 0;
        if (weight > bound_) return finish_reject(Reason::HammingWeightExceeded);
        if (mu_matvec(a_, m.items) != w_) return finish_reject(Reason::FinalCheckFailed);
        Outputs o;
        o.rank = bound_;
        return finish_accept(std::move(o));
    }

private:
    FMatrix a_;
    std::optional<std::uint32_t> expected_;
    std::uint32_t bound_ = 0;
    Vec w_;
};

// ---- lower bound: the prover recovers the coefficients of a combination
// ---- of the committed columns

class RankLowerProverSession final : public ProverBase {
public:
    RankLowerProverSession(const Instance& inst, const ProverOptions& opt) : a_(inst.a) {
        cols_ = opt.rank_lower_cols ? *opt.rank_lower_cols : crp_of(pluq_crp(a_));
        phase_.emplace(a_, cols_);
    }
    ProtocolId protocol() const override { return ProtocolId::RankLower; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (step_ == 0) {
            ++step_;
            std::vector<std::uint64_t> items(cols_.begin(), cols_.end());
            count_sent(items.size());
            return msg(ProtocolId::RankLower, kTagCommit, std::move(items));
        }
        expect(in, kTagChallenge, a_.rows());
        count_recv(a_.rows());
        Vec beta = phase_->answer(in->items);
        done_ = true;
        count_sent(beta.size());
        return msg(ProtocolId::RankLower, kTagResponse, std::move(beta));
    }

private:
    FMatrix a_;
    std::vector<std::uint32_t> cols_;
    std::optional<RankLowerProver> phase_;
};

class RankLowerVerifier final : public VerifierBase {
public:
    RankLowerVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set), a_(inst.a) {}
    ProtocolId protocol() const override { return ProtocolId::RankLower; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        if (step_ == 0) {
            if (!in) throw ProtocolViolation("expected commitment");
            const Message& m = take(in, kTagCommit, in->items.size());
            count_round();
            count_recv(m.items.size());
            if (!valid_index_list(m.items, 0, m.items.size(), a_.cols()))
                return finish_reject(Reason::ClaimInvalid);
            cols_.assign(m.items.begin(), m.items.end());
            ++step_;
            alpha_.assign(cols_.size(), 0);
            Vec full(a_.cols(), 0);
            for (std::size_t k = 0; k < cols_.size(); ++k) {
                alpha_[k] = chal_nonzero(f, static_cast<std::uint32_t>(k));
                full[cols_[k]] = alpha_[k];
            }
            Vec v = mu_matvec(a_, full);
            count_round();
            count_sent(v.size());
            return msg(ProtocolId::RankLower, kTagChallenge, std::move(v));
        }
        const Message& m = take(in, kTagResponse, cols_.size());
        count_recv(cols_.size());
        if (m.items != alpha_) return finish_reject(Reason::ResponseMismatch);
        Outputs o;
        o.rank = static_cast<std::uint32_t>(cols_.size());
        o.col_profile = cols_;
        return finish_accept(std::move(o));
    }

private:
    FMatrix a_;
    std::vector<std::uint32_t> cols_;
    Vec alpha_;
};

}  // namespace

std::unique_ptr<Session> rank_upper_prover(const Instance& inst, const ProverOptions& opt) {
    return std::make_unique<RankUpperProver>(inst, opt);
}
std::unique_ptr<Session> rank_upper_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<RankUpperVerifier>(inst, std::move(ctx));
}
std::unique_ptr<Session> rank_lower_prover(const Instance& inst, const ProverOptions& opt) {
    return std::make_unique<RankLowerProverSession>(inst, opt);
}
std::unique_ptr<Session> rank_lower_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<RankLowerVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
