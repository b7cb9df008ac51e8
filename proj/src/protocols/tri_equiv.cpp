#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagX = 0x02;
constexpr std::uint8_t kTagY = 0x03;

// Coordinates of the challenge go out one at a time (in reverse for an
// upper claim) and each response may only depend on what has been revealed,
// which is exactly what pins the triangular shape of the hidden factor.

class TriEquivProver final : public ProverBase {
public:
    explicit TriEquivProver(const Instance& inst) : side_(inst.side) {
        const FMatrix& a = inst.a;
        const FMatrix& b = *inst.b;
        if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() < a.cols())
            throw DimensionMismatch("equivalence inputs need equal shape with rows >= cols");
        exchange_.emplace(solve_equivalence(pluq_crp(a), b), side_);
        n_ = a.cols();
    }
    ProtocolId protocol() const override { return ProtocolId::TriEquiv; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (step_ == 0) {
            ++step_;
            return msg(ProtocolId::TriEquiv, kTagCommit);  // the factor exists
        }
        expect(in, kTagX, 1);
        count_recv(1);
        std::size_t idx = side_ == Side::Lower ? step_ - 1 : n_ - step_;
        PrimeField::Element y = exchange_->on_x(idx, in->items[0]);
        if (++step_ == n_ + 1) done_ = true;
        count_sent(1);
        return msg(ProtocolId::TriEquiv, kTagY, {y});
    }

private:
    Side side_;
    std::size_t n_ = 0;
    std::optional<TriExchangeProver> exchange_;
};

class TriEquivVerifier final : public VerifierBase {
public:
    TriEquivVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set),
          a_(inst.a),
          b_(*inst.b),
          exchange_(inst.a.cols(), inst.side) {
        if (a_.rows() != b_.rows() || a_.cols() != b_.cols() || a_.rows() < a_.cols())
            throw DimensionMismatch("equivalence inputs need equal shape with rows >= cols");
    }
    ProtocolId protocol() const override { return ProtocolId::TriEquiv; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        if (step_ == 0) {
            take(in, kTagCommit, 0);
            count_round();
        } else {
            const Message& m = take_elems(in, kTagY, 1, f);
            count_recv(1);
            exchange_.record(pending_, pending_x_, m.items[0]);
            if (exchange_.done()) {
                Vec ay = mu_matvec(a_, exchange_.y());
                Vec bx = mu_matvec(b_, exchange_.x());
                if (ay != bx) return finish_reject(Reason::FinalCheckFailed);
                Outputs o;
                o.equivalent = true;
                return finish_accept(std::move(o));
            }
        }
        ++step_;
        pending_ = exchange_.next_index();
        pending_x_ = chal(f);
        count_round();
        count_sent(1);
        return msg(ProtocolId::TriEquiv, kTagX, {pending_x_});
    }

private:
    FMatrix a_, b_;
    TriExchangeVerifier exchange_;
    std::size_t pending_ = 0;
    PrimeField::Element pending_x_ = 0;
};

}  // namespace

std::unique_ptr<Session> tri_equiv_prover(const Instance& inst) {
    return std::make_unique<TriEquivProver>(inst);
}
std::unique_ptr<Session> tri_equiv_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<TriEquivVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
