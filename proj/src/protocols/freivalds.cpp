#include "factories.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;

// The product claim A*B = C is public input here, so the opening message is
// an empty commitment and all the work is one challenged matvec chain.
class FreivaldsProver final : public ProverBase {
public:
    explicit FreivaldsProver(const Instance& inst) : id_(inst.id) {}
    ProtocolId protocol() const override { return id_; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (in) throw ProtocolViolation("freivalds prover expects no messages");
        done_ = true;
        return msg(id_, kTagCommit);
    }

private:
    ProtocolId id_;
};

class FreivaldsVerifier final : public VerifierBase {
public:
    FreivaldsVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set), a_(inst.a), b_(*inst.b), c_(*inst.c) {
        if (a_.cols() != b_.rows() || a_.rows() != c_.rows() || b_.cols() != c_.cols())
            throw DimensionMismatch("freivalds inputs");
    }
    ProtocolId protocol() const override { return ProtocolId::Freivalds; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        take(in, kTagCommit, 0);
        count_round();
        const PrimeField& f = a_.field();
        Vec v(b_.cols());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = chal(f, static_cast<std::uint32_t>(i));
        Vec bv = mu_matvec(b_, v);
        Vec abv = mu_matvec(a_, bv);
        Vec cv = mu_matvec(c_, v);
        if (abv != cv) return finish_reject(Reason::FreivaldsMismatch);
        return finish_accept();
    }

private:
    FMatrix a_, b_, c_;
};

}  // namespace

std::unique_ptr<Session> freivalds_prover(const Instance& inst) {
    return std::make_unique<FreivaldsProver>(inst);
}

std::unique_ptr<Session> freivalds_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<FreivaldsVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
