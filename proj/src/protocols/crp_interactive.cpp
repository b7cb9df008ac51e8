#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagLbChallenge = 0x02;
constexpr std::uint8_t kTagBeta = 0x03;
constexpr std::uint8_t kTagV = 0x04;
constexpr std::uint8_t kTagX = 0x05;
constexpr std::uint8_t kTagY = 0x06;
constexpr std::uint8_t kTagW = 0x07;
constexpr std::uint8_t kTagGamma = 0x08;

// Column rank profile: independence of the committed columns comes from the
// lower-bound exchange, minimality from the existence of an upper-triangular
// change of basis onto masked prefix combinations, checked through a single
// random projection.  A rank-zero claim degenerates to the upper-bound
// exchange with an empty support.

class CrpProver final : public ProverBase {
public:
    CrpProver(const Instance& inst, const ProverOptions& opt) : a_(inst.a) {
        cols_ = opt.rank_lower_cols ? *opt.rank_lower_cols : crp_of(pluq_crp(a_));
        if (!cols_.empty()) {
            lower_.emplace(a_, cols_);
            minimality_.emplace(a_, cols_);
        }
    }
    ProtocolId protocol() const override { return ProtocolId::CrpInteractive; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const std::size_t r = cols_.size();
        if (step_ == 0) {
            ++step_;
            std::vector<std::uint64_t> items(cols_.begin(), cols_.end());
            count_sent(r);
            return msg(ProtocolId::CrpInteractive, kTagCommit, std::move(items));
        }
        if (r == 0) {
            expect(in, kTagW, a_.rows());
            count_recv(a_.rows());
            done_ = true;
            count_sent(a_.cols());
            return msg(ProtocolId::CrpInteractive, kTagGamma, Vec(a_.cols(), 0));
        }
        if (step_ == 1) {
            expect(in, kTagLbChallenge, a_.rows());
            count_recv(a_.rows());
            ++step_;
            Vec beta = lower_->answer(in->items);
            count_sent(r);
            return msg(ProtocolId::CrpInteractive, kTagBeta, std::move(beta));
        }
        if (step_ == 2) {
            // v arrives bundled with the first (topmost-index) projection coordinate
            expect(in, kTagV, a_.cols() + 1);
            count_recv(a_.cols() + 1);
            ++step_;
            Vec v(in->items.begin(), in->items.begin() + a_.cols());
            exchange_.emplace(minimality_->gamma_for(v), Side::Upper);
            PrimeField::Element y = exchange_->on_x(r - 1, in->items[a_.cols()]);
            if (step_ == r + 2) done_ = true;
            count_sent(1);
            return msg(ProtocolId::CrpInteractive, kTagY, {y});
        }
        expect(in, kTagX, 1);
        count_recv(1);
        std::size_t idx = r - (step_ - 1);  // reverse order r-2 .. 0
        PrimeField::Element y = exchange_->on_x(idx, in->items[0]);
        if (++step_ == r + 2) done_ = true;
        count_sent(1);
        return msg(ProtocolId::CrpInteractive, kTagY, {y});
    }

private:
    FMatrix a_;
    std::vector<std::uint32_t> cols_;
    std::optional<RankLowerProver> lower_;
    std::optional<MinimalityProver> minimality_;
    std::optional<TriExchangeProver> exchange_;
};

class CrpVerifier final : public VerifierBase {
public:
    CrpVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set), a_(inst.a) {}
    ProtocolId protocol() const override { return ProtocolId::CrpInteractive; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        const std::size_t m = a_.rows(), n = a_.cols();
        if (step_ == 0) {
            if (!in) throw ProtocolViolation("expected commitment");
            const Message& msg0 = take(in, kTagCommit, in->items.size());
            count_round();
            count_recv(msg0.items.size());
            if (!valid_index_list(msg0.items, 0, msg0.items.size(), n))
                return finish_reject(Reason::ClaimInvalid);
            cols_.assign(msg0.items.begin(), msg0.items.end());
            ++step_;
            if (cols_.empty()) {
                Vec v(n);
                for (std::size_t i = 0; i < n; ++i) v[i] = chal(f, static_cast<std::uint32_t>(i));
                w_ = mu_matvec(a_, v);
                count_round();
                count_sent(m);
                return msg(ProtocolId::CrpInteractive, kTagW, w_);
            }
            const std::size_t r = cols_.size();
            alpha_.assign(r, 0);
            Vec full(n, 0);
            for (std::size_t k = 0; k < r; ++k) {
                alpha_[k] = chal_nonzero(f, static_cast<std::uint32_t>(k));
                full[cols_[k]] = alpha_[k];
            }
            Vec vlb = mu_matvec(a_, full);
            count_round();
            count_sent(m);
            return msg(ProtocolId::CrpInteractive, kTagLbChallenge, std::move(vlb));
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
            const Message& mb = take(in, kTagBeta, r);
            count_recv(r);
            if (mb.items != alpha_) return finish_reject(Reason::ResponseMismatch);
            ++step_;
            v_.assign(n, 0);
            for (std::size_t i = 0; i < n; ++i) v_[i] = chal(f, static_cast<std::uint32_t>(i));
            exchange_.emplace(r, Side::Upper);
            // v goes out bundled with the first projection coordinate
            pending_ = exchange_->next_index();
            pending_x_ = chal(f, static_cast<std::uint32_t>(n));
            std::vector<std::uint64_t> items = v_;
            items.push_back(pending_x_);
            count_round();
            count_sent(n + 1);
            return msg(ProtocolId::CrpInteractive, kTagV, std::move(items));
        }
        const Message& my = take_elems(in, kTagY, 1, f);
        count_recv(1);
        exchange_->record(pending_, pending_x_, my.items[0]);
        ++step_;
        if (!exchange_->done()) return send_x(f);
        Vec z = minimality_fold(f, n, cols_, v_, exchange_->x(), exchange_->y());
        Vec az = mu_matvec(a_, z);
        for (auto e : az)
            if (e != 0) return finish_reject(Reason::FinalCheckFailed);
        Outputs o;
        o.rank = static_cast<std::uint32_t>(r);
        o.col_profile = cols_;
        return finish_accept(std::move(o));
    }

private:
    std::optional<Message> send_x(const PrimeField& f) {
        pending_ = exchange_->next_index();
        pending_x_ = chal(f);
        count_round();
        count_sent(1);
        return msg(ProtocolId::CrpInteractive, kTagX, {pending_x_});
    }

    FMatrix a_;
    std::vector<std::uint32_t> cols_;
    Vec alpha_, w_, v_;
    std::optional<TriExchangeVerifier> exchange_;
    std::size_t pending_ = 0;
    PrimeField::Element pending_x_ = 0;
};

}  // namespace

std::unique_ptr<Session> crp_interactive_prover(const Instance& inst, const ProverOptions& opt) {
    return std::make_unique<CrpProver>(inst, opt);
}
std::unique_ptr<Session> crp_interactive_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<CrpVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
