#include <algorithm>

#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagLb = 0x02;
constexpr std::uint8_t kTagBeta = 0x03;
constexpr std::uint8_t kTagV1 = 0x04;
constexpr std::uint8_t kTagX1 = 0x05;
constexpr std::uint8_t kTagY1 = 0x06;
constexpr std::uint8_t kTagV2 = 0x07;
constexpr std::uint8_t kTagX2 = 0x08;
constexpr std::uint8_t kTagY2 = 0x09;
constexpr std::uint8_t kTagY2Inner = 0x0A;  // last projection + inner commitment
constexpr std::uint8_t kTagE = 0x0B;
constexpr std::uint8_t kTagF = 0x0C;
constexpr std::uint8_t kTagPhiPsi = 0x0D;
constexpr std::uint8_t kTagXbYb = 0x0E;
constexpr std::uint8_t kTagLambda = 0x0F;
constexpr std::uint8_t kTagZb = 0x10;
constexpr std::uint8_t kTagW = 0x11;
constexpr std::uint8_t kTagGamma = 0x12;

// General rank profile matrix: both profiles are committed up front, the
// rank lower bound is certified once on the orientation with fewer rows,
// each profile goes through the minimality phase, and the invertible-case
// subprotocol runs on the profile-selected square submatrix.  Inputs with
// more rows than columns are handled on the transpose, with outputs flipped
// back at the end.  The inner permutation and diagonal ride on the last
// projection response so that every exchange after the opening commitment
// is strictly request/response.

struct WorkView {
    FMatrix work;     // the m <= n orientation
    FMatrix work_t;   // its transpose
    bool transposed;  // true when the input was flipped
};

WorkView make_view(const FMatrix& a) {
    if (a.rows() <= a.cols()) return WorkView{a, a.transpose(), false};
    return WorkView{a.transpose(), a, true};
}

class RpmFullProver final : public ProverBase {
public:
    explicit RpmFullProver(const Instance& inst) : view_(make_view(inst.a)) {
        rows_ = crp_of(pluq_crp(view_.work_t));  // row profile of work
        cols_ = crp_of(pluq_crp(view_.work));    // column profile of work
        r_ = cols_.size();
        if (r_ > 0) {
            lower_.emplace(view_.work, cols_);
            min_rows_.emplace(view_.work_t, rows_);
            min_cols_.emplace(view_.work, cols_);
            FMatrix b = view_.work.submatrix(rows_, cols_);
            inner_ = std::make_unique<LdupFactors>(ldup(b));
            inner_ef_.emplace(inner_->u1.permute_rows(inner_->p.inverse()).permute_cols(inner_->p));
            inner_loop_.emplace(inner_->u1, inner_->l);
        }
    }
    ProtocolId protocol() const override { return ProtocolId::RpmFull; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const std::size_t mw = view_.work.rows(), nw = view_.work.cols(), r = r_;
        if (step_ == 0) {
            ++step_;
            std::vector<std::uint64_t> items;
            items.push_back(r);
            items.insert(items.end(), rows_.begin(), rows_.end());
            items.insert(items.end(), cols_.begin(), cols_.end());
            count_sent(2 * r);
            return msg(ProtocolId::RpmFull, kTagCommit, std::move(items));
        }
        if (r == 0) {
            expect(in, kTagW, mw);
            count_recv(mw);
            done_ = true;
            count_sent(nw);
            return msg(ProtocolId::RpmFull, kTagGamma, Vec(nw, 0));
        }
        if (step_ == 1) {
            expect(in, kTagLb, mw);
            count_recv(mw);
            ++step_;
            Vec beta = lower_->answer(in->items);
            count_sent(r);
            return msg(ProtocolId::RpmFull, kTagBeta, std::move(beta));
        }
        if (step_ == 2) {
            expect(in, kTagV1, mw + 1);
            count_recv(mw + 1);
            ++step_;
            Vec v(in->items.begin(), in->items.begin() + mw);
            ex1_.emplace(min_rows_->gamma_for(v), Side::Upper);
            count_sent(1);
            return msg(ProtocolId::RpmFull, kTagY1, {ex1_->on_x(r - 1, in->items[mw])});
        }
        if (step_ <= r + 1) {
            expect(in, kTagX1, 1);
            count_recv(1);
            std::size_t idx = r + 1 - step_;  // r-2 .. 0
            ++step_;
            count_sent(1);
            return msg(ProtocolId::RpmFull, kTagY1, {ex1_->on_x(idx, in->items[0])});
        }
        if (step_ == r + 2) {
            expect(in, kTagV2, nw + 1);
            count_recv(nw + 1);
            ++step_;
            Vec v(in->items.begin(), in->items.begin() + nw);
            ex2_.emplace(min_cols_->gamma_for(v), Side::Upper);
            PrimeField::Element y = ex2_->on_x(r - 1, in->items[nw]);
            if (r == 1) return inner_commit(y);
            count_sent(1);
            return msg(ProtocolId::RpmFull, kTagY2, {y});
        }
        if (step_ <= 2 * r + 1) {
            expect(in, kTagX2, 1);
            count_recv(1);
            std::size_t idx = 2 * r + 1 - step_;
            ++step_;
            PrimeField::Element y = ex2_->on_x(idx, in->items[0]);
            if (idx == 0) return inner_commit(y);
            count_sent(1);
            return msg(ProtocolId::RpmFull, kTagY2, {y});
        }
        std::size_t base = 2 * r + 1;  // step index of the first inbound e
        if (step_ <= base + r) {
            expect(in, kTagE, 1);
            count_recv(1);
            PrimeField::Element fj = inner_ef_->on_e(step_ - base - 1, in->items[0]);
            ++step_;
            if (r == 1) done_ = true;
            count_sent(1);
            return msg(ProtocolId::RpmFull, kTagF, {fj});
        }
        std::size_t local = step_ - base - r - 1;
        std::size_t i0 = r - 1 - local / 2;
        if (local % 2 == 0) {
            expect(in, kTagPhiPsi, 2);
            count_recv(2);
            auto [xb, yb] = inner_loop_->on_phi_psi(i0, in->items[0], in->items[1]);
            ++step_;
            count_sent(2);
            return msg(ProtocolId::RpmFull, kTagXbYb, {xb, yb});
        }
        expect(in, kTagLambda, 1);
        count_recv(1);
        PrimeField::Element zb = inner_loop_->on_lambda(i0, in->items[0]);
        ++step_;
        if (local / 2 + 1 == r - 1) done_ = true;
        count_sent(1);
        return msg(ProtocolId::RpmFull, kTagZb, {zb});
    }

private:
    std::optional<Message> inner_commit(PrimeField::Element last_y) {
        step_ = 2 * r_ + 2;  // first inbound e arrives at this step
        std::vector<std::uint64_t> items{last_y};
        for (auto v : inner_->p.images()) items.push_back(v);
        items.insert(items.end(), inner_->d.begin(), inner_->d.end());
        count_sent(1 + 2 * r_);
        return msg(ProtocolId::RpmFull, kTagY2Inner, std::move(items));
    }

    WorkView view_;
    std::vector<std::uint32_t> rows_, cols_;
    std::size_t r_ = 0;
    std::optional<RankLowerProver> lower_;
    std::optional<MinimalityProver> min_rows_, min_cols_;
    std::optional<TriExchangeProver> ex1_, ex2_;
    std::unique_ptr<LdupFactors> inner_;
    std::optional<EfProver> inner_ef_;
    std::optional<LdupLoopProver> inner_loop_;
};

class RpmFullVerifier final : public VerifierBase {
public:
    RpmFullVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set), view_(make_view(inst.a)), loop_(0) {}
    ProtocolId protocol() const override { return ProtocolId::RpmFull; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = view_.work.field();
        const std::size_t mw = view_.work.rows(), nw = view_.work.cols();
        if (step_ == 0) {
            if (!in || in->items.empty()) throw ProtocolViolation("expected profile commitment");
            if (in->items[0] > std::min(mw, nw)) throw ProtocolViolation("bad rank claim");
            std::size_t r = static_cast<std::size_t>(in->items[0]);
            if (in->items.size() != 1 + 2 * r) throw ProtocolViolation("bad commitment payload");
            take(in, kTagCommit, in->items.size());
            count_round();
            count_recv(2 * r);
            r_ = r;
            if (!valid_index_list(in->items, 1, r, mw) || !valid_index_list(in->items, 1 + r, r, nw))
                return finish_reject(Reason::ClaimInvalid);
            rows_.assign(in->items.begin() + 1, in->items.begin() + 1 + r);
            cols_.assign(in->items.begin() + 1 + r, in->items.end());
            ++step_;
            if (r == 0) {
                Vec v(nw);
                for (std::size_t i = 0; i < nw; ++i) v[i] = chal(f, static_cast<std::uint32_t>(i));
                w_ = mu_matvec(view_.work, v);
                count_round();
                count_sent(mw);
                return msg(ProtocolId::RpmFull, kTagW, w_);
            }
            alpha_.assign(r, 0);
            Vec full(nw, 0);
            for (std::size_t k = 0; k < r; ++k) {
                alpha_[k] = chal_nonzero(f, static_cast<std::uint32_t>(k));
                full[cols_[k]] = alpha_[k];
            }
            Vec vlb = mu_matvec(view_.work, full);
            count_round();
            count_sent(mw);
            return msg(ProtocolId::RpmFull, kTagLb, std::move(vlb));
        }
        if (r_ == 0) {
            const Message& mg = take_elems(in, kTagGamma, nw, f);
            count_recv(nw);
            for (auto g : mg.items)
                if (g != 0) return finish_reject(Reason::HammingWeightExceeded);
            if (mu_matvec(view_.work, mg.items) != w_) return finish_reject(Reason::FinalCheckFailed);
            Outputs o;
            o.rank = 0;
            o.rpm_ones = std::vector<std::pair<std::uint32_t, std::uint32_t>>{};
            o.col_profile = std::vector<std::uint32_t>{};
            o.row_profile = std::vector<std::uint32_t>{};
            return finish_accept(std::move(o));
        }
        const std::size_t r = r_;
        if (step_ == 1) {
            const Message& mb = take(in, kTagBeta, r);
            count_recv(r);
            if (mb.items != alpha_) return finish_reject(Reason::ResponseMismatch);
            ++step_;
            v1_.assign(mw, 0);
            for (std::size_t i = 0; i < mw; ++i) v1_[i] = chal(f, static_cast<std::uint32_t>(i));
            ex_.emplace(r, Side::Upper);
            pending_x_ = chal(f, static_cast<std::uint32_t>(mw));
            pending_ = ex_->next_index();
            std::vector<std::uint64_t> items = v1_;
            items.push_back(pending_x_);
            count_round();
            count_sent(mw + 1);
            return msg(ProtocolId::RpmFull, kTagV1, std::move(items));
        }
        if (step_ <= r + 1) {
            const Message& my = take_elems(in, kTagY1, 1, f);
            count_recv(1);
            ex_->record(pending_, pending_x_, my.items[0]);
            ++step_;
            if (!ex_->done()) return send_x(f, kTagX1);
            // close the row-profile phase: work^T z == 0
            Vec z = minimality_fold(f, mw, rows_, v1_, ex_->x(), ex_->y());
            if (!all_zero(mu_matvec(view_.work_t, z))) return finish_reject(Reason::FinalCheckFailed);
            v2_.assign(nw, 0);
            for (std::size_t i = 0; i < nw; ++i) v2_[i] = chal(f, static_cast<std::uint32_t>(i));
            ex_.emplace(r, Side::Upper);
            pending_x_ = chal(f, static_cast<std::uint32_t>(nw));
            pending_ = ex_->next_index();
            std::vector<std::uint64_t> items = v2_;
            items.push_back(pending_x_);
            count_round();
            count_sent(nw + 1);
            return msg(ProtocolId::RpmFull, kTagV2, std::move(items));
        }
        if (step_ <= 2 * r + 1) {
            bool last = step_ == 2 * r + 1;
            const Message& my = last ? take(in, kTagY2Inner, 1 + 2 * r)
                                     : take_elems(in, kTagY2, 1, f);
            count_recv(last ? 1 + 2 * r : 1);
            if (my.items[0] >= f.modulus()) throw ProtocolViolation("non-canonical residue");
            ex_->record(pending_, pending_x_, my.items[0]);
            ++step_;
            if (!last) return send_x(f, kTagX2);
            Vec z = minimality_fold(f, nw, cols_, v2_, ex_->x(), ex_->y());
            if (!all_zero(mu_matvec(view_.work, z))) return finish_reject(Reason::FinalCheckFailed);
            // inner commitment rides on the last projection
            if (!valid_perm_items(my.items, 1, r)) return finish_reject(Reason::NotAPermutation);
            inner_perm_.emplace(
                std::vector<std::uint32_t>(my.items.begin() + 1, my.items.begin() + 1 + r));
            d_.assign(my.items.begin() + 1 + r, my.items.end());
            for (auto v : d_)
                if (v == 0 || v >= f.modulus()) return finish_reject(Reason::ZeroOnDiagonal);
            e_.assign(r, 0);
            fvec_.assign(r, 0);
            loop_ = LdupLoopVerifier(r);
            return send_e(f);
        }
        std::size_t base = 2 * r + 1;
        if (step_ <= base + r) {
            const Message& m = take_elems(in, kTagF, 1, f);
            count_recv(1);
            fvec_[step_ - base - 1] = m.items[0];
            ++step_;
            if (step_ <= base + r) return send_e(f);
            if (r == 1) return finalize(f);
            return send_phi_psi(f, base);
        }
        std::size_t local = step_ - base - r - 1;
        std::size_t i0 = r - 1 - local / 2;
        if (local % 2 == 0) {
            const Message& m = take_elems(in, kTagXbYb, 2, f);
            count_recv(2);
            loop_.set_xbar_ybar(i0, m.items[0], m.items[1]);
            ++step_;
            PrimeField::Element l = chal(f);
            loop_.set_lambda(i0, l);
            count_round();
            count_sent(1);
            return msg(ProtocolId::RpmFull, kTagLambda, {l});
        }
        const Message& m = take_elems(in, kTagZb, 1, f);
        count_recv(1);
        loop_.set_zbar(i0, m.items[0]);
        ++step_;
        if (local / 2 + 1 < r - 1) return send_phi_psi(f, base);
        return finalize(f);
    }

private:
    static bool strictly_increasing(const std::vector<std::uint32_t>& v, std::size_t bound) {
        std::uint32_t prev = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (v[k] >= bound || (k > 0 && v[k] <= prev)) return false;
            prev = v[k];
        }
        return true;
    }
    static bool all_zero(const Vec& v) {
        return std::all_of(v.begin(), v.end(), [](PrimeField::Element e) { return e == 0; });
    }

    std::optional<Message> send_x(const PrimeField& f, std::uint8_t tag) {
        pending_ = ex_->next_index();
        pending_x_ = chal(f);
        count_round();
        count_sent(1);
        return msg(ProtocolId::RpmFull, tag, {pending_x_});
    }
    std::optional<Message> send_e(const PrimeField& f) {
        std::size_t j = step_ - 2 * r_ - 2;
        e_[j] = chal(f);
        count_round();
        count_sent(1);
        return msg(ProtocolId::RpmFull, kTagE, {e_[j]});
    }
    std::optional<Message> send_phi_psi(const PrimeField& f, std::size_t base) {
        std::size_t i0 = r_ - 1 - (step_ - base - r_ - 1) / 2;
        PrimeField::Element phi = chal(f, 0), psi = chal(f, 1);
        loop_.set_phi_psi(i0, phi, psi);
        count_round();
        count_sent(2);
        return msg(ProtocolId::RpmFull, kTagPhiPsi, {phi, psi});
    }

    std::optional<Message> finalize(const PrimeField& f) {
        const std::size_t r = r_;
        FMatrix b = view_.work.submatrix(rows_, cols_);
        auto fin = loop_.finalize(f, chal(f, 0), chal(f, 1), chal(f, 2));
        Vec zd(r);
        for (std::size_t k = 0; k < r; ++k) zd[k] = f.mul(fin.z[k], d_[k]);
        Vec u = mu_vecmat(b, fin.lambda);
        Vec w = apply_perm(*inner_perm_, u);
        bool ok = dot(f, zd, fin.x) == dot(f, w, fin.phi) && dot(f, zd, fin.y) == dot(f, w, fin.psi);
        if (!ok) return finish_reject(Reason::FinalCheckFailed);
        if (dot(f, apply_perm(*inner_perm_, e_), fin.x) !=
            dot(f, apply_perm(*inner_perm_, fvec_), fin.phi))
            return finish_reject(Reason::NotUpperTriangular);

        // lift the square-case profile matrix through both selections
        Outputs o;
        o.rank = static_cast<std::uint32_t>(r);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> ones;
        for (std::size_t j = 0; j < r; ++j) {
            std::uint32_t wi = rows_[inner_perm_->image(j)];
            std::uint32_t wj = cols_[j];
            if (view_.transposed)
                ones.emplace_back(wj, wi);
            else
                ones.emplace_back(wi, wj);
        }
        std::sort(ones.begin(), ones.end());
        o.rpm_ones = std::move(ones);
        o.col_profile = view_.transposed ? rows_ : cols_;
        o.row_profile = view_.transposed ? cols_ : rows_;
        return finish_accept(std::move(o));
    }

    WorkView view_;
    std::size_t r_ = 0;
    std::vector<std::uint32_t> rows_, cols_;
    Vec alpha_, w_, v1_, v2_;
    std::optional<TriExchangeVerifier> ex_;
    std::size_t pending_ = 0;
    PrimeField::Element pending_x_ = 0;
    std::optional<Permutation> inner_perm_;
    Vec d_, e_, fvec_;
    LdupLoopVerifier loop_;
};

}  // namespace

std::unique_ptr<Session> rpm_full_prover(const Instance& inst) {
    return std::make_unique<RpmFullProver>(inst);
}
std::unique_ptr<Session> rpm_full_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<RpmFullVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
