#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagFactors = 0x01;

// Quadratic-communication certificates: the whole decomposition travels in
// one commitment and verification is one challenged product plus structural
// scans of the factors.

std::vector<std::uint64_t> pack_factors(const PluqFactors& fac) {
    std::vector<std::uint64_t> items;
    items.push_back(fac.rank);
    for (auto v : fac.p.images()) items.push_back(v);
    for (auto v : fac.q.images()) items.push_back(v);
    items.insert(items.end(), fac.l.data().begin(), fac.l.data().end());
    items.insert(items.end(), fac.u.data().begin(), fac.u.data().end());
    return items;
}

class NiProver final : public ProverBase {
public:
    explicit NiProver(const Instance& inst) : id_(inst.id) {
        FMatrix a = inst.a;
        if (id_ == ProtocolId::RpmNoninteractive) {
            fac_.emplace(pluq_rpm(a));
        } else if (inst.row_variant) {
            // factor the transpose, then flip the roles of the four factors
            PluqFactors t = pluq_crp(a.transpose());
            fac_.emplace(PluqFactors{t.q.inverse(), t.u.transpose(), t.l.transpose(),
                                     t.p.inverse(), t.rank});
        } else {
            fac_.emplace(pluq_crp(a));
        }
        m_ = a.rows();
        n_ = a.cols();
    }
    ProtocolId protocol() const override { return id_; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (in) throw ProtocolViolation("one-shot prover expects no messages");
        done_ = true;
        auto items = pack_factors(*fac_);
        count_sent(m_ + n_ + fac_->rank * (m_ + n_));
        return msg(id_, kTagFactors, std::move(items));
    }

private:
    ProtocolId id_;
    std::size_t m_ = 0, n_ = 0;
    std::optional<PluqFactors> fac_;
};

class NiVerifier final : public VerifierBase {
public:
    NiVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set),
          id_(inst.id),
          a_(inst.a),
          row_variant_(inst.row_variant) {}
    ProtocolId protocol() const override { return id_; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        const PrimeField& f = a_.field();
        const std::size_t m = a_.rows(), n = a_.cols();
        if (!in) throw ProtocolViolation("expected factors");
        // variable-size payload: r decides the trapezoid sizes
        if (in->items.empty()) throw ProtocolViolation("empty factors payload");
        std::size_t r = static_cast<std::size_t>(in->items[0]);
        if (r > std::min(m, n) || in->items.size() != 1 + m + n + r * (m + n))
            throw ProtocolViolation("bad factors payload");
        take(in, kTagFactors, in->items.size());
        count_round();
        count_recv(m + n + r * (m + n));

        std::size_t off = 1;
        if (!valid_perm_items(in->items, off, m) || !valid_perm_items(in->items, off + m, n))
            return finish_reject(Reason::NotAPermutation);
        Permutation p(std::vector<std::uint32_t>(in->items.begin() + off,
                                                 in->items.begin() + off + m));
        Permutation q(std::vector<std::uint32_t>(in->items.begin() + off + m,
                                                 in->items.begin() + off + m + n));
        off += m + n;
        for (std::size_t i = off; i < in->items.size(); ++i)
            if (in->items[i] >= f.modulus())
                throw ProtocolViolation("non-canonical residue");
        FMatrix l(f, m, r), u(f, r, n);
        for (std::size_t i = 0; i < m * r; ++i) l.set(i / r, i % r, in->items[off + i]);
        off += m * r;
        for (std::size_t i = 0; i < r * n; ++i) u.set(i / n, i % n, in->items[off + i]);

        // one challenged product: A v == P L U Q v
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = chal(f, static_cast<std::uint32_t>(i));
        Vec lhs = mu_matvec(a_, v);
        Vec rhs = apply_perm(p, l.matvec(u.matvec(apply_perm(q, v))));
        if (lhs != rhs) return finish_reject(Reason::FreivaldsMismatch);

        Outputs o;
        o.rank = static_cast<std::uint32_t>(r);
        if (id_ == ProtocolId::CrpNoninteractive) {
            if (!row_variant_) {
                FMatrix uq = u.permute_cols(q);
                if (!is_row_echelon(uq)) return finish_reject(Reason::NotRowEchelon);
                o.col_profile = leading_cols(uq);
            } else {
                FMatrix pl = l.permute_rows(p);
                if (!is_column_echelon(pl)) return finish_reject(Reason::NotColumnEchelon);
                o.row_profile = leading_cols(pl.transpose());
            }
        } else {
            FMatrix lpad(f, m, m), upad(f, n, n);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < r; ++k) lpad.set(i, k, l.at(i, k));
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t j = 0; j < n; ++j) upad.set(k, j, u.at(k, j));
            if (!is_lower_triangular(lpad.permute_rows(p).permute_cols(p.inverse())))
                return finish_reject(Reason::NotLowerTriangular);
            if (!is_upper_triangular(upad.permute_rows(q.inverse()).permute_cols(q)))
                return finish_reject(Reason::NotUpperTriangular);
            FMatrix rm = rpm_matrix(PluqFactors{p, l, u, q, r});
            std::vector<std::pair<std::uint32_t, std::uint32_t>> ones;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (rm.at(i, j) != 0)
                        ones.emplace_back(static_cast<std::uint32_t>(i),
                                          static_cast<std::uint32_t>(j));
            o.rpm_ones = std::move(ones);
        }
        return finish_accept(std::move(o));
    }

private:
    static std::vector<std::uint32_t> leading_cols(const FMatrix& echelon) {
        std::vector<std::uint32_t> out;
        for (std::size_t i = 0; i < echelon.rows(); ++i)
            for (std::size_t j = 0; j < echelon.cols(); ++j)
                if (echelon.at(i, j) != 0) {
                    out.push_back(static_cast<std::uint32_t>(j));
                    break;
                }
        return out;
    }

    ProtocolId id_;
    FMatrix a_;
    bool row_variant_;
};

}  // namespace

std::unique_ptr<Session> noninteractive_prover(const Instance& inst) {
    return std::make_unique<NiProver>(inst);
}
std::unique_ptr<Session> noninteractive_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<NiVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
