#include <algorithm>

#include "factories.hpp"
#include "phases.hpp"
#include "session_base.hpp"

namespace lincert {
namespace detail {

namespace {

constexpr std::uint8_t kTagCommit = 0x01;
constexpr std::uint8_t kTagQ1 = 0x02;
constexpr std::uint8_t kTagQ1Ok = 0x03;
constexpr std::uint8_t kTagBadPrime = 0x04;
constexpr std::uint8_t kTagLb = 0x05;
constexpr std::uint8_t kTagBeta = 0x06;
constexpr std::uint8_t kTagV1 = 0x07;
constexpr std::uint8_t kTagX1 = 0x08;
constexpr std::uint8_t kTagY1 = 0x09;
constexpr std::uint8_t kTagV2 = 0x0A;
constexpr std::uint8_t kTagX2 = 0x0B;
constexpr std::uint8_t kTagY2 = 0x0C;
constexpr std::uint8_t kTagY2Commit2 = 0x0D;  // last projection + phase-two commitment
constexpr std::uint8_t kTagQ2 = 0x0E;
constexpr std::uint8_t kTagQ2Ok = 0x0F;
constexpr std::uint8_t kTagPhiPsi = 0x10;
constexpr std::uint8_t kTagXbYb = 0x11;
constexpr std::uint8_t kTagLambda = 0x12;
constexpr std::uint8_t kTagZb = 0x13;

constexpr int kMaxPrimeRetries = 48;

// Signature of a symmetric integer matrix.  Phase one certifies, modulo a
// verifier-chosen prime, that the committed index set is both rank profiles
// and that the rank is its size.  Phase two commits a symmetric block
// factorization over the rationals and certifies it modulo a second prime
// through the committed-diagonal loop, with the block diagonal taking the
// place of the scalar one.  The sign counts are then read off the exact
// committed blocks.  Either prime can be refused by the prover when it
// divides a pivot or denominator; the verifier just draws another.

const std::vector<std::uint64_t>& prime_pool() {
    // all primes in [2^15, 2^16)
    static const std::vector<std::uint64_t> pool = [] {
        std::vector<std::uint64_t> out;
        for (std::uint64_t v = 32769; v < 65536; v += 2)
            if (is_prime_u64(v)) out.push_back(v);
        return out;
    }();
    return pool;
}

// prover-side exact column rank profile, incremental elimination
std::vector<std::uint32_t> exact_crp(const QMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<Rational>> basis;  // reduced rows of the column space
    std::vector<std::size_t> leads;
    std::vector<std::uint32_t> out;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = a.at(i, j);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Rational& c = col[leads[b]];
            if (c.is_zero()) continue;
            Rational fac = c / basis[b][leads[b]];
            for (std::size_t i = 0; i < m; ++i) col[i] -= fac * basis[b][i];
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (!col[i].is_zero()) {
                basis.push_back(col);
                leads.push_back(i);
                out.push_back(static_cast<std::uint32_t>(j));
                break;
            }
        }
    }
    return out;
}

struct DeltaCommit {
    std::vector<std::uint64_t> sizes;
    std::vector<Rational> values;  // one per 1x1 block, three per 2x2 block
};

DeltaCommit encode_delta(const BlockDiagonal& d) {
    DeltaCommit out;
    for (const auto& b : d.blocks) {
        out.sizes.push_back(b.two_by_two ? 2 : 1);
        out.values.push_back(b.a);
        if (b.two_by_two) {
            out.values.push_back(b.b);
            out.values.push_back(b.c);
        }
    }
    return out;
}

std::optional<BlockDiagonal> decode_delta(const std::vector<std::uint64_t>& sizes,
                                          const std::vector<Rational>& values, std::size_t r) {
    BlockDiagonal d;
    std::size_t dim = 0, vi = 0;
    for (auto s : sizes) {
        if (s == 1) {
            if (vi + 1 > values.size()) return std::nullopt;
            d.blocks.push_back({false, values[vi], Rational(), Rational()});
            vi += 1;
            dim += 1;
        } else if (s == 2) {
            if (vi + 3 > values.size()) return std::nullopt;
            d.blocks.push_back({true, values[vi], values[vi + 1], values[vi + 2]});
            vi += 3;
            dim += 2;
        } else {
            return std::nullopt;
        }
    }
    if (dim != r || vi != values.size()) return std::nullopt;
    return d;
}

class SignatureProver final : public ProverBase {
public:
    SignatureProver(const Instance& inst, const ProverOptions& opt) : a_(*inst.aq) {
        if (!a_.is_symmetric()) throw NotSymmetric();
        n_ = a_.rows();
        cols_ = exact_crp(a_);
        r_ = cols_.size();
        std::uint64_t seed = opt.internal_seed;
        if (seed == 0) {
            auto dg = inst.digest();
            for (int i = 0; i < 8; ++i) seed = (seed << 8) | dg[i];
        }
        if (r_ > 0) {
            QMatrix b = a_.submatrix(cols_, cols_);
            RandomSource rng(seed);
            for (int attempt = 0;; ++attempt) {
                perm_ = std::make_unique<Permutation>(grp_forcing_permutation(b, rng));
                std::vector<std::uint32_t> pos(perm_->images());
                try {
                    ldlt_ = std::make_unique<SymLdlt>(symmetric_block_ldlt(b.submatrix(pos, pos)));
                    break;
                } catch (const PivotFailure&) {
                    if (attempt >= 8) throw;
                }
            }
        }
    }
    ProtocolId protocol() const override { return ProtocolId::Signature; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (step_ == 0) {
            ++step_;
            std::vector<std::uint64_t> items;
            items.push_back(r_);
            items.insert(items.end(), cols_.begin(), cols_.end());
            count_sent(r_);
            return msg(ProtocolId::Signature, kTagCommit, std::move(items));
        }
        if (step_ == 1) {  // q1 negotiation
            expect(in, kTagQ1, 1);
            count_recv(1);
            std::uint64_t q = in->items[0];
            if (!q1_usable(q)) return msg(ProtocolId::Signature, kTagBadPrime);
            f1_ = std::make_unique<PrimeField>(q);
            amod_ = std::make_unique<FMatrix>(a_.mod(*f1_));
            if (r_ > 0) {
                lower_.emplace(*amod_, cols_);
                minimality_.emplace(*amod_, cols_);
            }
            ++step_;
            return msg(ProtocolId::Signature, kTagQ1Ok);
        }
        const std::size_t r = r_;
        if (r == 0) {
            // rank zero: the zero matrix needs no phase two
            expect(in, kTagLb, n_);
            count_recv(n_);
            done_ = true;
            count_sent(n_);
            return msg(ProtocolId::Signature, kTagBeta, Vec(n_, 0));
        }
        if (step_ == 2) {
            expect(in, kTagLb, n_);
            count_recv(n_);
            ++step_;
            Vec beta = lower_->answer(in->items);
            count_sent(r);
            return msg(ProtocolId::Signature, kTagBeta, std::move(beta));
        }
        if (step_ == 3) {
            expect(in, kTagV1, n_ + 1);
            count_recv(n_ + 1);
            ++step_;
            Vec v(in->items.begin(), in->items.begin() + n_);
            // row profile phase runs on the transpose, which equals the input
            FMatrix at = amod_->transpose();
            MinimalityProver rows_phase(at, cols_);
            ex_.emplace(rows_phase.gamma_for(v), Side::Upper);
            count_sent(1);
            return msg(ProtocolId::Signature, kTagY1, {ex_->on_x(r - 1, in->items[n_])});
        }
        if (step_ <= r + 2) {
            expect(in, kTagX1, 1);
            count_recv(1);
            std::size_t idx = r + 2 - step_;
            ++step_;
            count_sent(1);
            return msg(ProtocolId::Signature, kTagY1, {ex_->on_x(idx, in->items[0])});
        }
        if (step_ == r + 3) {
            expect(in, kTagV2, n_ + 1);
            count_recv(n_ + 1);
            ++step_;
            Vec v(in->items.begin(), in->items.begin() + n_);
            ex_.emplace(minimality_->gamma_for(v), Side::Upper);
            PrimeField::Element y = ex_->on_x(r - 1, in->items[n_]);
            if (r == 1) return commit_phase_two(y);
            count_sent(1);
            return msg(ProtocolId::Signature, kTagY2, {y});
        }
        if (step_ <= 2 * r + 2) {
            expect(in, kTagX2, 1);
            count_recv(1);
            std::size_t idx = 2 * r + 2 - step_;
            ++step_;
            PrimeField::Element y = ex_->on_x(idx, in->items[0]);
            if (idx == 0) return commit_phase_two(y);
            count_sent(1);
            return msg(ProtocolId::Signature, kTagY2, {y});
        }
        if (step_ == 2 * r + 4) {  // q2 negotiation
            expect(in, kTagQ2, 1);
            count_recv(1);
            std::uint64_t q = in->items[0];
            if (!q2_usable(q)) return msg(ProtocolId::Signature, kTagBadPrime);
            f2_ = std::make_unique<PrimeField>(q);
            FMatrix lmod = ldlt_->l.mod(*f2_);
            loop_.emplace(lmod.transpose(), lmod);
            ++step_;
            if (r == 1) done_ = true;
            return msg(ProtocolId::Signature, kTagQ2Ok);
        }
        std::size_t local = step_ - 2 * r - 5;
        std::size_t i0 = r - 1 - local / 2;
        if (local % 2 == 0) {
            expect(in, kTagPhiPsi, 2);
            count_recv(2);
            auto [xb, yb] = loop_->on_phi_psi(i0, in->items[0], in->items[1]);
            ++step_;
            count_sent(2);
            return msg(ProtocolId::Signature, kTagXbYb, {xb, yb});
        }
        expect(in, kTagLambda, 1);
        count_recv(1);
        PrimeField::Element zb = loop_->on_lambda(i0, in->items[0]);
        ++step_;
        if (local / 2 + 1 == r - 1) done_ = true;
        count_sent(1);
        return msg(ProtocolId::Signature, kTagZb, {zb});
    }

private:
    std::optional<Message> commit_phase_two(PrimeField::Element last_y) {
        step_ = 2 * r_ + 4;  // q2 arrives next
        DeltaCommit dc = encode_delta(ldlt_->delta);
        Message m = msg(ProtocolId::Signature, kTagY2Commit2, {last_y});
        for (auto v : perm_->images()) m.items.push_back(v);
        m.items.push_back(dc.sizes.size());
        m.items.insert(m.items.end(), dc.sizes.begin(), dc.sizes.end());
        m.rationals = dc.values;
        count_sent(1 + r_ + dc.values.size());
        return m;
    }

    bool q1_usable(std::uint64_t q) const {
        if (!is_prime_u64(q)) return false;
        try {
            PrimeField f(q);
            FMatrix am = a_.mod(f);
            if (crp_of(pluq_crp(am)) != cols_) return false;
            if (crp_of(pluq_crp(am.transpose())) != cols_) return false;
        } catch (const Error&) {
            return false;
        }
        return true;
    }
    bool q2_usable(std::uint64_t q) const {
        if (!is_prime_u64(q)) return false;
        try {
            PrimeField f(q);
            for (const auto& b : ldlt_->delta.blocks) {
                if (!b.two_by_two) {
                    if (b.a.mod(f) == 0) return false;
                } else {
                    PrimeField::Element da = b.a.mod(f), db = b.b.mod(f), dc = b.c.mod(f);
                    if (f.sub(f.mul(da, dc), f.mul(db, db)) == 0) return false;
                }
            }
            ldlt_->l.mod(f);  // throws BadPrime on a divisible denominator
        } catch (const Error&) {
            return false;
        }
        return true;
    }

    QMatrix a_;
    std::size_t n_ = 0, r_ = 0;
    std::vector<std::uint32_t> cols_;
    std::unique_ptr<Permutation> perm_;
    std::unique_ptr<SymLdlt> ldlt_;
    std::unique_ptr<PrimeField> f1_, f2_;
    std::unique_ptr<FMatrix> amod_;
    std::optional<RankLowerProver> lower_;
    std::optional<MinimalityProver> minimality_;
    std::optional<TriExchangeProver> ex_;
    std::optional<LdupLoopProver> loop_;
};

class SignatureVerifier final : public VerifierBase {
public:
    SignatureVerifier(const Instance& inst, VerifierCtx ctx)
        : VerifierBase(std::move(ctx.source), ctx.set), a_(*inst.aq), loop_(0) {
        if (!a_.is_symmetric()) throw NotSymmetric();
        n_ = a_.rows();
        if (n_ > 64) throw DimensionMismatch("signature certificate is desk-scale (n <= 64)");
    }
    ProtocolId protocol() const override { return ProtocolId::Signature; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (step_ == 0) {
            if (!in || in->items.empty()) throw ProtocolViolation("expected profile commitment");
            if (in->items[0] > n_) throw ProtocolViolation("bad rank claim");
            std::size_t r = static_cast<std::size_t>(in->items[0]);
            if (in->items.size() != 1 + r) throw ProtocolViolation("bad commitment payload");
            take(in, kTagCommit, in->items.size());
            count_round();
            count_recv(r);
            r_ = r;
            if (!valid_index_list(in->items, 1, r, n_))
                return finish_reject(Reason::ClaimInvalid);
            cols_.assign(in->items.begin() + 1, in->items.end());
            ++step_;
            return send_q1();
        }
        if (step_ == 1) {
            if (!in) throw ProtocolViolation("expected a message");
            if (in->tag == kTagBadPrime) {
                take(in, kTagBadPrime, 0);
                if (++prime_tries_ > kMaxPrimeRetries)
                    return finish_reject(Reason::ProtocolViolation);
                return send_q1();
            }
            take(in, kTagQ1Ok, 0);
            f1_ = std::make_unique<PrimeField>(q1_);
            amod_ = std::make_unique<FMatrix>(a_.mod(*f1_));
            atr_ = std::make_unique<FMatrix>(amod_->transpose());
            ++step_;
            const PrimeField& f = *f1_;
            if (r_ == 0) {
                Vec v(n_);
                for (std::size_t i = 0; i < n_; ++i) v[i] = chal(f, static_cast<std::uint32_t>(i));
                w_ = mu_matvec(*amod_, v);
                count_round();
                count_sent(n_);
                return msg(ProtocolId::Signature, kTagLb, w_);
            }
            alpha_.assign(r_, 0);
            Vec full(n_, 0);
            for (std::size_t k = 0; k < r_; ++k) {
                alpha_[k] = chal_nonzero(f, static_cast<std::uint32_t>(k));
                full[cols_[k]] = alpha_[k];
            }
            Vec vlb = mu_matvec(*amod_, full);
            count_round();
            count_sent(n_);
            return msg(ProtocolId::Signature, kTagLb, std::move(vlb));
        }
        if (r_ == 0) {
            const Message& mg = take_elems(in, kTagBeta, n_, *f1_);
            count_recv(n_);
            for (auto g : mg.items)
                if (g != 0) return finish_reject(Reason::HammingWeightExceeded);
            if (mu_matvec(*amod_, mg.items) != w_) return finish_reject(Reason::FinalCheckFailed);
            Outputs o;
            o.rank = 0;
            o.signature = std::tuple<int, int, int>(0, 0, static_cast<int>(n_));
            return finish_accept(std::move(o));
        }
        const PrimeField& f = *f1_;
        const std::size_t r = r_;
        if (step_ == 2) {
            const Message& mb = take(in, kTagBeta, r);
            count_recv(r);
            if (mb.items != alpha_) return finish_reject(Reason::ResponseMismatch);
            ++step_;
            v1_.assign(n_, 0);
            for (std::size_t i = 0; i < n_; ++i) v1_[i] = chal(f, static_cast<std::uint32_t>(i));
            ex_.emplace(r, Side::Upper);
            pending_x_ = chal(f, static_cast<std::uint32_t>(n_));
            pending_ = ex_->next_index();
            std::vector<std::uint64_t> items = v1_;
            items.push_back(pending_x_);
            count_round();
            count_sent(n_ + 1);
            return msg(ProtocolId::Signature, kTagV1, std::move(items));
        }
        if (step_ <= r + 2) {
            const Message& my = take_elems(in, kTagY1, 1, f);
            count_recv(1);
            ex_->record(pending_, pending_x_, my.items[0]);
            ++step_;
            if (!ex_->done()) return send_x(f, kTagX1);
            Vec z = minimality_fold(f, n_, cols_, v1_, ex_->x(), ex_->y());
            if (!all_zero(mu_matvec(*atr_, z))) return finish_reject(Reason::FinalCheckFailed);
            v2_.assign(n_, 0);
            for (std::size_t i = 0; i < n_; ++i) v2_[i] = chal(f, static_cast<std::uint32_t>(i));
            ex_.emplace(r, Side::Upper);
            pending_x_ = chal(f, static_cast<std::uint32_t>(n_));
            pending_ = ex_->next_index();
            std::vector<std::uint64_t> items = v2_;
            items.push_back(pending_x_);
            count_round();
            count_sent(n_ + 1);
            return msg(ProtocolId::Signature, kTagV2, std::move(items));
        }
        if (step_ <= 2 * r + 2) {
            bool last = step_ == 2 * r + 2;
            std::size_t expected_items = 1;
            if (last) {
                if (!in || in->items.size() < 2 + r) throw ProtocolViolation("bad phase-two commitment");
                std::size_t nblocks = static_cast<std::size_t>(in->items[1 + r]);
                expected_items = 2 + r + nblocks;
            }
            const Message& my = last ? take(in, kTagY2Commit2, expected_items, in->rationals.size())
                                     : take_elems(in, kTagY2, 1, f);
            count_recv(last ? 1 + r + my.rationals.size() : 1);
            if (my.items[0] >= f.modulus()) throw ProtocolViolation("non-canonical residue");
            ex_->record(pending_, pending_x_, my.items[0]);
            ++step_;
            if (!last) return send_x(f, kTagX2);
            Vec z = minimality_fold(f, n_, cols_, v2_, ex_->x(), ex_->y());
            if (!all_zero(mu_matvec(*amod_, z))) return finish_reject(Reason::FinalCheckFailed);
            // permutation and block diagonal ride on the last projection
            if (!valid_perm_items(my.items, 1, r)) return finish_reject(Reason::NotAPermutation);
            perm_.emplace(std::vector<std::uint32_t>(my.items.begin() + 1,
                                                     my.items.begin() + 1 + r));
            std::vector<std::uint64_t> sizes(my.items.begin() + 2 + r, my.items.end());
            auto delta = decode_delta(sizes, my.rationals, r);
            if (!delta || !delta->all_invertible())
                return finish_reject(Reason::BadBlockDiagonal);
            delta_ = std::make_unique<BlockDiagonal>(std::move(*delta));
            return send_q2();
        }
        if (step_ == 2 * r + 3) {
            if (!in) throw ProtocolViolation("expected a message");
            if (in->tag == kTagBadPrime) {
                take(in, kTagBadPrime, 0);
                if (++prime_tries_ > kMaxPrimeRetries)
                    return finish_reject(Reason::ProtocolViolation);
                return send_q2();
            }
            take(in, kTagQ2Ok, 0);
            f2_ = std::make_unique<PrimeField>(q2_);
            loop_ = LdupLoopVerifier(r);
            ++step_;
            if (r == 1) return finalize();
            return send_phi_psi();
        }
        const PrimeField& g = *f2_;
        std::size_t local = step_ - 2 * r - 4;
        std::size_t i0 = r - 1 - local / 2;
        if (local % 2 == 0) {
            const Message& m = take_elems(in, kTagXbYb, 2, g);
            count_recv(2);
            loop_.set_xbar_ybar(i0, m.items[0], m.items[1]);
            ++step_;
            PrimeField::Element l = chal(g);
            loop_.set_lambda(i0, l);
            count_round();
            count_sent(1);
            return msg(ProtocolId::Signature, kTagLambda, {l});
        }
        const Message& m = take_elems(in, kTagZb, 1, g);
        count_recv(1);
        loop_.set_zbar(i0, m.items[0]);
        ++step_;
        if (local / 2 + 1 < r - 1) return send_phi_psi();
        return finalize();
    }

private:
    static bool all_zero(const Vec& v) {
        return std::all_of(v.begin(), v.end(), [](PrimeField::Element e) { return e == 0; });
    }

    std::optional<Message> send_q1() {
        const auto& pool = prime_pool();
        q1_ = pool[source_->draw_index(pool.size(), step_, prime_tries_)];
        count_round();
        count_sent(1);
        return msg(ProtocolId::Signature, kTagQ1, {q1_});
    }
    std::optional<Message> send_q2() {
        const auto& pool = prime_pool();
        for (std::uint32_t t = 0;; ++t) {
            std::uint64_t q = pool[source_->draw_index(pool.size(), step_, prime_tries_ * 256 + t)];
            if (q == q1_ || divides_delta(q)) continue;
            q2_ = q;
            break;
        }
        count_round();
        count_sent(1);
        return msg(ProtocolId::Signature, kTagQ2, {q2_});
    }
    bool divides_delta(std::uint64_t q) const {
        for (const auto& b : delta_->blocks) {
            if (b.a.den() % q == 0 || b.b.den() % q == 0 || b.c.den() % q == 0) return true;
        }
        return false;
    }

    std::optional<Message> send_x(const PrimeField& f, std::uint8_t tag) {
        pending_ = ex_->next_index();
        pending_x_ = chal(f);
        count_round();
        count_sent(1);
        return msg(ProtocolId::Signature, tag, {pending_x_});
    }
    std::optional<Message> send_phi_psi() {
        const PrimeField& g = *f2_;
        std::size_t i0 = r_ - 1 - (step_ - 2 * r_ - 4) / 2;
        PrimeField::Element phi = chal(g, 0), psi = chal(g, 1);
        loop_.set_phi_psi(i0, phi, psi);
        count_round();
        count_sent(2);
        return msg(ProtocolId::Signature, kTagPhiPsi, {phi, psi});
    }

    std::optional<Message> finalize() {
        const PrimeField& g = *f2_;
        const std::size_t r = r_;
        auto fin = loop_.finalize(g, chal(g, 0), chal(g, 1), chal(g, 2));
        // z^T Delta [x y] against (lambda^T M) [phi psi] with M the permuted
        // profile submatrix reduced mod q2
        FMatrix bmod(g, r, r);
        try {
            bmod = a_.submatrix(cols_, cols_).mod(g);
        } catch (const BadPrime&) {
            return finish_reject(Reason::ProtocolViolation);  // integer input: cannot happen
        }
        FMatrix mmod = bmod.permute_rows(perm_->inverse()).permute_cols(*perm_);
        Vec zd = delta_apply(g, fin.z);
        Vec u = mu_vecmat(mmod, fin.lambda);
        bool ok = dot(g, zd, fin.x) == dot(g, u, fin.phi) && dot(g, zd, fin.y) == dot(g, u, fin.psi);
        if (!ok) return finish_reject(Reason::FinalCheckFailed);
        auto [pos, neg] = delta_->inertia();
        Outputs o;
        o.rank = static_cast<std::uint32_t>(r);
        o.signature = std::tuple<int, int, int>(pos, neg, static_cast<int>(n_ - r));
        return finish_accept(std::move(o));
    }

    Vec delta_apply(const PrimeField& g, const Vec& z) const {
        // z^T Delta for the committed block diagonal, reduced mod q2
        Vec out(z.size(), 0);
        std::size_t k = 0;
        for (const auto& b : delta_->blocks) {
            if (!b.two_by_two) {
                out[k] = g.mul(z[k], b.a.mod(g));
                k += 1;
            } else {
                PrimeField::Element da = b.a.mod(g), db = b.b.mod(g), dc = b.c.mod(g);
                out[k] = g.add(g.mul(z[k], da), g.mul(z[k + 1], db));
                out[k + 1] = g.add(g.mul(z[k], db), g.mul(z[k + 1], dc));
                k += 2;
            }
        }
        return out;
    }

    QMatrix a_;
    std::size_t n_ = 0, r_ = 0;
    std::vector<std::uint32_t> cols_;
    std::uint64_t q1_ = 0, q2_ = 0;
    std::uint32_t prime_tries_ = 0;
    std::unique_ptr<PrimeField> f1_, f2_;
    std::unique_ptr<FMatrix> amod_, atr_;
    Vec alpha_, w_, v1_, v2_;
    std::optional<TriExchangeVerifier> ex_;
    std::size_t pending_ = 0;
    PrimeField::Element pending_x_ = 0;
    std::optional<Permutation> perm_;
    std::unique_ptr<BlockDiagonal> delta_;
    LdupLoopVerifier loop_;
};

}  // namespace

std::unique_ptr<Session> signature_prover(const Instance& inst, const ProverOptions& opt) {
    return std::make_unique<SignatureProver>(inst, opt);
}
std::unique_ptr<Session> signature_verifier(const Instance& inst, VerifierCtx ctx) {
    return std::make_unique<SignatureVerifier>(inst, std::move(ctx));
}

}  // namespace detail
}  // namespace lincert
