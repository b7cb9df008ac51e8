#include "lincert/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "lincert/linalg.hpp"
#include "lincert/oracle.hpp"
#include "protocols/factories.hpp"
#include "protocols/phases.hpp"
#include "protocols/session_base.hpp"

namespace lincert {
namespace adversary {

using detail::msg;

namespace {

// tag values mirror the protocol implementations; they are frozen by the
// certificate and wire formats
namespace grp_tags {
constexpr std::uint8_t kCommit = 0x01, kPhiPsi = 0x02, kXY = 0x03, kLambda = 0x04, kZ = 0x05;
}
namespace ldup_tags {
constexpr std::uint8_t kPhiPsi = 0x02, kXbYb = 0x03, kLambda = 0x04, kZb = 0x05;
}
namespace rpminv_tags {
constexpr std::uint8_t kCommit = 0x01, kE = 0x02, kF = 0x03, kPhiPsi = 0x04, kXbYb = 0x05,
                       kLambda = 0x06, kZb = 0x07;
}

// patch the trailing diagonal until the no-pivot elimination goes through
FMatrix grp_patch(const FMatrix& a, std::uint64_t seed) {
    const PrimeField& f = a.field();
    RandomSource rng(seed ^ 0x5bd1e995u);
    FMatrix b = a;
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            detail::lu_nopivot(b);
            return b;
        } catch (const SingularMatrix&) {
        }
        for (std::size_t k = 0; k < b.rows(); ++k)
            b.set(k, k, f.add(a.at(k, k), SampleSet::nonzero().sample(f, rng)));
    }
    throw Error("could not patch the input to generic rank profile");
}

// ---- best response against the generic-rank-profile check

class GrpBestResponseProver final : public detail::ProverBase {
public:
    explicit GrpBestResponseProver(const FMatrix& a) : a_(a), n_(a.rows()) {
        const PrimeField& f = a_.field();
        // partial no-pivot elimination; schur_[t] is the complement after t
        // successful steps, kept while leading minors stay nonzero
        FMatrix w = a_;
        schur_.push_back(w);
        k0_ = n_;
        for (std::size_t t = 0; t < n_; ++t) {
            if (w.at(t, t) == 0) {
                k0_ = t;
                break;
            }
            PrimeField::Element inv = f.inv(w.at(t, t));
            for (std::size_t i = t + 1; i < n_; ++i) {
                PrimeField::Element fac = f.mul(w.at(i, t), inv);
                if (fac == 0) continue;
                for (std::size_t j = t; j < n_; ++j)
                    w.set(i, j, f.sub(w.at(i, j), f.mul(fac, w.at(t, j))));
            }
            schur_.push_back(w);
        }
        if (k0_ < n_) {
            FMatrix patched = grp_patch(a_, 0xabcdef);
            auto lu = detail::lu_nopivot(patched);
            lhat_ = std::make_unique<FMatrix>(std::move(lu.l));
            uhat_ = std::make_unique<FMatrix>(std::move(lu.u));
        } else {
            auto lu = detail::lu_nopivot(a_);
            lhat_ = std::make_unique<FMatrix>(std::move(lu.l));
            uhat_ = std::make_unique<FMatrix>(std::move(lu.u));
        }
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
            ++step_;
            return msg(ProtocolId::Grp, grp_tags::kCommit);
        }
        std::size_t iter = (step_ - 1) / 2;
        std::size_t c = n_ - 1 - iter;
        if (step_ % 2 == 1) {
            expect(in, grp_tags::kPhiPsi, 2);
            phi_[c] = in->items[0];
            psi_[c] = in->items[1];
            plan_stage(f, c);
            ++step_;
            return msg(ProtocolId::Grp, grp_tags::kXY, {x_[c], y_[c]});
        }
        expect(in, grp_tags::kLambda, 1);
        lambda_[c] = in->items[0];
        z_[c] = answer_z(f, c, lambda_[c]);
        if (++step_ == 2 * n_ + 1) done_ = true;
        return msg(ProtocolId::Grp, grp_tags::kZ, {z_[c]});
    }

private:
    // stage data valid while c <= k0_ (the leading c x c block is generic)
    struct StagePlan {
        enum class Kind { Honest, Free, Unique } kind = Kind::Honest;
        PrimeField::Element free_z = 0;              // Free: works for every lambda
        PrimeField::Element lam_star = 0, z_star = 0;  // Unique: the only winning lambda
        PrimeField::Element xc_t = 0, yc_t = 0;
        PrimeField::Element rhs_x = 0, rhs_y = 0;  // a*phi_c + f and a*psi_c + h
    } plan_;

    void plan_stage(const PrimeField& f, std::size_t c) {
        if (c > k0_) {
            // beyond the failing pivot: play the patched factorization
            PrimeField::Element xv = 0, yv = 0;
            for (std::size_t j = c; j < n_; ++j) {
                xv = f.add(xv, f.mul(uhat_->at(c, j), phi_[j]));
                yv = f.add(yv, f.mul(uhat_->at(c, j), psi_[j]));
            }
            x_[c] = xv;
            y_[c] = yv;
            plan_.kind = StagePlan::Kind::Honest;
            return;
        }
        const FMatrix& w = schur_[c];  // complement indexed from row/col c
        auto at = [&](std::size_t i, std::size_t j) { return w.at(i, j); };
        PrimeField::Element d = at(c, c);
        PrimeField::Element e = 0, g = 0, av = 0;
        for (std::size_t j = c + 1; j < n_; ++j) {
            e = f.add(e, f.mul(at(c, j), phi_[j]));
            g = f.add(g, f.mul(at(c, j), psi_[j]));
            av = f.add(av, f.mul(lambda_[j], at(j, c)));
        }
        // f and h: the tail bilinear form minus what was actually committed
        PrimeField::Element tail_x = 0, tail_y = 0, bil_x = 0, bil_y = 0;
        for (std::size_t i = c + 1; i < n_; ++i) {
            tail_x = f.add(tail_x, f.mul(z_[i], x_[i]));
            tail_y = f.add(tail_y, f.mul(z_[i], y_[i]));
            for (std::size_t j = c + 1; j < n_; ++j) {
                bil_x = f.add(bil_x, f.mul(f.mul(lambda_[i], at(i, j)), phi_[j]));
                bil_y = f.add(bil_y, f.mul(f.mul(lambda_[i], at(i, j)), psi_[j]));
            }
        }
        PrimeField::Element fv = f.sub(bil_x, tail_x);
        PrimeField::Element hv = f.sub(bil_y, tail_y);
        PrimeField::Element xc_t = f.add(f.mul(d, phi_[c]), e);
        PrimeField::Element yc_t = f.add(f.mul(d, psi_[c]), g);
        PrimeField::Element rhs_x = f.add(f.mul(av, phi_[c]), fv);
        PrimeField::Element rhs_y = f.add(f.mul(av, psi_[c]), hv);
        plan_.xc_t = xc_t;
        plan_.yc_t = yc_t;
        plan_.rhs_x = rhs_x;
        plan_.rhs_y = rhs_y;

        if (xc_t == 0 && yc_t == 0) {
            // lambda drops out entirely; answer the right-hand sides directly
            x_[c] = rhs_x;
            y_[c] = rhs_y;
            plan_.kind = StagePlan::Kind::Free;
            plan_.free_z = f.one();
            return;
        }
        PrimeField::Element delta = f.sub(f.mul(yc_t, rhs_x), f.mul(xc_t, rhs_y));
        if (delta == 0) {
            // singular but consistent: one z works for every lambda
            x_[c] = xc_t;
            y_[c] = yc_t;
            plan_.kind = StagePlan::Kind::Free;
            plan_.free_z = 0;  // resolved once lambda arrives
            return;
        }
        // force a nonsingular system and hope the verifier draws its unique
        // solution
        if (yc_t != 0) {
            x_[c] = f.add(xc_t, f.one());
            y_[c] = yc_t;
        } else {
            x_[c] = xc_t;
            y_[c] = f.add(yc_t, f.one());
        }
        PrimeField::Element det = f.sub(f.mul(plan_.yc_t, x_[c]), f.mul(plan_.xc_t, y_[c]));
        // det = yc_t (or -xc_t), nonzero by construction
        plan_.lam_star =
            f.div(f.sub(f.mul(y_[c], rhs_x), f.mul(x_[c], rhs_y)), det);
        plan_.z_star = f.div(f.sub(f.mul(plan_.yc_t, rhs_x), f.mul(plan_.xc_t, rhs_y)), det);
        plan_.kind = StagePlan::Kind::Unique;
    }

    PrimeField::Element answer_z(const PrimeField& f, std::size_t c, PrimeField::Element lam) {
        if (c > k0_) {
            PrimeField::Element zv = 0;
            for (std::size_t k = c; k < n_; ++k) zv = f.add(zv, f.mul(lambda_[k], lhat_->at(k, c)));
            return zv;
        }
        switch (plan_.kind) {
            case StagePlan::Kind::Honest: {
                PrimeField::Element zv = 0;
                for (std::size_t k = c; k < n_; ++k)
                    zv = f.add(zv, f.mul(lambda_[k], lhat_->at(k, c)));
                return zv;
            }
            case StagePlan::Kind::Free: {
                if (x_[c] == 0 && y_[c] == 0) return plan_.free_z;
                // z (lambda) from whichever equation has a nonzero committed side
                if (x_[c] != 0)
                    return f.div(f.add(f.mul(plan_.xc_t, lam), plan_.rhs_x), x_[c]);
                return f.div(f.add(f.mul(plan_.yc_t, lam), plan_.rhs_y), y_[c]);
            }
            case StagePlan::Kind::Unique: {
                if (lam == plan_.lam_star) return plan_.z_star;
                // sacrifice one equation, keep the other exactly true
                if (x_[c] != 0)
                    return f.div(f.add(f.mul(plan_.xc_t, lam), plan_.rhs_x), x_[c]);
                return f.div(f.add(f.mul(plan_.yc_t, lam), plan_.rhs_y), y_[c]);
            }
        }
        return 0;
    }

    FMatrix a_;
    std::size_t n_;
    std::size_t k0_ = 0;
    std::vector<FMatrix> schur_;
    std::unique_ptr<FMatrix> lhat_, uhat_;
    Vec phi_, psi_, lambda_, x_, y_, z_;
};

// ---- scaling wrappers

class ScalingGrpProver final : public Session {
public:
    ScalingGrpProver(const FMatrix& a, std::uint64_t seed)
        : inner_(detail::grp_prover(Instance{ProtocolId::Grp, a})),
          field_(a.field()),
          rng_(seed) {}
    ProtocolId protocol() const override { return ProtocolId::Grp; }
    Role role() const override { return Role::Prover; }
    bool finished() const override { return inner_->finished(); }

    std::optional<Message> step(const std::optional<Message>& in) override {
        auto out = inner_->step(in);
        if (!out) return out;
        if (out->tag == grp_tags::kXY) {
            alpha_ = SampleSet::nonzero().sample(field_, rng_);
            PrimeField::Element inv = field_.inv(alpha_);
            out->items[0] = field_.mul(out->items[0], inv);
            out->items[1] = field_.mul(out->items[1], inv);
        } else if (out->tag == grp_tags::kZ) {
            out->items[0] = field_.mul(out->items[0], alpha_);
        }
        return out;
    }

private:
    std::unique_ptr<Session> inner_;
    PrimeField field_;
    RandomSource rng_;
    PrimeField::Element alpha_ = 1;
};

class ScalingLdupProver final : public Session {
public:
    ScalingLdupProver(const FMatrix& a, std::uint64_t seed)
        : inner_(detail::ldup_prover(Instance{ProtocolId::Ldup, a}, {})),
          field_(a.field()),
          rng_(seed) {}
    ProtocolId protocol() const override { return ProtocolId::Ldup; }
    Role role() const override { return Role::Prover; }
    bool finished() const override { return inner_->finished(); }

    std::optional<Message> step(const std::optional<Message>& in) override {
        auto out = inner_->step(in);
        if (!out) return out;
        if (out->tag == ldup_tags::kXbYb) {
            alpha_ = SampleSet::nonzero().sample(field_, rng_);
            PrimeField::Element inv = field_.inv(alpha_);
            out->items[0] = field_.mul(out->items[0], inv);
            out->items[1] = field_.mul(out->items[1], inv);
        } else if (out->tag == ldup_tags::kZb) {
            out->items[0] = field_.mul(out->items[0], alpha_);
        }
        return out;
    }

private:
    std::unique_ptr<Session> inner_;
    PrimeField field_;
    RandomSource rng_;
    PrimeField::Element alpha_ = 1;
};

class TamperProver final : public Session {
public:
    TamperProver(std::unique_ptr<Session> inner, std::size_t message_index, std::size_t coordinate,
                 std::uint64_t delta, std::uint64_t modulus, bool tamper_rational)
        : inner_(std::move(inner)),
          target_(message_index),
          coord_(coordinate),
          delta_(delta),
          modulus_(modulus),
          rational_(tamper_rational) {}
    ProtocolId protocol() const override { return inner_->protocol(); }
    Role role() const override { return inner_->role(); }
    bool finished() const override { return inner_->finished(); }

    std::optional<Message> step(const std::optional<Message>& in) override {
        auto out = inner_->step(in);
        if (!out) return out;
        if (sent_ == target_) {
            if (rational_) {
                if (coord_ < out->rationals.size()) out->rationals[coord_] = -out->rationals[coord_];
            } else if (coord_ < out->items.size()) {
                out->items[coord_] = (out->items[coord_] + delta_) % modulus_;
            }
        }
        ++sent_;
        return out;
    }

private:
    std::unique_ptr<Session> inner_;
    std::size_t target_, coord_;
    std::uint64_t delta_, modulus_;
    bool rational_;
    std::size_t sent_ = 0;
};

// commits the identity permutation with a fabricated diagonal and plays the
// patched factorization; the outer checks run against the true input
class RpmWrongPermProver final : public detail::ProverBase {
public:
    RpmWrongPermProver(const FMatrix& a, std::uint64_t seed) : n_(a.rows()) {
        FMatrix patched = grp_patch(a, seed);
        auto lu = detail::lu_nopivot(patched);
        const PrimeField& f = a.field();
        d_.assign(n_, 0);
        FMatrix u1 = lu.u;
        for (std::size_t k = 0; k < n_; ++k) {
            d_[k] = lu.u.at(k, k);
            PrimeField::Element inv = f.inv(d_[k]);
            for (std::size_t j = 0; j < n_; ++j) u1.set(k, j, f.mul(lu.u.at(k, j), inv));
        }
        ef_.emplace(u1);  // conjugation by the identity permutation
        loop_.emplace(u1, lu.l);
    }
    ProtocolId protocol() const override { return ProtocolId::RpmInvertible; }

    std::optional<Message> step(const std::optional<Message>& in) override {
        if (step_ == 0) {
            ++step_;
            std::vector<std::uint64_t> items;
            for (std::size_t j = 0; j < n_; ++j) items.push_back(j);  // identity claim
            items.insert(items.end(), d_.begin(), d_.end());
            return msg(ProtocolId::RpmInvertible, rpminv_tags::kCommit, std::move(items));
        }
        if (step_ <= n_) {
            expect(in, rpminv_tags::kE, 1);
            PrimeField::Element fj = ef_->on_e(step_ - 1, in->items[0]);
            ++step_;
            return msg(ProtocolId::RpmInvertible, rpminv_tags::kF, {fj});
        }
        std::size_t local = step_ - n_ - 1;
        std::size_t i0 = n_ - 1 - local / 2;
        if (local % 2 == 0) {
            expect(in, rpminv_tags::kPhiPsi, 2);
            auto [xb, yb] = loop_->on_phi_psi(i0, in->items[0], in->items[1]);
            ++step_;
            return msg(ProtocolId::RpmInvertible, rpminv_tags::kXbYb, {xb, yb});
        }
        expect(in, rpminv_tags::kLambda, 1);
        PrimeField::Element zb = loop_->on_lambda(i0, in->items[0]);
        ++step_;
        if (local / 2 + 1 == n_ - 1) done_ = true;
        return msg(ProtocolId::RpmInvertible, rpminv_tags::kZb, {zb});
    }

private:
    std::size_t n_;
    Vec d_;
    std::optional<detail::EfProver> ef_;
    std::optional<detail::LdupLoopProver> loop_;
};

}  // namespace

bool DetectionReport::within_bound() const {
    if (expect_accept) return detections == 0;
    double sigma = std::sqrt(bound * (1.0 - bound) / static_cast<double>(trials));
    return rate >= bound - 3.0 * sigma;
}

DetectionReport run_trials(const Strategy& s, std::uint64_t trials, std::uint64_t seed) {
    DetectionReport rep;
    rep.protocol = protocol_name(s.instance.id);
    rep.adversary = s.name;
    rep.trials = trials;
    rep.bound = s.bound;
    rep.expect_accept = s.expect_accept;
    RandomSource master(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = master.next_u64();
        auto prover = s.make_prover(trial_seed);
        VerifierOptions vopt;
        vopt.seed = master.next_u64();
        auto verifier = make_verifier(s.instance, vopt);
        RunResult res = run_interactive(*prover, *verifier);
        if (!res.verdict.accepted) ++rep.detections;
    }
    rep.rate = static_cast<double>(rep.detections) / static_cast<double>(trials);
    double sigma = std::sqrt(rep.bound * (1.0 - rep.bound) / static_cast<double>(trials));
    rep.z_score = sigma > 0 ? (rep.rate - rep.bound) / sigma : 0.0;
    return rep;
}

std::unique_ptr<Session> best_response_grp(const FMatrix& a) {
    return std::make_unique<GrpBestResponseProver>(a);
}

std::unique_ptr<Session> scaling_attack_grp(const FMatrix& a, std::uint64_t seed) {
    return std::make_unique<ScalingGrpProver>(a, seed);
}

std::unique_ptr<Session> scaling_attack_ldup(const FMatrix& a, std::uint64_t seed) {
    return std::make_unique<ScalingLdupProver>(a, seed);
}

std::unique_ptr<Session> tamper(std::unique_ptr<Session> inner, std::size_t message_index,
                                std::size_t coordinate, std::uint64_t delta, std::uint64_t modulus,
                                bool tamper_rational) {
    return std::make_unique<TamperProver>(std::move(inner), message_index, coordinate, delta,
                                          modulus, tamper_rational);
}

std::unique_ptr<Session> rpm_wrong_permutation(const FMatrix& a, std::uint64_t seed) {
    return std::make_unique<RpmWrongPermProver>(a, seed);
}

namespace {

FMatrix random_non_grp_nonsingular(const PrimeField& f, std::size_t n, RandomSource& rng) {
    for (;;) {
        FMatrix a = FMatrix::random_nonsingular(f, n, rng);
        if (!oracle::grp(a)) return a;
        // force a zero leading pivot while keeping the matrix nonsingular
        FMatrix b = a;
        b.set(0, 0, 0);
        if (oracle::rank(b) == n && !oracle::grp(b)) return b;
    }
}

std::vector<std::uint32_t> non_minimal_profile(const FMatrix& a) {
    // keep all pivot columns except the first, then append a duplicate
    // dependent direction certified independent only via later columns
    auto cols = oracle::crp(a);
    if (cols.size() < 1) return {};
    // replacing the first pivot with any later non-pivot column that keeps
    // the set independent yields a lexicographically larger independent set
    std::vector<bool> in_profile(a.cols(), false);
    for (auto c : cols) in_profile[c] = true;
    for (std::uint32_t j = cols[0] + 1; j < a.cols(); ++j) {
        if (in_profile[j]) continue;
        std::vector<std::uint32_t> cand;
        for (auto c : cols)
            if (c != cols[0]) cand.push_back(c);
        cand.push_back(j);
        std::sort(cand.begin(), cand.end());
        if (oracle::rank(a.columns(cand)) == cols.size()) return cand;
    }
    return {};
}

}  // namespace

std::vector<Strategy> standard_strategies(ProtocolId id, const PrimeField& field,
                                          std::uint64_t seed) {
    std::vector<Strategy> out;
    RandomSource rng(seed);
    const double inv_s = 1.0 / static_cast<double>(field.modulus());
    auto pow_bound = [&](std::size_t n) {
        return std::pow(1.0 - inv_s, 2.0 * static_cast<double>(n));
    };

    switch (id) {
        case ProtocolId::Freivalds: {
            std::size_t n = 6;
            FMatrix a = FMatrix::random(field, n, n, rng);
            FMatrix b = FMatrix::random(field, n, n, rng);
            FMatrix c = a.mul(b);
            c.set(0, 0, field.add(c.at(0, 0), field.one()));  // rank-one corruption
            Instance inst{id, a};
            inst.b = b;
            inst.c = c;
            out.push_back({"wrong-product", inst,
                           [inst](std::uint64_t) { return make_prover(inst); }, 1.0 - inv_s, false});
            break;
        }
        case ProtocolId::RankUpper: {
            std::size_t n = 6;
            FMatrix a = FMatrix::random_rank(field, n, n, 4, rng);
            Instance inst{id, a};
            ProverOptions popt;
            popt.rank_upper_bound = 3;  // below the true rank
            out.push_back({"understated-rank", inst,
                           [inst, popt](std::uint64_t) { return make_prover(inst, popt); },
                           1.0 - inv_s, false});
            break;
        }
        case ProtocolId::RankLower: {
            std::size_t n = 6;
            FMatrix a(field, 0, 0);
            std::vector<std::uint32_t> cols;
            for (;;) {
                a = FMatrix::random_rank(field, n, n, 4, rng);
                auto crp = oracle::crp(a);
                // swap one pivot for a dependent column
                bool found = false;
                for (std::uint32_t j = 0; j < n && !found; ++j) {
                    bool piv = false;
                    for (auto c : crp) piv |= c == j;
                    if (piv) continue;
                    cols = crp;
                    cols[crp.size() - 1] = j;
                    std::sort(cols.begin(), cols.end());
                    bool distinct = true;
                    for (std::size_t k = 1; k < cols.size(); ++k) distinct &= cols[k] != cols[k - 1];
                    if (distinct && oracle::rank(a.columns(cols)) < cols.size()) found = true;
                }
                if (found) break;
            }
            Instance inst{id, a};
            ProverOptions popt;
            popt.rank_lower_cols = cols;
            out.push_back({"dependent-columns", inst,
                           [inst, popt](std::uint64_t) { return make_prover(inst, popt); },
                           1.0 - inv_s, false});
            break;
        }
        case ProtocolId::TriEquiv:
        case ProtocolId::TriEquivConst: {
            std::size_t n = 6;
            FMatrix a = FMatrix::random_nonsingular(field, n, rng);
            FMatrix t0 = FMatrix::identity(field, n);
            for (std::size_t k = 0; k + 1 < n; ++k) t0.set(k, k + 1, field.one());  // upper shift
            Instance inst{id, a};
            inst.b = a.mul(t0);  // only an upper factor exists; lower is claimed
            double bound = id == ProtocolId::TriEquiv
                               ? 1.0 - inv_s
                               : 1.0 - 2.0 * static_cast<double>(n - 1) * inv_s;
            out.push_back({"inequivalent-claim", inst,
                           [inst](std::uint64_t) { return make_prover(inst); }, bound, false});
            break;
        }
        case ProtocolId::Grp: {
            std::size_t n = 4;
            FMatrix a = random_non_grp_nonsingular(field, n, rng);
            Instance inst{id, a};
            out.push_back({"best-response", inst,
                           [a](std::uint64_t) { return best_response_grp(a); }, pow_bound(n),
                           false});
            FMatrix b = FMatrix::random_grp(field, n, rng);
            Instance honest{id, b};
            out.push_back({"scaling-attack", honest,
                           [b](std::uint64_t s) { return scaling_attack_grp(b, s); }, 0.0, true});
            break;
        }
        case ProtocolId::Ldup: {
            std::size_t n = 4;
            FMatrix a = FMatrix::random_nonsingular(field, n, rng);
            Instance inst{id, a};
            out.push_back({"scaling-attack", inst,
                           [a](std::uint64_t s) { return scaling_attack_ldup(a, s); },
                           pow_bound(n), false});
            out.push_back({"tampered-diagonal", inst,
                           [inst, n, &field](std::uint64_t) {
                               // commitment message 0, first diagonal slot
                               return tamper(make_prover(inst), 0, n, 1, field.modulus());
                           },
                           pow_bound(n), false});
            break;
        }
        case ProtocolId::Determinant: {
            std::size_t n = 6;
            FMatrix a = FMatrix::random_nonsingular(field, n, rng);
            Instance inst{id, a};
            ProverOptions popt;
            popt.det_claim = field.add(oracle::det(a), field.one());
            out.push_back({"false-determinant", inst,
                           [inst, popt](std::uint64_t) { return make_prover(inst, popt); }, 1.0,
                           false});
            break;
        }
        case ProtocolId::CrpInteractive:
        case ProtocolId::CrpConst: {
            std::size_t n = 6;
            FMatrix a(field, 0, 0);
            std::vector<std::uint32_t> cols;
            for (;;) {
                a = FMatrix::random_rank(field, n, n, 4, rng);
                cols = non_minimal_profile(a);
                if (!cols.empty()) break;
            }
            Instance inst{id, a};
            ProverOptions popt;
            popt.rank_lower_cols = cols;
            double bound = id == ProtocolId::CrpInteractive
                               ? 1.0 - inv_s
                               : 1.0 - 2.0 * static_cast<double>(cols.size() - 1) * inv_s;
            out.push_back({"non-minimal-profile", inst,
                           [inst, popt](std::uint64_t) { return make_prover(inst, popt); }, bound,
                           false});
            break;
        }
        case ProtocolId::RpmInvertible: {
            std::size_t n = 4;
            FMatrix a = random_non_grp_nonsingular(field, n, rng);
            Instance inst{id, a};
            out.push_back({"identity-permutation", inst,
                           [a](std::uint64_t s) { return rpm_wrong_permutation(a, s); },
                           pow_bound(n), false});
            break;
        }
        case ProtocolId::RpmFull: {
            std::size_t n = 5;
            FMatrix a(field, 0, 0);
            std::vector<std::uint32_t> cols;
            for (;;) {
                a = FMatrix::random_rank(field, n, n, 3, rng);
                cols = non_minimal_profile(a);
                if (!cols.empty()) break;
            }
            // an honest prover for a column-tweaked clone claims wrong profiles
            Instance inst{id, a};
            FMatrix patched = a;
            auto crp = oracle::crp(a);
            for (std::size_t i = 0; i < n; ++i)
                patched.set(i, crp[0], SampleSet::whole_field().sample(field, rng));
            Instance lie{id, patched};
            out.push_back({"wrong-profiles", inst,
                           [lie](std::uint64_t) { return make_prover(lie); }, 1.0 - inv_s, false});
            break;
        }
        default:
            break;
    }
    return out;
}

}  // namespace adversary
}  // namespace lincert
