#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincert/adversary.hpp"
#include "lincert/certificate_file.hpp"
#include "lincert/oracle.hpp"
#include "support.hpp"

using namespace lincert;
using namespace lincert_test;

namespace {
PrimeField f101(101);
constexpr std::uint64_t kTrials = 400;  // the full statistical pass lives in the acceptance suite
}

TEST_CASE("every standard strategy meets its bound") {
    for (auto id : {ProtocolId::Freivalds, ProtocolId::RankUpper, ProtocolId::RankLower,
                    ProtocolId::TriEquiv, ProtocolId::Grp, ProtocolId::Ldup,
                    ProtocolId::Determinant, ProtocolId::CrpInteractive,
                    ProtocolId::RpmInvertible, ProtocolId::RpmFull, ProtocolId::TriEquivConst,
                    ProtocolId::CrpConst}) {
        for (const auto& s : adversary::standard_strategies(id, f101, 4242)) {
            auto rep = adversary::run_trials(s, kTrials, 77);
            CAPTURE(rep.protocol);
            CAPTURE(rep.adversary);
            CHECK(rep.within_bound());
        }
    }
}

TEST_CASE("consistent scaling is accepted by the profile-free check") {
    RandomSource rng(41);
    FMatrix a = FMatrix::random_grp(f101, 5, rng);
    Instance inst{ProtocolId::Grp, a};
    for (int t = 0; t < 50; ++t) {
        auto prover = adversary::scaling_attack_grp(a, 900 + t);
        VerifierOptions vopt;
        vopt.seed = 1700 + t;
        auto verifier = make_verifier(inst, vopt);
        auto res = run_interactive(*prover, *verifier);
        CHECK(res.verdict.accepted);
    }
}

TEST_CASE("the same scaling loses once the diagonal is committed") {
    RandomSource rng(43);
    FMatrix a = FMatrix::random_nonsingular(f101, 5, rng);
    Instance inst{ProtocolId::Ldup, a};
    int rejected = 0;
    for (int t = 0; t < static_cast<int>(kTrials); ++t) {
        auto prover = adversary::scaling_attack_ldup(a, 300 + t);
        VerifierOptions vopt;
        vopt.seed = 8200 + t;
        auto verifier = make_verifier(inst, vopt);
        if (!run_interactive(*prover, *verifier).verdict.accepted) ++rejected;
    }
    double bound = std::pow(1.0 - 1.0 / 101.0, 10.0);
    double sigma = std::sqrt(bound * (1 - bound) / kTrials);
    CHECK(double(rejected) / kTrials >= bound - 3 * sigma);
}

TEST_CASE("best response degenerates to honesty on a generic input") {
    RandomSource rng(47);
    FMatrix a = FMatrix::random_grp(f101, 5, rng);
    Instance inst{ProtocolId::Grp, a};
    for (int t = 0; t < 50; ++t) {
        auto prover = adversary::best_response_grp(a);
        VerifierOptions vopt;
        vopt.seed = 2500 + t;
        auto verifier = make_verifier(inst, vopt);
        CHECK(run_interactive(*prover, *verifier).verdict.accepted);
    }
}

TEST_CASE("best response exploits a tiny field measurably") {
    PrimeField f5(5);
    // the antidiagonal is nonsingular without generic rank profile
    FMatrix anti(f5, 2, 2);
    anti.set(0, 1, 1);
    anti.set(1, 0, 1);
    Instance inst{ProtocolId::Grp, anti};
    std::uint64_t detections = 0;
    const std::uint64_t trials = 2000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        auto prover = adversary::best_response_grp(anti);
        VerifierOptions vopt;
        vopt.seed = 33000 + t;
        auto verifier = make_verifier(inst, vopt);
        if (!run_interactive(*prover, *verifier).verdict.accepted) ++detections;
    }
    double rate = double(detections) / trials;
    double bound = std::pow(1.0 - 1.0 / 5.0, 4.0);  // (1 - 1/|S|)^{2n}
    double sigma = std::sqrt(bound * (1 - bound) / trials);
    CHECK(rate >= bound - 3 * sigma);
    CHECK(rate < 0.95);  // the small field leaves measurable acceptance slack
}

TEST_CASE("honest behavior is never detected") {
    RandomSource rng(53);
    FMatrix a = FMatrix::random_nonsingular(f101, 5, rng);
    Instance inst{ProtocolId::Ldup, a};
    adversary::Strategy null_strategy{"null", inst,
                                      [inst](std::uint64_t) { return make_prover(inst); }, 0.0,
                                      true};
    auto rep = adversary::run_trials(null_strategy, 300, 5);
    CHECK(rep.detections == 0);
}

TEST_CASE("signature with a flipped block sign is rejected") {
    RandomSource rng(59);
    int rejected = 0, total = 0;
    for (int t = 0; t < 60; ++t) {
        QMatrix a = random_symmetric_q(4, -4, 4, rng);
        if (oracle::rank_q(a) == 0) continue;
        Instance inst{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
        inst.aq = a;
        // the phase-two commitment is the last prover message before the
        // second prime; flip its first committed block value
        auto honest = fiat_shamir_prove(inst);
        std::size_t target = 0;
        for (std::size_t k = 0; k < honest.messages.size(); ++k)
            if (!honest.messages[k].rationals.empty()) target = k;
        auto prover = adversary::tamper(make_prover(inst), target, 0, 0, 101, true);
        VerifierOptions vopt;
        vopt.seed = 60000 + t;
        auto verifier = make_verifier(inst, vopt);
        ++total;
        if (!run_interactive(*prover, *verifier).verdict.accepted) ++rejected;
    }
    CHECK(rejected >= total - 1);  // failures would need a vanishing bilinear form mod a 16-bit prime
}
