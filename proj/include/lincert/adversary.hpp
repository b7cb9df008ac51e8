#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lincert/instance.hpp"
#include "lincert/transcript.hpp"

namespace lincert {
namespace adversary {

/// One dishonest-prover strategy against one instance: a factory of fresh
/// prover sessions plus the theoretical detection lower bound to report
/// against.  Deterministic given (strategy, seed).
struct Strategy {
    std::string name;
    Instance instance;
    std::function<std::unique_ptr<Session>(std::uint64_t seed)> make_prover;
    double bound = 0.0;          // theoretical detection probability floor
    bool expect_accept = false;  // attacks the protocol provably tolerates
};

struct DetectionReport {
    std::string protocol;
    std::string adversary;
    std::uint64_t trials = 0;
    std::uint64_t detections = 0;
    double rate = 0.0;
    double bound = 0.0;
    double z_score = 0.0;  // (rate - bound) / binomial sigma at the bound
    bool expect_accept = false;

    /// rate >= bound - 3 sigma (or rate == 0 when the attack must pass).
    bool within_bound() const;
};

/// Repeats the protocol with fresh verifier randomness per trial.
DetectionReport run_trials(const Strategy& s, std::uint64_t trials, std::uint64_t seed);

/// Stage-wise best response against the generic-rank-profile check: solves
/// the per-stage 2x2 constraint system whenever it is solvable and plays
/// honestly for a patched input elsewhere.  On an input that already has
/// generic rank profile it degenerates to the honest prover.
std::unique_ptr<Session> best_response_grp(const FMatrix& a);

/// Post-hoc scaling of the streamed projections: accepted by the
/// generic-rank-profile check (the normalization is not pinned there),
/// rejected once the diagonal is committed.
std::unique_ptr<Session> scaling_attack_grp(const FMatrix& a, std::uint64_t seed);
std::unique_ptr<Session> scaling_attack_ldup(const FMatrix& a, std::uint64_t seed);

/// Generic wrapper: perturb message #k, item #j by delta (mod p), or negate
/// rational #j.
std::unique_ptr<Session> tamper(std::unique_ptr<Session> inner, std::size_t message_index,
                                std::size_t coordinate, std::uint64_t delta,
                                std::uint64_t modulus, bool tamper_rational = false);

/// Commits the identity permutation (and a fabricated diagonal) for an
/// input whose rank profile matrix is not the identity, then plays honestly
/// for the patched input.
std::unique_ptr<Session> rpm_wrong_permutation(const FMatrix& a, std::uint64_t seed);

/// The standard strategy set for one protocol on one instance; used by the
/// soundness harness and the command line.
std::vector<Strategy> standard_strategies(ProtocolId id, const PrimeField& field,
                                          std::uint64_t seed);

}  // namespace adversary
}  // namespace lincert
