#pragma once

#include <memory>

#include "lincert/instance.hpp"
#include "lincert/transcript.hpp"

namespace lincert {
namespace detail {

struct VerifierCtx {
    std::shared_ptr<ChallengeSource> source;
    SampleSet set;
    std::optional<std::uint64_t> expected_det;
    std::optional<std::uint32_t> expected_rank;
};

std::unique_ptr<Session> freivalds_prover(const Instance&);
std::unique_ptr<Session> freivalds_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> rank_upper_prover(const Instance&, const ProverOptions&);
std::unique_ptr<Session> rank_upper_verifier(const Instance&, VerifierCtx);
std::unique_ptr<Session> rank_lower_prover(const Instance&, const ProverOptions&);
std::unique_ptr<Session> rank_lower_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> tri_equiv_prover(const Instance&);
std::unique_ptr<Session> tri_equiv_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> grp_prover(const Instance&);
std::unique_ptr<Session> grp_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> ldup_prover(const Instance&, const ProverOptions&);
std::unique_ptr<Session> ldup_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> noninteractive_prover(const Instance&);
std::unique_ptr<Session> noninteractive_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> crp_interactive_prover(const Instance&, const ProverOptions&);
std::unique_ptr<Session> crp_interactive_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> rpm_invertible_prover(const Instance&);
std::unique_ptr<Session> rpm_invertible_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> rpm_full_prover(const Instance&);
std::unique_ptr<Session> rpm_full_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> tri_equiv_const_prover(const Instance&);
std::unique_ptr<Session> tri_equiv_const_verifier(const Instance&, VerifierCtx);
std::unique_ptr<Session> crp_const_prover(const Instance&, const ProverOptions&);
std::unique_ptr<Session> crp_const_verifier(const Instance&, VerifierCtx);

std::unique_ptr<Session> signature_prover(const Instance&, const ProverOptions&);
std::unique_ptr<Session> signature_verifier(const Instance&, VerifierCtx);

}  // namespace detail
}  // namespace lincert
