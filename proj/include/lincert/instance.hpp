#pragma once

#include <array>
#include <memory>
#include <optional>

#include "lincert/matrix.hpp"
#include "lincert/transcript.hpp"

namespace lincert {

enum class Side : std::uint8_t { Lower = 0, Upper = 1 };

/// Public inputs of one protocol run; known to both endpoints and hashed
/// into the non-interactive input digest.  Prover claims (a determinant, a
/// rank bound, a column set) travel in the opening commitment instead.
struct Instance {
    ProtocolId id;
    FMatrix a;
    std::optional<FMatrix> b;   // tri-equiv family, freivalds
    std::optional<FMatrix> c;   // freivalds
    std::optional<QMatrix> aq;  // signature: integer symmetric input
    Side side = Side::Lower;
    bool row_variant = false;   // non-interactive profile certificate flavor

    std::array<std::uint8_t, 32> digest() const;
};

/// Knobs for the prover endpoint; defaults make it honest.
struct ProverOptions {
    std::optional<std::uint32_t> rank_upper_bound;              // claim for rank-upper
    std::optional<std::vector<std::uint32_t>> rank_lower_cols;  // claim for rank-lower, 0-based
    std::optional<std::uint64_t> det_claim;                     // claim for det
    std::uint64_t internal_seed = 0;  // 0 = derive from the input digest
};

struct VerifierOptions {
    std::uint64_t seed = 1;
    SampleSet set = SampleSet::whole_field();
    std::shared_ptr<ChallengeSource> source;     // overrides seed when set
    std::optional<std::uint64_t> expected_det;   // extra claim comparison
    std::optional<std::uint32_t> expected_rank;  // for rank-upper

    std::shared_ptr<ChallengeSource> make_source() const;
};

std::unique_ptr<Session> make_prover(const Instance& inst, const ProverOptions& opt = {});
std::unique_ptr<Session> make_verifier(const Instance& inst, const VerifierOptions& opt);
ProtocolPair make_pair(const Instance& inst, const VerifierOptions& vopt,
                       const ProverOptions& popt = {});

/// Smallest sample-set size the protocol's soundness statement needs; the
/// verifier constructor refuses smaller sets.
std::uint64_t min_sample_size(ProtocolId id, std::size_t m, std::size_t n);

}  // namespace lincert
