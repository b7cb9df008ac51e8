#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lincert/field.hpp"
#include "lincert/matrix.hpp"
#include "lincert/random.hpp"
#include "lincert/rational.hpp"

namespace lincert {

enum class ProtocolId : std::uint8_t {
    Freivalds = 0x01,
    CrpNoninteractive = 0x02,
    RpmNoninteractive = 0x03,
    TriEquiv = 0x04,
    Grp = 0x05,
    Ldup = 0x06,
    RankUpper = 0x07,
    RankLower = 0x08,
    CrpInteractive = 0x09,
    RpmInvertible = 0x0A,
    RpmFull = 0x0B,
    Signature = 0x0C,
    TriEquivConst = 0x0D,
    CrpConst = 0x0E,
    Determinant = 0x0F,
};

const char* protocol_name(ProtocolId id);
std::optional<ProtocolId> protocol_from_name(const std::string& name);
bool is_known_protocol(std::uint8_t id);

/// One protocol step: a tag plus flat payloads.  Scalars carry field
/// elements and indices; rationals only appear in the signature commitment.
struct Message {
    std::uint8_t protocol = 0;
    std::uint8_t tag = 0;
    std::vector<std::uint64_t> items;
    std::vector<Rational> rationals;
};

/// Scalar items exchanged and rounds, counted the way the communication
/// budgets are stated: a permutation on n points is n items, commitments
/// that restate the claim are free, and a round is a verifier-initiated
/// direction alternation (the opening commitment counts as the first).
struct Stats {
    std::uint64_t elements_sent = 0;      // counted items, verifier -> prover
    std::uint64_t elements_received = 0;  // counted items, prover -> verifier
    std::uint64_t rounds = 0;
    std::uint64_t mu_count = 0;  // matrix-vector products charged to the verifier

    std::uint64_t total_elements() const { return elements_sent + elements_received; }
};

enum class Reason : std::uint8_t {
    None = 0,
    FreivaldsMismatch,
    NotRowEchelon,
    NotColumnEchelon,
    NotLowerTriangular,
    NotUpperTriangular,
    NotAPermutation,
    ZeroOnDiagonal,
    BadBlockDiagonal,
    FinalCheckFailed,
    ResponseMismatch,
    HammingWeightExceeded,
    ClaimMismatch,
    ClaimInvalid,
    DegreeCheckFailed,
    EvaluationMismatch,
    SubprotocolFailed,
    ProtocolViolation,
};

const char* reason_name(Reason r);

/// Certified quantities carried out of an accepting run.
struct Outputs {
    std::optional<std::uint64_t> det;
    std::optional<std::uint32_t> rank;
    std::optional<std::vector<std::uint32_t>> col_profile;  // 0-based
    std::optional<std::vector<std::uint32_t>> row_profile;  // 0-based
    std::optional<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rpm_ones;
    std::optional<std::tuple<int, int, int>> signature;
    bool grp = false;
    bool equivalent = false;
};

struct Verdict {
    bool accepted = false;
    Reason reason = Reason::ProtocolViolation;
    std::uint32_t failed_step = 0;  // verifier step index of the first failing check
    Outputs outputs;

    static Verdict accept(Outputs o = {}) { return Verdict{true, Reason::None, 0, std::move(o)}; }
    static Verdict reject(Reason r, std::uint32_t step) { return Verdict{false, r, step, {}}; }
};

enum class Role : std::uint8_t { Prover, Verifier };

/// Source of verifier randomness.  Interactive runs draw from a seeded PRNG;
/// the non-interactive transform derives every draw from a hash of the input
/// and all prior prover messages.
class ChallengeSource {
public:
    virtual ~ChallengeSource() = default;
    /// Uniform element of `set`; (step, index) are domain separators.
    virtual PrimeField::Element draw(const PrimeField& f, const SampleSet& set, std::uint32_t step,
                                     std::uint32_t index) = 0;
    /// Uniform index below `bound`; used for prime selection.
    virtual std::uint64_t draw_index(std::uint64_t bound, std::uint32_t step, std::uint32_t index) = 0;
    /// Called with every prover message, in order, before further draws.
    virtual void absorb(const Message& m) {}
};

class RngChallengeSource final : public ChallengeSource {
public:
    explicit RngChallengeSource(std::uint64_t seed) : rng_(seed) {}
    PrimeField::Element draw(const PrimeField& f, const SampleSet& set, std::uint32_t,
                             std::uint32_t) override {
        return set.sample(f, rng_);
    }
    std::uint64_t draw_index(std::uint64_t bound, std::uint32_t, std::uint32_t) override {
        return rng_.uniform_below(bound);
    }

private:
    RandomSource rng_;
};

/// One protocol endpoint, stepped one message at a time.  The prover opens
/// with step(nullopt); a finished verifier holds the verdict.  Sessions
/// never see the counterpart's private state.
class Session {
public:
    virtual ~Session() = default;

    virtual ProtocolId protocol() const = 0;
    virtual Role role() const = 0;

    /// Consumes at most one inbound message, emits at most one outbound.
    virtual std::optional<Message> step(const std::optional<Message>& inbound) = 0;
    virtual bool finished() const = 0;

    /// Verifier only; set once finished.
    virtual std::optional<Verdict> verdict() const { return std::nullopt; }

    const Stats& stats() const { return stats_; }

protected:
    Stats stats_;
};

struct ProtocolPair {
    std::unique_ptr<Session> prover;
    std::unique_ptr<Session> verifier;
};

struct RunResult {
    Verdict verdict;
    Stats stats;                      // verifier-side accounting
    std::vector<Message> transcript;  // all messages in exchange order
    std::vector<Message> prover_messages;
};

/// Shuttles messages between the two sessions until the verifier finishes.
/// Throws ProtocolViolation on mismatched protocols or malformed messages
/// and Deadlock if both sessions idle before a verdict.
RunResult run_interactive(Session& prover, Session& verifier);

}  // namespace lincert
