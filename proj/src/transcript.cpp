#include "lincert/transcript.hpp"

#include "lincert/errors.hpp"

namespace lincert {

const char* protocol_name(ProtocolId id) {
    switch (id) {
        case ProtocolId::Freivalds: return "freivalds";
        case ProtocolId::CrpNoninteractive: return "crp-ni";
        case ProtocolId::RpmNoninteractive: return "rpm-ni";
        case ProtocolId::TriEquiv: return "tri-equiv";
        case ProtocolId::Grp: return "grp";
        case ProtocolId::Ldup: return "ldup";
        case ProtocolId::RankUpper: return "rank-upper";
        case ProtocolId::RankLower: return "rank-lower";
        case ProtocolId::CrpInteractive: return "crp";
        case ProtocolId::RpmInvertible: return "rpm-inv";
        case ProtocolId::RpmFull: return "rpm";
        case ProtocolId::Signature: return "signature";
        case ProtocolId::TriEquivConst: return "tri-equiv-const";
        case ProtocolId::CrpConst: return "crp-const";
        case ProtocolId::Determinant: return "det";
    }
    return "unknown";
}

std::optional<ProtocolId> protocol_from_name(const std::string& name) {
    static const ProtocolId all[] = {
        ProtocolId::Freivalds,      ProtocolId::CrpNoninteractive, ProtocolId::RpmNoninteractive,
        ProtocolId::TriEquiv,       ProtocolId::Grp,               ProtocolId::Ldup,
        ProtocolId::RankUpper,      ProtocolId::RankLower,         ProtocolId::CrpInteractive,
        ProtocolId::RpmInvertible,  ProtocolId::RpmFull,           ProtocolId::Signature,
        ProtocolId::TriEquivConst,  ProtocolId::CrpConst,          ProtocolId::Determinant,
    };
    for (auto id : all)
        if (name == protocol_name(id)) return id;
    return std::nullopt;
}

bool is_known_protocol(std::uint8_t id) {
    return id >= 0x01 && id <= 0x0F;
}

const char* reason_name(Reason r) {
    switch (r) {
        case Reason::None: return "none";
        case Reason::FreivaldsMismatch: return "freivalds-mismatch";
        case Reason::NotRowEchelon: return "not-row-echelon";
        case Reason::NotColumnEchelon: return "not-column-echelon";
        case Reason::NotLowerTriangular: return "not-lower-triangular";
        case Reason::NotUpperTriangular: return "not-upper-triangular";
        case Reason::NotAPermutation: return "not-a-permutation";
        case Reason::ZeroOnDiagonal: return "zero-on-diagonal";
        case Reason::BadBlockDiagonal: return "bad-block-diagonal";
        case Reason::FinalCheckFailed: return "final-check-failed";
        case Reason::ResponseMismatch: return "response-mismatch";
        case Reason::HammingWeightExceeded: return "hamming-weight-exceeded";
        case Reason::ClaimMismatch: return "claim-mismatch";
        case Reason::ClaimInvalid: return "claim-invalid";
        case Reason::DegreeCheckFailed: return "degree-check-failed";
        case Reason::EvaluationMismatch: return "evaluation-mismatch";
        case Reason::SubprotocolFailed: return "subprotocol-failed";
        case Reason::ProtocolViolation: return "protocol-violation";
    }
    return "unknown";
}

RunResult run_interactive(Session& prover, Session& verifier) {
    if (prover.protocol() != verifier.protocol())
        throw ProtocolViolation("sessions disagree on the protocol id");
    if (prover.role() != Role::Prover || verifier.role() != Role::Verifier)
        throw ProtocolViolation("role mismatch");

    RunResult res;
    std::optional<Message> to_verifier = prover.step(std::nullopt);
    for (;;) {
        if (to_verifier) {
            res.transcript.push_back(*to_verifier);
            res.prover_messages.push_back(*to_verifier);
        }
        std::optional<Message> to_prover = verifier.step(to_verifier);
        if (verifier.finished()) {
            auto v = verifier.verdict();
            if (!v) throw ProtocolViolation("verifier finished without a verdict");
            res.verdict = *v;
            res.stats = verifier.stats();
            return res;
        }
        if (to_prover) res.transcript.push_back(*to_prover);
        if (!to_prover && !to_verifier) throw Deadlock();
        to_verifier = prover.step(to_prover);
        if (!to_verifier && prover.finished() && !verifier.finished())
            throw Deadlock();
    }
}

}  // namespace lincert
