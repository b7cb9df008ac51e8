#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lincert/instance.hpp"
#include "lincert/transcript.hpp"

namespace lincert {

/// Serialized non-interactive certificate: fixed header, then the prover
/// messages in exchange order.  Verification re-derives every challenge
/// from the input digest and the message prefix, so the container is
/// self-checking against any mutation.
///
/// Layout, little-endian throughout:
///   "LCRT" | version u8 | protocol u8 | hash alg u8 | prime u64 |
///   rows u32 | cols u32 | input digest 32B | message count u32 |
///   messages (tag u8 | item count u32 | items u64* |
///             rational count u32 | rationals as two signed bigints)
struct CertificateFile {
    static constexpr std::uint8_t kVersion = 1;

    std::uint8_t version = kVersion;
    std::uint8_t protocol = 0;
    std::uint8_t hash_alg = 1;  // sha-256
    std::uint64_t prime = 0;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::array<std::uint8_t, 32> input_digest{};
    std::vector<Message> messages;

    std::vector<std::uint8_t> serialize() const;
    static CertificateFile deserialize(const std::vector<std::uint8_t>& bytes);  // BadCertificate
};

CertificateFile fiat_shamir_prove(const Instance& inst, const ProverOptions& popt = {});

/// Replays the certificate against the supplied inputs.  Throws
/// DigestMismatch when the header does not match the inputs and
/// BadCertificate on container damage; protocol-level damage comes back as
/// a rejecting verdict.
Verdict fiat_shamir_verify(const CertificateFile& cert, const Instance& inst);

}  // namespace lincert
