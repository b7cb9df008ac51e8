#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lincert/transcript.hpp"

namespace lincert {

std::array<std::uint8_t, 32> sha256(const std::vector<std::uint8_t>& data);

/// Hash-chain sponge: state <- H(state || data) on absorb; draws squeeze
/// counter-mode blocks H(state || "sq" || step || index || ctr) and
/// rejection-sample 8-byte words, so every challenge is uniform and fully
/// determined by the input digest and the prover messages seen so far.
class Sponge {
public:
    static constexpr std::uint8_t kHashAlgSha256 = 0x01;

    explicit Sponge(const std::array<std::uint8_t, 32>& input_digest);

    void absorb_bytes(const std::vector<std::uint8_t>& data);
    void absorb_message(const Message& m);

    std::uint64_t squeeze_below(std::uint64_t bound, std::uint32_t step, std::uint32_t index);

private:
    std::array<std::uint8_t, 32> state_;
};

class SpongeChallengeSource final : public ChallengeSource {
public:
    explicit SpongeChallengeSource(const std::array<std::uint8_t, 32>& input_digest)
        : sponge_(input_digest) {}

    PrimeField::Element draw(const PrimeField& f, const SampleSet& set, std::uint32_t step,
                             std::uint32_t index) override;
    std::uint64_t draw_index(std::uint64_t bound, std::uint32_t step, std::uint32_t index) override {
        return sponge_.squeeze_below(bound, step, index);
    }
    void absorb(const Message& m) override { sponge_.absorb_message(m); }

private:
    Sponge sponge_;
};

/// Canonical byte serialization of a message (also used for input digests).
std::vector<std::uint8_t> message_bytes(const Message& m);

}  // namespace lincert
