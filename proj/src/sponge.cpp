#include "lincert/sponge.hpp"

#include <openssl/sha.h>

#include <cstring>

namespace lincert {

std::array<std::uint8_t, 32> sha256(const std::vector<std::uint8_t>& data) {
    std::array<std::uint8_t, 32> out;
    SHA256(data.data(), data.size(), out.data());
    return out;
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_bigint(std::vector<std::uint8_t>& out, const BigInt& v) {
    // sign byte then little-endian magnitude, length-prefixed
    BigInt mag = v < 0 ? BigInt(-v) : v;
    std::vector<std::uint8_t> bytes;
    while (mag > 0) {
        bytes.push_back(static_cast<std::uint8_t>(mag & 0xff));
        mag >>= 8;
    }
    out.push_back(v < 0 ? 1 : 0);
    put_u32(out, static_cast<std::uint32_t>(bytes.size()));
    out.insert(out.end(), bytes.begin(), bytes.end());
}

}  // namespace

std::vector<std::uint8_t> message_bytes(const Message& m) {
    std::vector<std::uint8_t> out;
    out.push_back(m.protocol);
    out.push_back(m.tag);
    put_u32(out, static_cast<std::uint32_t>(m.items.size()));
    for (auto v : m.items) put_u64(out, v);
    put_u32(out, static_cast<std::uint32_t>(m.rationals.size()));
    for (const auto& r : m.rationals) {
        put_bigint(out, r.num());
        put_bigint(out, r.den());
    }
    return out;
}

Sponge::Sponge(const std::array<std::uint8_t, 32>& input_digest) : state_(input_digest) {}

void Sponge::absorb_bytes(const std::vector<std::uint8_t>& data) {
    std::vector<std::uint8_t> buf(state_.begin(), state_.end());
    buf.insert(buf.end(), data.begin(), data.end());
    state_ = sha256(buf);
}

void Sponge::absorb_message(const Message& m) { absorb_bytes(message_bytes(m)); }

std::uint64_t Sponge::squeeze_below(std::uint64_t bound, std::uint32_t step, std::uint32_t index) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (std::uint32_t ctr = 0;; ++ctr) {
        std::vector<std::uint8_t> buf(state_.begin(), state_.end());
        buf.push_back('s');
        buf.push_back('q');
        put_u32(buf, step);
        put_u32(buf, index);
        put_u32(buf, ctr);
        auto block = sha256(buf);
        // four 8-byte words per block
        for (int w = 0; w < 4; ++w) {
            std::uint64_t v = 0;
            std::memcpy(&v, block.data() + 8 * w, 8);
            if (v < limit) return v % bound;
        }
    }
}

PrimeField::Element SpongeChallengeSource::draw(const PrimeField& f, const SampleSet& set,
                                                std::uint32_t step, std::uint32_t index) {
    return set.min_value() + sponge_.squeeze_below(set.size(f), step, index);
}

}  // namespace lincert
