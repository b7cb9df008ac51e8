#pragma once

#include <memory>

#include "lincert/errors.hpp"
#include "lincert/instance.hpp"
#include "lincert/linalg.hpp"
#include "lincert/transcript.hpp"

namespace lincert {
namespace detail {

inline Message msg(ProtocolId id, std::uint8_t tag, std::vector<std::uint64_t> items = {}) {
    Message m;
    m.protocol = static_cast<std::uint8_t>(id);
    m.tag = tag;
    m.items = std::move(items);
    return m;
}

class ProverBase : public Session {
public:
    Role role() const final { return Role::Prover; }
    bool finished() const final { return done_; }

protected:
    void expect(const std::optional<Message>& in, std::uint8_t tag, std::size_t items,
                std::size_t rationals = 0) const {
        if (!in) throw ProtocolViolation("prover expected a message");
        if (in->protocol != static_cast<std::uint8_t>(protocol()))
            throw ProtocolViolation("message for a different protocol");
        if (in->tag != tag) throw ProtocolViolation("unexpected message tag");
        if (in->items.size() != items || in->rationals.size() != rationals)
            throw ProtocolViolation("bad payload length");
    }
    void count_recv(std::size_t k) { stats_.elements_received += k; }
    void count_sent(std::size_t k) { stats_.elements_sent += k; }

    bool done_ = false;
    std::uint32_t step_ = 0;
};

class VerifierBase : public Session {
public:
    Role role() const final { return Role::Verifier; }
    bool finished() const final { return verdict_.has_value(); }
    std::optional<Verdict> verdict() const final { return verdict_; }

protected:
    explicit VerifierBase(std::shared_ptr<ChallengeSource> src, SampleSet set)
        : source_(std::move(src)), set_(set) {}

    /// Absorb + validate one prover message.
    const Message& take(const std::optional<Message>& in, std::uint8_t tag, std::size_t items,
                        std::size_t rationals = 0) {
        if (!in) throw ProtocolViolation("verifier expected a message");
        if (in->protocol != static_cast<std::uint8_t>(protocol()))
            throw ProtocolViolation("message for a different protocol");
        if (in->tag != tag) throw ProtocolViolation("unexpected message tag");
        if (in->items.size() != items || in->rationals.size() != rationals)
            throw ProtocolViolation("bad payload length");
        source_->absorb(*in);
        return *in;
    }

    /// take() for payloads of field elements: every item must already be a
    /// canonical residue, so congruent-but-larger encodings are rejected.
    const Message& take_elems(const std::optional<Message>& in, std::uint8_t tag,
                              std::size_t items, const PrimeField& f) {
        const Message& m = take(in, tag, items);
        for (auto v : m.items)
            if (v >= f.modulus()) throw ProtocolViolation("non-canonical residue");
        return m;
    }

    /// Index payloads: strictly increasing 0-based positions below bound.
    static bool valid_index_list(const std::vector<std::uint64_t>& items, std::size_t offset,
                                 std::size_t count, std::uint64_t bound) {
        std::uint64_t prev = 0;
        for (std::size_t k = 0; k < count; ++k) {
            std::uint64_t v = items[offset + k];
            if (v >= bound || (k > 0 && v <= prev)) return false;
            prev = v;
        }
        return true;
    }

    /// Permutation payloads, validated before any narrowing.
    static bool valid_perm_items(const std::vector<std::uint64_t>& items, std::size_t offset,
                                 std::size_t count) {
        std::vector<bool> seen(count, false);
        for (std::size_t k = 0; k < count; ++k) {
            std::uint64_t v = items[offset + k];
            if (v >= count || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }

    PrimeField::Element chal(const PrimeField& f, std::uint32_t index = 0) {
        return source_->draw(f, set_, step_, index);
    }
    PrimeField::Element chal_nonzero(const PrimeField& f, std::uint32_t index = 0) {
        return source_->draw(f, set_.without_zero(), step_, index);
    }

    /// matvec/vecmat with the verifier's cost meter running.
    Vec mu_matvec(const FMatrix& a, const Vec& v) {
        ++stats_.mu_count;
        return a.matvec(v);
    }
    Vec mu_vecmat(const FMatrix& a, const Vec& u) {
        ++stats_.mu_count;
        return a.vecmat(u);
    }

    void count_recv(std::size_t k) { stats_.elements_received += k; }
    void count_sent(std::size_t k) { stats_.elements_sent += k; }
    /// Opening commitment and every challenge burst after a receipt.
    void count_round() { ++stats_.rounds; }

    std::optional<Message> finish_accept(Outputs o = {}) {
        verdict_ = Verdict::accept(std::move(o));
        return std::nullopt;
    }
    std::optional<Message> finish_reject(Reason r) {
        verdict_ = Verdict::reject(r, step_);
        return std::nullopt;
    }

    std::shared_ptr<ChallengeSource> source_;
    SampleSet set_;
    std::optional<Verdict> verdict_;
    std::uint32_t step_ = 0;
};

/// Sample-set floor shared by the verifier constructors.
inline void require_sample_size(const PrimeField& f, const SampleSet& set, std::uint64_t minimum,
                                const char* protocol) {
    if (set.size(f) < minimum)
        throw SecurityLevelTooLow(std::string(protocol) + ": sample set smaller than the soundness bound needs");
}

}  // namespace detail
}  // namespace lincert
