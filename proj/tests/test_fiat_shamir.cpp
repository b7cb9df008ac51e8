#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincert/certificate_file.hpp"
#include "lincert/oracle.hpp"
#include "support.hpp"

using namespace lincert;
using namespace lincert_test;

namespace {

PrimeField f101(101);

std::vector<Instance> sample_instances(std::uint64_t seed) {
    RandomSource rng(seed);
    std::vector<Instance> out;
    FMatrix a = FMatrix::random_nonsingular(f101, 5, rng);
    FMatrix g = FMatrix::random_grp(f101, 5, rng);
    FMatrix r = FMatrix::random_rank(f101, 5, 6, 3, rng);
    FMatrix b = FMatrix::random(f101, 5, 5, rng);
    FMatrix t(f101, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j <= i; ++j) t.set(i, j, 1 + rng.uniform_below(100));

    {
        Instance i{ProtocolId::Freivalds, a};
        i.b = b;
        i.c = a.mul(b);
        out.push_back(i);
    }
    out.push_back(Instance{ProtocolId::RankUpper, r});
    out.push_back(Instance{ProtocolId::RankLower, r});
    {
        Instance i{ProtocolId::TriEquiv, a};
        i.b = a.mul(t);
        out.push_back(i);
    }
    out.push_back(Instance{ProtocolId::Grp, g});
    out.push_back(Instance{ProtocolId::Ldup, a});
    out.push_back(Instance{ProtocolId::Determinant, a});
    out.push_back(Instance{ProtocolId::CrpNoninteractive, r});
    out.push_back(Instance{ProtocolId::RpmNoninteractive, r});
    out.push_back(Instance{ProtocolId::CrpInteractive, r});
    out.push_back(Instance{ProtocolId::RpmInvertible, a});
    out.push_back(Instance{ProtocolId::RpmFull, r});
    {
        Instance i{ProtocolId::TriEquivConst, a};
        i.b = a.mul(t);
        out.push_back(i);
    }
    out.push_back(Instance{ProtocolId::CrpConst, r});
    {
        Instance i{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
        i.aq = random_symmetric_q(4, -4, 4, rng);
        out.push_back(i);
    }
    return out;
}

}  // namespace

TEST_CASE("round trip on every protocol") {
    for (const auto& inst : sample_instances(17)) {
        CAPTURE(protocol_name(inst.id));
        auto cert = fiat_shamir_prove(inst);
        auto verdict = fiat_shamir_verify(cert, inst);
        CHECK(verdict.accepted);
        // serialize / deserialize identity
        auto bytes = cert.serialize();
        auto back = CertificateFile::deserialize(bytes);
        CHECK(back.serialize() == bytes);
        CHECK(fiat_shamir_verify(back, inst).accepted);
    }
}

TEST_CASE("proving is byte-deterministic") {
    for (const auto& inst : sample_instances(19)) {
        auto c1 = fiat_shamir_prove(inst);
        auto c2 = fiat_shamir_prove(inst);
        CHECK(c1.serialize() == c2.serialize());
    }
}

TEST_CASE("any payload flip is rejected") {
    for (const auto& inst : sample_instances(23)) {
        CAPTURE(protocol_name(inst.id));
        auto cert = fiat_shamir_prove(inst);
        if (cert.messages.empty() || cert.messages[0].items.empty()) {
            // the product check has an empty opening; nothing to flip here
            continue;
        }
        auto mutated = cert;
        mutated.messages[0].items[0] =
            (mutated.messages[0].items[0] + 1) % inst.a.field().modulus();
        auto verdict = fiat_shamir_verify(mutated, inst);
        CHECK_FALSE(verdict.accepted);
    }
}

TEST_CASE("single-byte mutations are rejected") {
    RandomSource rng(29);
    FMatrix a = FMatrix::random_nonsingular(f101, 5, rng);
    Instance inst{ProtocolId::RpmInvertible, a};
    auto bytes = fiat_shamir_prove(inst).serialize();
    int rejected = 0, total = 0;
    RandomSource pick(31);
    for (int t = 0; t < 120; ++t) {
        auto mut = bytes;
        std::size_t pos = pick.uniform_below(mut.size());
        std::uint8_t delta = 1 + static_cast<std::uint8_t>(pick.uniform_below(255));
        mut[pos] ^= delta;
        ++total;
        try {
            auto c = CertificateFile::deserialize(mut);
            if (!fiat_shamir_verify(c, inst).accepted) ++rejected;
        } catch (const Error&) {
            ++rejected;
        }
    }
    CHECK(rejected == total);
}

TEST_CASE("certificates bind to their inputs") {
    RandomSource rng(37);
    FMatrix a = FMatrix::random_nonsingular(f101, 4, rng);
    FMatrix other = FMatrix::random_nonsingular(f101, 4, rng);
    Instance inst{ProtocolId::Determinant, a};
    auto cert = fiat_shamir_prove(inst);
    Instance wrong{ProtocolId::Determinant, other};
    CHECK_THROWS_AS(fiat_shamir_verify(cert, wrong), DigestMismatch);
    Instance wrong_proto{ProtocolId::Ldup, a};
    CHECK_THROWS_AS(fiat_shamir_verify(cert, wrong_proto), DigestMismatch);
}
