#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincert/oracle.hpp"
#include "support.hpp"

using namespace lincert;
using namespace lincert_test;

namespace {

Instance grp_instance(std::uint64_t seed) {
    PrimeField f(101);
    RandomSource rng(seed);
    return Instance{ProtocolId::Grp, FMatrix::random_grp(f, 5, rng)};
}

}  // namespace

TEST_CASE("runner rejects mismatched sessions") {
    PrimeField f(101);
    RandomSource rng(61);
    FMatrix a = FMatrix::random_grp(f, 4, rng);
    FMatrix b = FMatrix::random_nonsingular(f, 4, rng);
    Instance gi{ProtocolId::Grp, a};
    Instance li{ProtocolId::Ldup, b};
    VerifierOptions vopt;
    auto gp = make_prover(gi);
    auto lv = make_verifier(li, vopt);
    CHECK_THROWS_AS(run_interactive(*gp, *lv), ProtocolViolation);
}

TEST_CASE("replay determinism") {
    Instance inst = grp_instance(71);
    auto r1 = run_pair(inst, 123);
    auto r2 = run_pair(inst, 123);
    CHECK(r1.verdict.accepted);
    CHECK(r1.transcript.size() == r2.transcript.size());
    for (std::size_t i = 0; i < r1.transcript.size(); ++i) {
        CHECK(r1.transcript[i].tag == r2.transcript[i].tag);
        CHECK(r1.transcript[i].items == r2.transcript[i].items);
    }
    CHECK(r1.stats.elements_sent == r2.stats.elements_sent);
    CHECK(r1.stats.elements_received == r2.stats.elements_received);
    CHECK(r1.stats.rounds == r2.stats.rounds);
    CHECK(r1.stats.mu_count == r2.stats.mu_count);
    // a different seed moves the challenges
    auto r3 = run_pair(inst, 124);
    bool all_same = true;
    for (std::size_t i = 0; i < r1.transcript.size() && all_same; ++i)
        all_same = r1.transcript[i].items == r3.transcript[i].items;
    CHECK_FALSE(all_same);
}

TEST_CASE("malformed messages are protocol violations") {
    Instance inst = grp_instance(73);
    auto prover = make_prover(inst);
    VerifierOptions vopt;
    auto verifier = make_verifier(inst, vopt);
    auto commit = prover->step(std::nullopt);
    REQUIRE(commit);
    Message bad = *commit;
    bad.tag = 0x3f;
    CHECK_THROWS_AS(verifier->step(bad), ProtocolViolation);
    auto verifier2 = make_verifier(inst, vopt);
    Message wrong_len = *commit;
    wrong_len.items.push_back(1);
    CHECK_THROWS_AS(verifier2->step(wrong_len), ProtocolViolation);
}

TEST_CASE("session stats are monotone during a run") {
    Instance inst = grp_instance(79);
    auto prover = make_prover(inst);
    VerifierOptions vopt;
    vopt.seed = 5;
    auto verifier = make_verifier(inst, vopt);
    Stats prev;
    std::optional<Message> to_verifier = prover->step(std::nullopt);
    for (;;) {
        auto out = verifier->step(to_verifier);
        const Stats& s = verifier->stats();
        CHECK(s.elements_sent >= prev.elements_sent);
        CHECK(s.elements_received >= prev.elements_received);
        CHECK(s.rounds >= prev.rounds);
        CHECK(s.mu_count >= prev.mu_count);
        prev = s;
        if (verifier->finished()) break;
        to_verifier = prover->step(out);
    }
    CHECK(verifier->verdict()->accepted);
}

TEST_CASE("first failing check is reported") {
    PrimeField f(101);
    RandomSource rng(83);
    FMatrix a = FMatrix::random_nonsingular(f, 4, rng);
    Instance inst{ProtocolId::Ldup, a};
    // tamper the commitment so the diagonal check (an early check) fires
    auto prover = make_prover(inst);
    VerifierOptions vopt;
    auto verifier = make_verifier(inst, vopt);
    auto commit = prover->step(std::nullopt);
    REQUIRE(commit);
    commit->items[4] = 0;  // zero the first diagonal slot
    verifier->step(commit);
    REQUIRE(verifier->finished());
    CHECK_FALSE(verifier->verdict()->accepted);
    CHECK(verifier->verdict()->reason == Reason::ZeroOnDiagonal);
}

TEST_CASE("verifier constructor enforces the sample-set floor") {
    PrimeField tiny(11);
    RandomSource rng(89);
    FMatrix a = FMatrix::random_nonsingular(tiny, 8, rng);
    Instance inst{ProtocolId::TriEquivConst, a};
    inst.b = a;
    VerifierOptions vopt;  // |S| = 11 <= 2(n-1) = 14
    CHECK_THROWS_AS(make_verifier(inst, vopt), SecurityLevelTooLow);
}
