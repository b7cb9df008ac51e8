#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "lincert/matrix_io.hpp"
#include "lincert/oracle.hpp"
#include "lincert/wire.hpp"
#include "support.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <sstream>

using namespace lincert;
using namespace lincert_test;

namespace {
PrimeField f101(101);
}

TEST_CASE("frame round trip over a pipe") {
    int fds[2];
    REQUIRE(::pipe(fds) == 0);
    FdStream reader(fds[0]), writer(fds[1]);
    RandomSource rng(61);
    for (int t = 0; t < 40; ++t) {
        Message m;
        m.protocol = static_cast<std::uint8_t>(1 + rng.uniform_below(15));
        m.tag = static_cast<std::uint8_t>(1 + rng.uniform_below(18));
        std::size_t k = rng.uniform_below(20);
        for (std::size_t i = 0; i < k; ++i) m.items.push_back(rng.next_u64());
        if (t % 3 == 0) {
            m.rationals.emplace_back(BigInt(-1234567), BigInt(890123));
            m.rationals.emplace_back(BigInt("123456789012345678901234567890"), BigInt(7));
        }
        write_frame(writer, m);
        auto back = read_frame(reader);
        REQUIRE(back);
        CHECK(back->protocol == m.protocol);
        CHECK(back->tag == m.tag);
        CHECK(back->items == m.items);
        CHECK(back->rationals.size() == m.rationals.size());
        for (std::size_t i = 0; i < m.rationals.size(); ++i)
            CHECK(back->rationals[i] == m.rationals[i]);
    }
}

TEST_CASE("unknown ids are rejected before deserialization") {
    int fds[2];
    REQUIRE(::pipe(fds) == 0);
    FdStream reader(fds[0]), writer(fds[1]);
    // protocol byte 0x66 is not assigned
    std::uint8_t raw[] = {8, 0, 0, 0, 0x66, 0x01, 0, 0, 0, 0, 0, 0, 0, 0};
    writer.write_all(raw, sizeof(raw));
    CHECK_THROWS_AS(read_frame(reader), ProtocolViolation);
}

TEST_CASE("wire runs match in-process runs exactly") {
    RandomSource rng(67);
    FMatrix a = FMatrix::random_rank(f101, 5, 6, 3, rng);
    ServedInput served;
    served.a = a;
    WireServer server("127.0.0.1", 0, std::move(served));

    for (auto id : {ProtocolId::CrpInteractive, ProtocolId::RpmFull, ProtocolId::CrpConst,
                    ProtocolId::RankLower, ProtocolId::CrpNoninteractive}) {
        for (int t = 0; t < 5; ++t) {
            Instance inst{id, a};
            VerifierOptions vopt;
            vopt.seed = 4000 + 10 * static_cast<int>(id) + t;
            RunResult remote = run_remote("127.0.0.1", server.port(), inst, vopt);
            auto pair = make_pair(inst, vopt);
            RunResult local = run_interactive(*pair.prover, *pair.verifier);
            CHECK(remote.verdict.accepted == local.verdict.accepted);
            REQUIRE(remote.transcript.size() == local.transcript.size());
            for (std::size_t i = 0; i < local.transcript.size(); ++i) {
                CHECK(remote.transcript[i].tag == local.transcript[i].tag);
                CHECK(remote.transcript[i].items == local.transcript[i].items);
            }
            CHECK(remote.stats.total_elements() == local.stats.total_elements());
            CHECK(remote.stats.rounds == local.stats.rounds);
        }
    }
    server.stop();
}

TEST_CASE("two clients run concurrently") {
    RandomSource rng(71);
    FMatrix a = FMatrix::random_nonsingular(f101, 6, rng);
    ServedInput served;
    served.a = a;
    WireServer server("127.0.0.1", 0, std::move(served));
    Instance inst{ProtocolId::Determinant, a};

    RunResult r1, r2;
    std::thread c1([&] {
        VerifierOptions vopt;
        vopt.seed = 1;
        r1 = run_remote("127.0.0.1", server.port(), inst, vopt);
    });
    std::thread c2([&] {
        VerifierOptions vopt;
        vopt.seed = 2;
        r2 = run_remote("127.0.0.1", server.port(), inst, vopt);
    });
    c1.join();
    c2.join();
    CHECK(r1.verdict.accepted);
    CHECK(r2.verdict.accepted);
    CHECK(*r1.verdict.outputs.det == oracle::det(a));
    CHECK(*r2.verdict.outputs.det == oracle::det(a));
    server.stop();
}

TEST_CASE("a mismatched hello is refused") {
    RandomSource rng(73);
    FMatrix a = FMatrix::random_nonsingular(f101, 4, rng);
    ServedInput served;
    served.a = a;
    WireServer server("127.0.0.1", 0, std::move(served));
    FMatrix other = FMatrix::random_nonsingular(f101, 5, rng);  // wrong size
    Instance inst{ProtocolId::Determinant, other};
    VerifierOptions vopt;
    CHECK_THROWS_AS(run_remote("127.0.0.1", server.port(), inst, vopt), ProtocolViolation);
    server.stop();
}

TEST_CASE("signature runs over the wire") {
    RandomSource rng(79);
    QMatrix q = random_symmetric_q(4, -3, 3, rng);
    ServedInput served;
    served.aq = q;
    WireServer server("127.0.0.1", 0, std::move(served));
    Instance inst{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
    inst.aq = q;
    VerifierOptions vopt;
    vopt.seed = 99;
    RunResult remote = run_remote("127.0.0.1", server.port(), inst, vopt);
    CHECK(remote.verdict.accepted);
    CHECK(*remote.verdict.outputs.signature == oracle::signature(q));
    server.stop();
}

TEST_CASE("matrix files round trip") {
    RandomSource rng(83);
    FMatrix a = FMatrix::random(f101, 3, 4, rng);
    std::ostringstream buf;
    buf << "lincert-matrix v1 3 4 101\n";
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 4; ++j) buf << a.at(i, j) << " ";
        buf << "\n";
    }
    std::istringstream in(buf.str());
    auto loaded = parse_matrix(in);
    REQUIRE(loaded.field_matrix);
    CHECK(*loaded.field_matrix == a);

    std::istringstream qin("lincert-matrix v1 2 2 Q\n1/2 -3\n-3 4/5\n");
    auto qloaded = parse_matrix(qin);
    REQUIRE(qloaded.rational_matrix);
    CHECK(qloaded.rational_matrix->at(0, 0) == Rational(BigInt(1), BigInt(2)));
    CHECK(qloaded.rational_matrix->at(1, 1) == Rational(BigInt(4), BigInt(5)));

    std::istringstream badin("not-a-matrix\n");
    CHECK_THROWS_AS(parse_matrix(badin), IoError);
}
