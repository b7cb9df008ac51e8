#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincert/oracle.hpp"
#include "support.hpp"

using namespace lincert;
using namespace lincert_test;

namespace {
PrimeField f101(101);
}

TEST_CASE("freivalds accepts true products and catches a rank-one lie") {
    FMatrix i2 = FMatrix::identity(f101, 2);
    Instance ii{ProtocolId::Freivalds, i2};
    ii.b = i2;
    ii.c = i2;
    CHECK(run_pair(ii, 1).verdict.accepted);

    RandomSource rng(3);
    for (int t = 0; t < 20; ++t) {
        FMatrix a = FMatrix::random(f101, 8, 8, rng);
        FMatrix b = FMatrix::random(f101, 8, 8, rng);
        Instance inst{ProtocolId::Freivalds, a};
        inst.b = b;
        inst.c = a.mul(b);
        auto res = run_pair(inst, 1000 + t);
        CHECK(res.verdict.accepted);
        CHECK(res.stats.mu_count == 3);
        CHECK(res.stats.total_elements() == 0);
    }

    // acceptance of a corrupted product happens with probability about 1/|S|
    FMatrix a = FMatrix::random(f101, 4, 4, rng);
    FMatrix b = FMatrix::random(f101, 4, 4, rng);
    FMatrix c = a.mul(b);
    c.set(0, 0, f101.add(c.at(0, 0), 1));
    Instance bad{ProtocolId::Freivalds, a};
    bad.b = b;
    bad.c = c;
    int accepted = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t)
        if (run_pair(bad, 50000 + t).verdict.accepted) ++accepted;
    double rate = double(accepted) / trials;
    double p = 1.0 / 101.0;
    double sigma = std::sqrt(p * (1 - p) / trials);
    CHECK(rate <= p + 3 * sigma);

    FMatrix wrong(f101, 3, 2);
    Instance dims{ProtocolId::Freivalds, a};
    dims.b = wrong;
    dims.c = c;
    VerifierOptions vopt;
    CHECK_THROWS_AS(make_verifier(dims, vopt), DimensionMismatch);
}

TEST_CASE("rank bounds") {
    FMatrix i3 = FMatrix::identity(f101, 3);
    {
        Instance inst{ProtocolId::RankUpper, i3};
        ProverOptions popt;
        popt.rank_upper_bound = 3;
        auto res = run_pair(inst, 2, popt);
        CHECK(res.verdict.accepted);
        CHECK(res.stats.total_elements() == 6);
        CHECK(res.stats.mu_count == 2);
    }
    {
        RandomSource rng(5);
        FMatrix a = FMatrix::random_rank(f101, 4, 4, 1, rng);
        Instance inst{ProtocolId::RankUpper, a};
        ProverOptions popt;
        popt.rank_upper_bound = 1;
        auto res = run_pair(inst, 7, popt);
        CHECK(res.verdict.accepted);  // the response uses a single column
    }
    {
        Instance inst{ProtocolId::RankUpper, i3};
        ProverOptions popt;
        popt.rank_upper_bound = 2;  // false upper bound
        int rejected = 0;
        for (int t = 0; t < 200; ++t)
            if (!run_pair(inst, 100 + t, popt).verdict.accepted) ++rejected;
        CHECK(rejected >= 190);
    }
    {
        Instance inst{ProtocolId::RankLower, i3};
        ProverOptions popt;
        popt.rank_lower_cols = std::vector<std::uint32_t>{0, 1, 2};
        auto res = run_pair(inst, 11, popt);
        CHECK(res.verdict.accepted);
        CHECK(res.stats.total_elements() == 3 + 2 * 3);
        CHECK(res.stats.mu_count == 1);
    }
}

TEST_CASE("triangular equivalence, streamed") {
    RandomSource rng(13);
    for (Side side : {Side::Lower, Side::Upper}) {
        FMatrix a = FMatrix::random_nonsingular(f101, 5, rng);
        Instance same{ProtocolId::TriEquiv, a};
        same.b = a;  // the identity factor is both lower and upper
        same.side = side;
        auto res = run_pair(same, 17);
        CHECK(res.verdict.accepted);
        CHECK(res.stats.total_elements() == 2 * 5);
        CHECK(res.stats.mu_count == 2);
    }
    // rectangular, genuinely triangular factor
    FMatrix a(f101, 7, 4);
    a = FMatrix::random_rank(f101, 7, 4, 4, rng);
    FMatrix t(f101, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j <= i; ++j) t.set(i, j, 1 + rng.uniform_below(100));
    Instance inst{ProtocolId::TriEquiv, a};
    inst.b = a.mul(t);
    CHECK(run_pair(inst, 19).verdict.accepted);

    // a lower claim about an upper-shift factor is rejected with high probability
    FMatrix shift = FMatrix::identity(f101, 4);
    for (std::size_t k = 0; k + 1 < 4; ++k) shift.set(k, k + 1, 1);
    Instance lie{ProtocolId::TriEquiv, a};
    lie.b = a.mul(shift);
    int rejected = 0;
    for (int t2 = 0; t2 < 300; ++t2)
        if (!run_pair(lie, 400 + t2).verdict.accepted) ++rejected;
    double bound = 1.0 - 1.0 / 101.0;
    double sigma = std::sqrt(bound * (1 - bound) / 300.0);
    CHECK(double(rejected) / 300.0 >= bound - 3 * sigma);

    FMatrix fat(f101, 3, 5);
    Instance badshape{ProtocolId::TriEquiv, fat};
    badshape.b = fat;
    CHECK_THROWS_AS(make_prover(badshape), DimensionMismatch);
}

TEST_CASE("generic rank profile check") {
    FMatrix i5 = FMatrix::identity(f101, 5);
    Instance inst{ProtocolId::Grp, i5};
    auto res = run_pair(inst, 23);
    CHECK(res.verdict.accepted);
    CHECK(res.stats.total_elements() == 6 * 5);
    CHECK(res.stats.mu_count == 1);
    CHECK(res.verdict.outputs.grp);

    // the honest prover cannot even be built on a non-generic input
    FMatrix j2 = from_rows(f101, {{0, 1}, {1, 0}});
    Instance bad{ProtocolId::Grp, j2};
    CHECK_THROWS_AS(make_prover(bad), SingularMatrix);

    RandomSource rng(29);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng.uniform_below(8);
        Instance g{ProtocolId::Grp, FMatrix::random_grp(f101, n, rng)};
        auto r = run_pair(g, 900 + t);
        CHECK(r.verdict.accepted);
        CHECK(r.stats.total_elements() == 6 * n);
    }
}

TEST_CASE("committed-diagonal factorization protocol") {
    FMatrix d23 = from_rows(f101, {{2, 0}, {0, 3}});
    Instance inst{ProtocolId::Ldup, d23};
    auto res = run_pair(inst, 31);
    CHECK(res.verdict.accepted);
    // the committed diagonal is pinned to the unique unit-triangular split
    const Message& commit = res.transcript.front();
    CHECK(Vec(commit.items.begin() + 2, commit.items.end()) == Vec{2, 3});

    RandomSource rng(37);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng.uniform_below(8);
        Instance li{ProtocolId::Ldup, FMatrix::random_nonsingular(f101, n, rng)};
        auto r = run_pair(li, 1200 + t);
        CHECK(r.verdict.accepted);
        CHECK(r.stats.total_elements() <= 8 * n);
        CHECK(r.stats.mu_count == 1);
    }
}

TEST_CASE("determinant protocol") {
    FMatrix i4 = FMatrix::identity(f101, 4);
    {
        Instance inst{ProtocolId::Determinant, i4};
        auto res = run_pair(inst, 41);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.det == 1);
    }
    {
        FMatrix d23 = from_rows(f101, {{2, 0}, {0, 3}});
        Instance inst{ProtocolId::Determinant, d23};
        auto res = run_pair(inst, 43);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.det == 6);
    }
    {
        RandomSource rng(47);
        FMatrix a = FMatrix::random_nonsingular(f101, 8, rng);
        Instance inst{ProtocolId::Determinant, a};
        ProverOptions popt;
        popt.det_claim = f101.add(oracle::det(a), 1);
        for (int t = 0; t < 20; ++t) CHECK_FALSE(run_pair(inst, 800 + t, popt).verdict.accepted);
    }
}

TEST_CASE("non-interactive certificates") {
    FMatrix i3 = FMatrix::identity(f101, 3);
    {
        Instance inst{ProtocolId::CrpNoninteractive, i3};
        auto res = run_pair(inst, 53);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.col_profile == std::vector<std::uint32_t>{0, 1, 2});
    }
    RandomSource rng(59);
    for (int t = 0; t < 20; ++t) {
        FMatrix a = FMatrix::random_rank(f101, 6, 4, rng.uniform_below(5), rng);
        Instance inst{ProtocolId::CrpNoninteractive, a};
        auto res = run_pair(inst, 600 + t);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.col_profile == oracle::crp(a));
        Instance row{ProtocolId::CrpNoninteractive, a};
        row.row_variant = true;
        auto rres = run_pair(row, 700 + t);
        CHECK(rres.verdict.accepted);
        CHECK(*rres.verdict.outputs.row_profile == oracle::rrp(a));
    }
    {
        // tampering any factor entry trips either the structure scan or the
        // challenged product
        RandomSource rng2(61);
        FMatrix a = FMatrix::random_rank(f101, 5, 5, 3, rng2);
        Instance inst{ProtocolId::CrpNoninteractive, a};
        auto prover = make_prover(inst);
        auto commit = prover->step(std::nullopt);
        REQUIRE(commit);
        int rejected = 0, total = 0;
        for (std::size_t k = 1; k < commit->items.size(); k += 7) {
            Message mut = *commit;
            mut.items[k] = (mut.items[k] + 1) % 101;
            VerifierOptions vopt;
            vopt.seed = 1000 + k;
            auto verifier = make_verifier(inst, vopt);
            ++total;
            try {
                verifier->step(mut);
                if (!verifier->verdict()->accepted) ++rejected;
            } catch (const ProtocolViolation&) {
                ++rejected;
            }
        }
        CHECK(rejected == total);
    }
    {
        FMatrix j2 = from_rows(f101, {{0, 1}, {1, 0}});
        Instance inst{ProtocolId::RpmNoninteractive, j2};
        auto res = run_pair(inst, 67);
        CHECK(res.verdict.accepted);
        auto ones = *res.verdict.outputs.rpm_ones;
        CHECK(ones == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 0}});
    }
    for (int t = 0; t < 15; ++t) {
        FMatrix a = FMatrix::random_rank(f101, 6, 6, rng.uniform_below(6), rng);
        Instance inst{ProtocolId::RpmNoninteractive, a};
        auto res = run_pair(inst, 7100 + t);
        CHECK(res.verdict.accepted);
        FMatrix want = oracle::rpm(a);
        FMatrix got(f101, 6, 6);
        for (auto [i, j] : *res.verdict.outputs.rpm_ones) got.set(i, j, 1);
        CHECK(got == want);
    }
}

TEST_CASE("interactive column rank profile") {
    FMatrix i3 = FMatrix::identity(f101, 3);
    {
        Instance inst{ProtocolId::CrpInteractive, i3};
        auto res = run_pair(inst, 71);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.col_profile == std::vector<std::uint32_t>{0, 1, 2});
        CHECK(res.stats.total_elements() == 3 + 3 + 4 * 3);
        CHECK(res.stats.mu_count == 2);
    }
    RandomSource rng(73);
    for (int t = 0; t < 25; ++t) {
        std::size_t m = 1 + rng.uniform_below(7), n = 1 + rng.uniform_below(7);
        std::size_t r = rng.uniform_below(std::min(m, n) + 1);
        FMatrix a = FMatrix::random_rank(f101, m, n, r, rng);
        Instance inst{ProtocolId::CrpInteractive, a};
        auto res = run_pair(inst, 7300 + t);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.col_profile == oracle::crp(a));
        std::size_t expect = r == 0 ? m + n : m + n + 4 * r;
        CHECK(res.stats.total_elements() == expect);
        CHECK(res.stats.mu_count == 2);
    }
    {
        // the rank-zero claim on a nonzero input must lose
        FMatrix a = from_rows(f101, {{0, 1}, {0, 2}});
        Instance inst{ProtocolId::CrpInteractive, a};
        ProverOptions popt;
        popt.rank_lower_cols = std::vector<std::uint32_t>{};
        int rejected = 0;
        for (int t = 0; t < 100; ++t)
            if (!run_pair(inst, 7900 + t, popt).verdict.accepted) ++rejected;
        CHECK(rejected >= 95);
    }
}

TEST_CASE("rank profile matrix protocols") {
    {
        FMatrix i3 = FMatrix::identity(f101, 3);
        Instance inst{ProtocolId::RpmInvertible, i3};
        auto res = run_pair(inst, 79);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.rpm_ones ==
              std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 0}, {1, 1}, {2, 2}});
    }
    {
        FMatrix anti(f101, 3, 3);
        anti.set(0, 2, 1);
        anti.set(1, 1, 2);
        anti.set(2, 0, 3);
        Instance inst{ProtocolId::RpmInvertible, anti};
        auto res = run_pair(inst, 83);
        CHECK(res.verdict.accepted);
        FMatrix got(f101, 3, 3);
        for (auto [i, j] : *res.verdict.outputs.rpm_ones) got.set(i, j, 1);
        CHECK(got == oracle::rpm(anti));
    }
    RandomSource rng(89);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng.uniform_below(7);
        FMatrix a = FMatrix::random_nonsingular(f101, n, rng);
        Instance inst{ProtocolId::RpmInvertible, a};
        auto res = run_pair(inst, 8300 + t);
        CHECK(res.verdict.accepted);
        CHECK(res.stats.total_elements() <= 10 * n);
        FMatrix got(f101, n, n);
        for (auto [i, j] : *res.verdict.outputs.rpm_ones) got.set(i, j, 1);
        CHECK(got == oracle::rpm(a));
    }
    {
        FMatrix i3 = FMatrix::identity(f101, 3);
        Instance inst{ProtocolId::RpmFull, i3};
        auto res = run_pair(inst, 97);
        CHECK(res.verdict.accepted);
        FMatrix got(f101, 3, 3);
        for (auto [i, j] : *res.verdict.outputs.rpm_ones) got.set(i, j, 1);
        CHECK(got == i3);
    }
    for (int t = 0; t < 20; ++t) {
        std::size_t m = 1 + rng.uniform_below(7), n = 1 + rng.uniform_below(7);
        std::size_t r = rng.uniform_below(std::min(m, n) + 1);
        FMatrix a = FMatrix::random_rank(f101, m, n, r, rng);
        Instance inst{ProtocolId::RpmFull, a};
        auto res = run_pair(inst, 9700 + t);
        CHECK(res.verdict.accepted);
        FMatrix got(f101, m, n);
        for (auto [i, j] : *res.verdict.outputs.rpm_ones) got.set(i, j, 1);
        CHECK(got == oracle::rpm(a));
        CHECK(*res.verdict.outputs.col_profile == oracle::crp(a));
        CHECK(*res.verdict.outputs.row_profile == oracle::rrp(a));
        std::size_t mn = std::min(m, n), mx = std::max(m, n);
        std::size_t expect = r == 0 ? mn + mx : 2 * mn + mx + 17 * r - 6;
        CHECK(res.stats.total_elements() == expect);
        CHECK(res.stats.mu_count <= 4);
    }
    // a wide rank-3 input certifies the same profile matrix as the oracle
    FMatrix wide = FMatrix::random_rank(f101, 5, 7, 3, rng);
    Instance wi{ProtocolId::RpmFull, wide};
    auto wres = run_pair(wi, 101);
    CHECK(wres.verdict.accepted);
    FMatrix got(f101, 5, 7);
    for (auto [i, j] : *wres.verdict.outputs.rpm_ones) got.set(i, j, 1);
    CHECK(got == oracle::rpm(wide));
}

TEST_CASE("constant-round triangular equivalence") {
    RandomSource rng(103);
    FMatrix a = FMatrix::random_nonsingular(f101, 6, rng);
    {
        Instance inst{ProtocolId::TriEquivConst, a};
        inst.b = a;  // identity factor
        auto res = run_pair(inst, 107);
        CHECK(res.verdict.accepted);
        CHECK(res.stats.total_elements() == 3 * 6 + 1);
        CHECK(res.stats.rounds == 3);
        // with the identity factor, the committed polynomial is the constant
        // sum of the challenge diagonal
        const Message& d_msg = res.transcript[1];
        const Message& g_msg = res.transcript[2];
        PrimeField::Element sum = 0;
        for (auto v : d_msg.items) sum = f101.add(sum, v);
        CHECK(g_msg.items[0] == sum);
        for (std::size_t k = 1; k < g_msg.items.size(); ++k) CHECK(g_msg.items[k] == 0);
    }
    for (Side side : {Side::Lower, Side::Upper}) {
        FMatrix t(f101, 6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                auto v = 1 + rng.uniform_below(100);
                if (side == Side::Lower)
                    t.set(i, j, v);
                else
                    t.set(j, i, v);
            }
        Instance inst{ProtocolId::TriEquivConst, a};
        inst.b = a.mul(t);
        inst.side = side;
        auto res = run_pair(inst, 109);
        CHECK(res.verdict.accepted);
        CHECK(res.stats.total_elements() == 3 * 6 + 1);
    }
}

TEST_CASE("constant-round column rank profile") {
    {
        FMatrix i3 = FMatrix::identity(f101, 3);
        Instance inst{ProtocolId::CrpConst, i3};
        auto res = run_pair(inst, 113);
        CHECK(res.verdict.accepted);
        CHECK(res.stats.rounds == 3);
        CHECK(res.stats.total_elements() == 3 + 3 + 5 * 3 + 1);
        CHECK(*res.verdict.outputs.col_profile == std::vector<std::uint32_t>{0, 1, 2});
    }
    RandomSource rng(127);
    for (int t = 0; t < 25; ++t) {
        std::size_t m = 2 + rng.uniform_below(6), n = 2 + rng.uniform_below(6);
        std::size_t r = 1 + rng.uniform_below(std::min(m, n));
        FMatrix a = FMatrix::random_rank(f101, m, n, r, rng);
        Instance inst{ProtocolId::CrpConst, a};
        auto res = run_pair(inst, 11300 + t);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.col_profile == oracle::crp(a));
        CHECK(res.stats.total_elements() == m + n + 5 * r + 1);
        CHECK(res.stats.rounds == 3);
        CHECK(res.stats.mu_count == 2);
    }
}

TEST_CASE("signature protocol") {
    {
        QMatrix d(2, 2);
        d.set(0, 0, Rational(1));
        d.set(1, 1, Rational(-1));
        Instance inst{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
        inst.aq = d;
        auto res = run_pair(inst, 131);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.signature == std::tuple<int, int, int>(1, 1, 0));
    }
    {
        QMatrix j(2, 2);
        j.set(0, 1, Rational(1));
        j.set(1, 0, Rational(1));
        Instance inst{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
        inst.aq = j;
        auto res = run_pair(inst, 137);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.signature == std::tuple<int, int, int>(1, 1, 0));
    }
    RandomSource rng(139);
    for (int t = 0; t < 15; ++t) {
        QMatrix a = random_symmetric_q(6, -5, 5, rng);
        Instance inst{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
        inst.aq = a;
        auto res = run_pair(inst, 13900 + t);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.signature == oracle::signature(a));
    }
    {
        QMatrix ns(2, 2);
        ns.set(0, 1, Rational(1));  // not symmetric
        Instance inst{ProtocolId::Signature, FMatrix(PrimeField(), 0, 0)};
        inst.aq = ns;
        CHECK_THROWS_AS(make_prover(inst), NotSymmetric);
    }
}

TEST_CASE("degenerate sizes run with empty loops") {
    FMatrix one(f101, 1, 1);
    one.set(0, 0, 5);
    for (auto id : {ProtocolId::Grp, ProtocolId::Ldup, ProtocolId::Determinant,
                    ProtocolId::RpmInvertible, ProtocolId::CrpInteractive, ProtocolId::RpmFull,
                    ProtocolId::RankUpper, ProtocolId::RankLower, ProtocolId::CrpConst}) {
        Instance inst{id, one};
        auto res = run_pair(inst, 149);
        CHECK(res.verdict.accepted);
    }
    FMatrix zero1(f101, 1, 1);
    for (auto id : {ProtocolId::CrpInteractive, ProtocolId::RpmFull, ProtocolId::CrpConst}) {
        Instance inst{id, zero1};
        auto res = run_pair(inst, 151);
        CHECK(res.verdict.accepted);
        CHECK(*res.verdict.outputs.rank == 0);
    }
}
