#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincert/oracle.hpp"
#include "support.hpp"

using namespace lincert;
using namespace lincert_test;

TEST_CASE("rank and profiles on pinned inputs") {
    PrimeField f7(7);
    FMatrix z3(f7, 3, 3);
    CHECK(oracle::rank(z3) == 0);
    CHECK(oracle::rank(FMatrix::identity(f7, 4)) == 4);
    CHECK(oracle::rank(from_rows(f7, {{1, 2}, {2, 4}})) == 1);  // proportional rows
    CHECK(oracle::crp(FMatrix::identity(f7, 3)) == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(oracle::crp(from_rows(f7, {{0, 1}, {0, 2}})) == std::vector<std::uint32_t>{1});
    CHECK(oracle::det(from_rows(f7, {{2, 0}, {0, 3}})) == 6);
    CHECK_FALSE(oracle::grp(from_rows(f7, {{0, 1}, {1, 0}})));
    CHECK(oracle::rpm(FMatrix::identity(f7, 2)) == FMatrix::identity(f7, 2));
    FMatrix j2 = from_rows(f7, {{0, 1}, {1, 0}});
    CHECK(oracle::rpm(j2) == j2);
}

TEST_CASE("oracle self-consistency") {
    PrimeField f(101);
    RandomSource rng(51);
    for (int t = 0; t < 100; ++t) {
        std::size_t m = 1 + rng.uniform_below(6), n = 1 + rng.uniform_below(6);
        std::size_t r = rng.uniform_below(std::min(m, n) + 1);
        FMatrix a = FMatrix::random_rank(f, m, n, r, rng);
        auto crp = oracle::crp(a);
        auto rrp = oracle::rrp(a);
        std::size_t rank = oracle::rank(a);
        CHECK(crp.size() == rank);
        CHECK(rrp.size() == rank);
        CHECK(rrp == oracle::crp(a.transpose()));  // transpose duality
        FMatrix rpm = oracle::rpm(a);
        std::size_t ones = 0;
        std::vector<std::uint32_t> row_support, col_support;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rpm.at(i, j)) {
                    ++ones;
                    row_support.push_back(static_cast<std::uint32_t>(i));
                    col_support.push_back(static_cast<std::uint32_t>(j));
                }
        CHECK(ones == rank);
        std::sort(row_support.begin(), row_support.end());
        std::sort(col_support.begin(), col_support.end());
        CHECK(row_support == rrp);  // supports are the two profiles
        CHECK(col_support == crp);
    }
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng.uniform_below(6);
        FMatrix a = FMatrix::random(f, n, n, rng);
        CHECK((oracle::det(a) != 0) == (oracle::rank(a) == n));
    }
}

TEST_CASE("rank profile matrix definition holds entrywise") {
    PrimeField f(101);
    RandomSource rng(53);
    for (int t = 0; t < 25; ++t) {
        FMatrix a = FMatrix::random_rank(f, 5, 5, rng.uniform_below(6), rng);
        FMatrix r = oracle::rpm(a);
        std::vector<std::uint32_t> ri, ci;
        for (std::size_t i = 1; i <= 5; ++i) {
            ri.push_back(static_cast<std::uint32_t>(i - 1));
            ci.clear();
            for (std::size_t j = 1; j <= 5; ++j) {
                ci.push_back(static_cast<std::uint32_t>(j - 1));
                CHECK(oracle::rank(a.submatrix(ri, ci)) == oracle::rank(r.submatrix(ri, ci)));
            }
        }
    }
}

TEST_CASE("signature oracle") {
    {
        QMatrix d(3, 3);
        d.set(0, 0, Rational(1));
        d.set(1, 1, Rational(-1));
        CHECK(oracle::signature(d) == std::tuple<int, int, int>(1, 1, 1));
    }
    {
        QMatrix j(2, 2);
        j.set(0, 1, Rational(1));
        j.set(1, 0, Rational(1));
        CHECK(oracle::signature(j) == std::tuple<int, int, int>(1, 1, 0));  // eigenvalues +-1
    }
    // congruence invariance: signature(G^T D G) == signature(D) for random G
    RandomSource rng(57);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng.uniform_below(3);
        QMatrix d(n, n);
        int pos = 0, neg = 0, zero = 0;
        for (std::size_t i = 0; i < n; ++i) {
            int pick = static_cast<int>(rng.uniform_below(3));
            d.set(i, i, Rational(pick == 0 ? 1 : (pick == 1 ? -2 : 0)));
            (pick == 0 ? pos : pick == 1 ? neg : zero) += 1;
        }
        QMatrix g(n, n);
        for (;;) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    g.set(i, j, Rational(BigInt(static_cast<long>(rng.uniform_below(7)) - 3)));
            if (oracle::rank_q(g) == n) break;
        }
        QMatrix congruent = g.transpose().mul(d).mul(g);
        CHECK(oracle::signature(congruent) == std::tuple<int, int, int>(pos, neg, zero));
    }
}
