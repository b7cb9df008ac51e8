#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincert/field.hpp"
#include "lincert/random.hpp"
#include "lincert/rational.hpp"

using namespace lincert;

TEST_CASE("field arithmetic basics") {
    PrimeField f7(7);
    CHECK(f7.add(3, 5) == 1);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.mul(3, f7.inv(3)) == 1);
    CHECK(f7.sub(2, 5) == 4);
    CHECK(f7.neg(0) == 0);
    CHECK(f7.pow(3, 6) == 1);  // little Fermat
    CHECK_THROWS_AS(f7.inv(0), DivisionByZero);
    CHECK_THROWS_AS(f7.div(3, 0), DivisionByZero);

    PrimeField f101(101);
    RandomSource rng(1);
    for (int t = 0; t < 100; ++t) {
        auto a = SampleSet::nonzero().sample(f101, rng);
        CHECK(f101.mul(a, f101.inv(a)) == 1);
    }
}

TEST_CASE("field axioms on random triples") {
    PrimeField f(2147483647ull);
    RandomSource rng(7);
    auto whole = SampleSet::whole_field();
    for (int t = 0; t < 10000; ++t) {
        auto a = whole.sample(f, rng), b = whole.sample(f, rng), c = whole.sample(f, rng);
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, f.neg(a)) == 0);
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(PrimeField(91), NotPrime);   // 7 * 13
    CHECK_THROWS_AS(PrimeField(1), NotPrime);
    CHECK_THROWS_AS(PrimeField(1ull << 62), NotPrime);
    CHECK(PrimeField(2).modulus() == 2);  // needed for the exhaustive profile tests
    CHECK(PrimeField(3).modulus() == 3);
}

TEST_CASE("sampling sets") {
    PrimeField f7(7);
    RandomSource rng(3);
    auto whole = SampleSet::whole_field();
    auto nz = SampleSet::nonzero();
    for (int t = 0; t < 200; ++t) {
        CHECK(whole.sample(f7, rng) < 7);
        auto v = nz.sample(f7, rng);
        CHECK(v >= 1);
        CHECK(v < 7);
    }
    CHECK(whole.size(f7) == 7);
    CHECK(nz.size(f7) == 6);
    auto rg = SampleSet::range(2, 5);
    for (int t = 0; t < 50; ++t) {
        auto v = rg.sample(f7, rng);
        CHECK(v >= 2);
        CHECK(v < 5);
    }
}

TEST_CASE("sampling reproducibility") {
    PrimeField f(101);
    auto set = SampleSet::whole_field();
    RandomSource a(12345), b(12345);
    for (int t = 0; t < 1000; ++t) CHECK(set.sample(f, a) == set.sample(f, b));
}

TEST_CASE("random primes") {
    RandomSource rng(9);
    for (int t = 0; t < 20; ++t) {
        auto p = random_prime(8, {}, rng);
        CHECK(p >= 128);
        CHECK(p < 256);
        CHECK(is_prime_u64(p));
    }
    for (int t = 0; t < 20; ++t) CHECK(random_prime(8, {251}, rng) != 251);
    for (int t = 0; t < 8; ++t) {
        auto p = random_prime(31, {}, rng);
        // trial division oracle
        bool prime = p > 1;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        CHECK(prime);
    }
    CHECK_THROWS_AS(random_prime(63, {}, rng), Error);
}

TEST_CASE("rationals") {
    Rational half(BigInt(1), BigInt(2)), third(BigInt(1), BigInt(3));
    CHECK((half + third) == Rational(BigInt(5), BigInt(6)));
    CHECK(Rational(BigInt(2), BigInt(4)) == half);  // reduction
    CHECK(Rational(BigInt(3), BigInt(-6)) == Rational(BigInt(-1), BigInt(2)));
    Rational ab(BigInt(7), BigInt(4));
    CHECK((ab * ab.inv()) == Rational(1));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK(Rational::parse("-3/9").str() == "-1/3");

    // cross-multiplication identity on random pairs
    RandomSource rng(11);
    for (int t = 0; t < 500; ++t) {
        long a = static_cast<long>(rng.uniform_below(2000)) - 1000;
        long b = 1 + static_cast<long>(rng.uniform_below(999));
        long c = static_cast<long>(rng.uniform_below(2000)) - 1000;
        long d = 1 + static_cast<long>(rng.uniform_below(999));
        bool eq = Rational(BigInt(a), BigInt(b)) == Rational(BigInt(c), BigInt(d));
        CHECK(eq == (BigInt(a) * d == BigInt(c) * b));
    }

    PrimeField f7(7);
    CHECK(half.mod(f7) == f7.mul(1, f7.inv(2)));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(7)).mod(f7), BadPrime);
}
