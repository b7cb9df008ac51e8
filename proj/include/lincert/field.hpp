#pragma once

#include <cstdint>
#include <vector>

#include "lincert/errors.hpp"

namespace lincert {

/// Residue arithmetic modulo a word-size prime.  Elements are canonical
/// residues in [0, p) stored as plain uint64_t; all operations go through
/// the field object, so one matrix or session can run modulo any prime
/// chosen at runtime (the signature certificate switches primes mid-run).
class PrimeField {
public:
    using Element = std::uint64_t;

    static constexpr std::uint64_t kDefaultModulus = 2147483647ull;  // 2^31 - 1

    explicit PrimeField(std::uint64_t p);
    PrimeField() : PrimeField(kDefaultModulus) {}

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }

    Element reduce_u64(std::uint64_t v) const { return v % p_; }
    Element reduce_i64(std::int64_t v) const;

    Element add(Element a, Element b) const {
        Element s = a + b;  // p < 2^62, no overflow
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<__uint128_t>(a) * b % p_);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const;

    bool is_zero(Element a) const { return a == 0; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint64_t p_;
};

/// Deterministic Miller-Rabin, exact for all inputs below 2^64.
bool is_prime_u64(std::uint64_t n);

class RandomSource;

/// Subset of the field that challenges are drawn from.  Soundness bounds in
/// every protocol degrade as 1/|S|, so callers pick the set per protocol.
class SampleSet {
public:
    enum class Kind { WholeField, NonZero, Range };

    static SampleSet whole_field() { return SampleSet(Kind::WholeField, 0, 0); }
    static SampleSet nonzero() { return SampleSet(Kind::NonZero, 0, 0); }
    /// Half-open range [lo, hi) of residues.
    static SampleSet range(std::uint64_t lo, std::uint64_t hi);

    Kind kind() const { return kind_; }
    std::uint64_t size(const PrimeField& f) const;
    /// Smallest residue in the set; all three kinds are contiguous ranges.
    std::uint64_t min_value() const { return kind_ == Kind::NonZero ? 1 : (kind_ == Kind::Range ? lo_ : 0); }
    bool contains_zero() const { return min_value() == 0; }

    /// Excludes zero from this set (used where an invertible challenge is required).
    SampleSet without_zero() const;

    PrimeField::Element sample(const PrimeField& f, RandomSource& rng) const;

private:
    SampleSet(Kind k, std::uint64_t lo, std::uint64_t hi) : kind_(k), lo_(lo), hi_(hi) {}
    Kind kind_;
    std::uint64_t lo_, hi_;
};

/// Draws a prime of exactly `bits` bits, not in `excluded`.  Throws Exhausted
/// after a bounded number of attempts.
std::uint64_t random_prime(unsigned bits, const std::vector<std::uint64_t>& excluded,
                           RandomSource& rng);

}  // namespace lincert
