#include "lincert/field.hpp"

#include "lincert/random.hpp"

namespace lincert {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set exact below 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 62)) throw NotPrime("modulus does not fit in 62 bits");
    if (!is_prime_u64(p)) throw NotPrime("modulus is not prime");
}

PrimeField::Element PrimeField::reduce_i64(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw DivisionByZero();
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
    return powmod_u64(a, e, p_);
}

SampleSet SampleSet::range(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo + 2) throw Error("sample set needs at least two elements");
    return SampleSet(Kind::Range, lo, hi);
}

std::uint64_t SampleSet::size(const PrimeField& f) const {
    switch (kind_) {
        case Kind::WholeField:
            return f.modulus();
        case Kind::NonZero:
            return f.modulus() - 1;
        case Kind::Range:
            return hi_ > f.modulus() ? f.modulus() - lo_ : hi_ - lo_;
    }
    return 0;
}

SampleSet SampleSet::without_zero() const {
    switch (kind_) {
        case Kind::WholeField:
        case Kind::NonZero:
            return nonzero();
        case Kind::Range:
            return lo_ == 0 ? SampleSet(Kind::Range, 1, hi_) : *this;
    }
    return nonzero();
}

PrimeField::Element SampleSet::sample(const PrimeField& f, RandomSource& rng) const {
    switch (kind_) {
        case Kind::WholeField:
            return rng.uniform_below(f.modulus());
        case Kind::NonZero:
            return 1 + rng.uniform_below(f.modulus() - 1);
        case Kind::Range: {
            std::uint64_t hi = hi_ > f.modulus() ? f.modulus() : hi_;
            return lo_ + rng.uniform_below(hi - lo_);
        }
    }
    return 0;
}

std::uint64_t random_prime(unsigned bits, const std::vector<std::uint64_t>& excluded,
                           RandomSource& rng) {
    if (bits < 2 || bits > 62) throw Error("prime bit length out of range");
    const unsigned max_attempts = 128 * bits;
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        std::uint64_t lo = bits == 2 ? 2 : (1ull << (bits - 1));
        std::uint64_t candidate = lo + rng.uniform_below((1ull << bits) - lo);
        if (bits > 2) candidate |= 1;  // odd
        if (!is_prime_u64(candidate)) continue;
        bool skip = false;
        for (std::uint64_t e : excluded) {
            if (e == candidate) {
                skip = true;
                break;
            }
        }
        if (!skip) return candidate;
    }
    throw Exhausted("no prime of the requested bit length found");
}

}  // namespace lincert
