#include "lincert/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace lincert {

Rational::Rational(BigInt n, BigInt d) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

PrimeField::Element bigint_mod(const BigInt& v, const PrimeField& f) {
    BigInt m = v % BigInt(f.modulus());
    if (m < 0) m += BigInt(f.modulus());
    return static_cast<PrimeField::Element>(m.convert_to<std::uint64_t>());
}

PrimeField::Element Rational::mod(const PrimeField& f) const {
    PrimeField::Element d = bigint_mod(den_, f);
    if (d == 0) throw BadPrime("prime divides a rational denominator");
    return f.mul(bigint_mod(num_, f), f.inv(d));
}

}  // namespace lincert
