#include "tanrep/rational.hpp"

#include "tanrep/errors.hpp"

namespace tanrep {

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::InvalidParameter, "zero denominator");
    value_ = den < 0 ? Value(Integer(-num), Integer(-den)) : Value(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw Error(ErrorKind::InvalidParameter, "division by zero");
    return Rational(a.value_ / b.value_);
}

std::string Rational::str() const {
    const Integer den = denominator();
    if (den == 1) return numerator().str();
    return numerator().str() + "/" + den.str();
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tanrep
