#include "antiexact/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "antiexact/errors.hpp"

namespace antiexact {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    if (v.get_den() == 0) throw Error("rational with zero denominator: " + text);
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace antiexact
