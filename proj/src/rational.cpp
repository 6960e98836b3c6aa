#include "stas/rational.hpp"

#include "stas/errors.hpp"

namespace stas {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no int64_t constructor on every platform; go via string-free
  // limb import of the magnitude.
  mpz_class out;
  const bool negative = v < 0;
  std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(v)
                               : static_cast<std::uint64_t>(v);
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (negative) {
    out = -out;
  }
  return out;
}

} // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(to_mpz(num), to_mpz(den)) {}

Rational::Rational(const mpz_class &num, const mpz_class &den) {
  if (sgn(den) == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::pow2(std::uint32_t exponent) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, exponent);
  return Rational(mpq_class(v));
}

Rational &Rational::operator+=(const Rational &rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero()) {
    throw DomainError("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const {
  if (is_integer()) {
    return num().get_str();
  }
  return num().get_str() + "/" + den().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.to_string();
}

} // namespace stas
