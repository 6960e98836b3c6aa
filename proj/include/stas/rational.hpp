#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace stas {

/// Exact fraction num/den with arbitrary-precision integers.
///
/// Always canonical: gcd(|num|, den) = 1 and den >= 1, so zero is 0/1 and
/// equality is structural.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
  /// Throws DomainError when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class &num, const mpz_class &den);

  static Rational pow2(std::uint32_t exponent);

  const mpz_class &num() const { return value_.get_num(); }
  const mpz_class &den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return den() == 1; }

  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  /// Throws DomainError on division by zero.
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.value_ < b.value_;
  }

  double to_double() const { return value_.get_d(); }

  /// "num/den", or just "num" when den == 1.
  std::string to_string() const;

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace stas
