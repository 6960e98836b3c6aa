#pragma once

// Independent reference routes used only by tests. Nothing here calls into
// the library's evaluation code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Complex = std::complex<double>;
using BigRational = boost::multiprecision::cpp_rational;

// Direct formula with the principal complex logarithm and plain products.
inline Complex f(Complex p, Complex q1, Complex q2, std::int64_t r1,
                 std::int64_t r2, double t) {
  const double pi = std::numbers::pi;
  return std::exp(t * std::log(p)) +
         q1 * std::sin(static_cast<double>(r1) * pi * t) +
         q2 * std::cos(static_cast<double>(r2) * pi * t);
}

// The reference ratio evaluated through s(t) t, as written.
inline Complex ratio(Complex p, Complex q1, Complex q2, std::int64_t r1,
                     std::int64_t r2, double t) {
  auto s = [&](double x) { return f(p, q1, q2, r1, r2, x) / x; };
  return (s(t) * t + s(t + 1) * (t + 1)) / (s(t + 2) * (t + 2) + s(t + 3) * (t + 3));
}

// a_n = ((1/2)^n + (-1)^n) / n by repeated halving.
inline BigRational seq_a(int n) {
  BigRational half_pow = 1;
  for (int i = 0; i < n; ++i) {
    half_pow /= 2;
  }
  const BigRational sign = (n % 2 == 0) ? 1 : -1;
  return (half_pow + sign) / n;
}

} // namespace oracle
