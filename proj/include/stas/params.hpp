#pragma once

#include <complex>
#include <cstdint>

namespace stas {

using Complex = std::complex<double>;

/// Parameters of the family
///
///     s(t) = (p^t + q1 sin(r1 pi t) + q2 cos(r2 pi t)) / t
///
/// Construction enforces odd r1, r2 (DomainError) and p not in {0, -1}
/// (DegenerateParameter). A negative-zero imaginary part of p is normalized to
/// +0 so that Arg p = +pi on the negative real axis.
class StasParams {
public:
  StasParams(Complex p, Complex q1, Complex q2, std::int64_t r1, std::int64_t r2);

  /// Pure exponential member: q1 = q2 = 0, r1 = r2 = 1.
  static StasParams exponential(Complex p);

  /// The alternating-decaying base sequence: p = 1/2, q2 = 1, r1 = r2 = 1.
  static StasParams base_sequence();

  Complex p() const { return p_; }
  Complex q1() const { return q1_; }
  Complex q2() const { return q2_; }
  std::int64_t r1() const { return r1_; }
  std::int64_t r2() const { return r2_; }

  friend bool operator==(const StasParams &, const StasParams &) = default;

private:
  Complex p_;
  Complex q1_;
  Complex q2_;
  std::int64_t r1_;
  std::int64_t r2_;
};

} // namespace stas
