#pragma once

#include <cstddef>
#include <cstdint>

#include "stas/params.hpp"
#include "stas/rational.hpp"
#include "stas/series.hpp"

namespace stas {

// ---------------------------------------------------------------------------
// Continuous evaluation
// ---------------------------------------------------------------------------

/// sin(pi x) with exact argument reduction, so integer x gives exactly 0 and
/// sin_pi(x + 1) == -sin_pi(x) bit for bit whenever x + 1 is exact.
double sin_pi(double x);
/// cos(pi x), reduced the same way as sin_pi.
double cos_pi(double x);

/// sin(r pi t) for integer r, without rounding the product r t.
double sin_pi_scaled(std::int64_t r, double t);
double cos_pi_scaled(std::int64_t r, double t);

/// Principal-branch power p^t = |p|^t exp(i t Arg p), Arg p in (-pi, pi].
Complex principal_pow(Complex p, double t);

/// f(t) = p^t + q1 sin(r1 pi t) + q2 cos(r2 pi t). Defined at t = 0.
Complex eval_f(const StasParams &params, double t);

/// s(t) = f(t) / t. DomainError at t = 0.
Complex eval_s(const StasParams &params, double t);

/// Four-point ratio (f(t) + f(t+1)) / (f(t+2) + f(t+3)).
///
/// The weights t..t+3 of s(t) t cancel, but the excluded points
/// t in {0, -1, -2, -3} still raise DomainError. SingularWindow when the
/// denominator is exactly zero.
Complex invariant_ratio(const StasParams &params, double t);

/// a(s) = 1 / p^2. Odd frequencies cancel out of every unit-shifted pair, so
/// the ratio depends on p alone.
Complex closed_form_invariant(const StasParams &params);

/// g(t0 + i) for i in [0, count).
SampleSeries sample_series(const StasParams &params, double t0, std::size_t count);

// ---------------------------------------------------------------------------
// Exact discrete sequence a_n = ((1/2)^n + (-1)^n) / n
// ---------------------------------------------------------------------------

/// DomainError for n < 1.
Rational seq_a(std::int64_t n);

/// ((n-2) a_{n-2} + 3 (-1)^n) / (4n). DomainError for n < 3.
Rational recurrence_next(std::int64_t n, const Rational &a_prev2);

/// 4n a_n + 4(n-1) a_{n-1} - (n-2) a_{n-2} - (n-3) a_{n-3}; zero for every
/// n >= 4. DomainError for n < 4.
Rational four_term_residual(std::int64_t n);

/// Numerator (n-2) f(n-2) + (n-3) f(n-3) and denominator n f(n) + (n-1) f(n-1)
/// of the discrete four-point ratio, with their exact quotient.
struct DiscreteRatio {
  Rational numerator;
  Rational denominator;
  Rational ratio;
};

/// DomainError for n < 4.
DiscreteRatio discrete_ratio(std::int64_t n);

// ---------------------------------------------------------------------------
// Empirical invariant
// ---------------------------------------------------------------------------

struct InvariantReport {
  Complex a_hat;
  double max_rel_dev = 0.0;
  std::size_t windows_used = 0;
  std::size_t windows_skipped = 0;
};

inline constexpr double kDefaultSkipThreshold = 1e-9;

/// Estimates the invariant from every window ratio
/// (g_i + g_{i+1}) / (g_{i+2} + g_{i+3}).
///
/// A window is skipped when its denominator is zero or smaller than
/// skip_threshold times the largest slot magnitude in that window. a_hat is
/// the component-wise median of the retained ratios; max_rel_dev is
/// max |ratio_i - a_hat| / max(|a_hat|, 1). NoValidWindows when fewer than
/// four samples are given or every window is skipped.
InvariantReport estimate_invariant(const SampleSeries &series,
                                   double skip_threshold = kDefaultSkipThreshold);

} // namespace stas
