#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stas/core.hpp"
#include "stas/params.hpp"
#include "stas/series.hpp"

namespace stas {

/// {+w, -w} with w the principal square root of 1/a. DegenerateParameter
/// when a = 0.
std::array<Complex, 2> recover_p(Complex a);

struct SignChoice {
  Complex p;
  bool ambiguous = false;
  /// Mean relative mismatch of each candidate, in input order.
  std::array<double, 2> mismatch{};
};

/// Mismatches at or below this separation leave the sign undecided.
inline constexpr double kSignAmbiguityTolerance = 1e-6;

/// Picks the candidate whose paired sums c^t (1 + c) best match the observed
/// g_i + g_{i+1}. Mismatch per pair is |obs - pred| / max(|obs|, |pred|)
/// (0 when both vanish). NoValidWindows for fewer than 2 samples.
SignChoice disambiguate_p(const std::array<Complex, 2> &candidates,
                          const SampleSeries &series);

struct TrigAmplitudes {
  Complex q1;
  Complex q2;
};

inline constexpr double kMaxNormalCondition = 1e12;

/// Least-squares amplitudes for g(t) - p^t = q1 sin(r1 pi t) + q2 cos(r2 pi t)
/// over arbitrary sample points.
///
/// Solves the 2x2 real normal system with complex right-hand side.
/// IllConditioned when its condition number exceeds kMaxNormalCondition. On
/// a unit-spaced grid every odd-frequency basis vector is a multiple of
/// (-1)^k, so the system is always singular there; recovering both
/// amplitudes needs points that are not all congruent modulo 1.
TrigAmplitudes fit_trig(std::span<const double> t, std::span<const Complex> g,
                        Complex p, std::int64_t r1, std::int64_t r2);
TrigAmplitudes fit_trig(const SampleSeries &series, Complex p, std::int64_t r1,
                        std::int64_t r2);

struct FitResult {
  StasParams params;
  double residual_rms = 0.0;
  bool p_sign_ambiguous = false;
  /// Every (r1, r2) whose residual ties the winner, including the winner.
  std::vector<std::pair<std::int64_t, std::int64_t>> ties;
};

/// Exhaustive search over odd (r1, r2) in [1, r_max]^2; the smallest
/// residual_rms wins and ties go to the lexicographically smaller pair.
/// Pairs whose fit is ill-conditioned are skipped; IllConditioned only when
/// every pair is. DomainError unless r_max is odd and >= 1.
FitResult search_frequencies(std::span<const double> t, std::span<const Complex> g,
                             Complex p, std::int64_t r_max);
FitResult search_frequencies(const SampleSeries &series, Complex p,
                             std::int64_t r_max);

struct ModelFit {
  InvariantReport invariant;
  SignChoice sign;
  FitResult fit;
};

inline constexpr std::int64_t kDefaultRMax = 15;

/// estimate_invariant -> recover_p -> disambiguate_p -> search_frequencies.
ModelFit fit_model(const SampleSeries &series, std::int64_t r_max = kDefaultRMax);

} // namespace stas
