#pragma once

#include <cstddef>
#include <cstdint>

#include "stas/params.hpp"
#include "stas/rng.hpp"

namespace stas {

struct Range {
  double lo;
  double hi;
};

/// Parameter sampling box. Defaults reproduce the reference experiment:
/// Re p in [0.3, 1], Im p in [-1.5, 1.5], q components in [-2, 2], odd r in
/// [1, 15].
struct SamplingBounds {
  Range p_re{0.3, 1.0};
  Range p_im{-1.5, 1.5};
  Range q_re{-2.0, 2.0};
  Range q_im{-2.0, 2.0};
  std::int64_t r_lo = 1;
  std::int64_t r_hi = 15;
};

/// Uniform choice among the odd integers in [lo, hi]. DomainError if none.
std::int64_t random_odd(SplitMix64 &rng, std::int64_t lo, std::int64_t hi);

/// Draws p, q1, q2, r1, r2 in that order. Draws with |1 + p| < 1e-6 are
/// redrawn; `resampled` counts them.
StasParams draw_params(SplitMix64 &rng, const SamplingBounds &bounds,
                       std::size_t *resampled = nullptr);

struct VerifyConfig {
  std::size_t trials = 1000;
  std::size_t points_per_trial = 5;
  std::uint64_t seed = 0;
  Range t{-20.0, -10.0};
  SamplingBounds bounds;
};

struct VerifyReport {
  std::size_t trials = 0;
  std::size_t evaluations = 0;
  std::size_t resampled = 0;
  double max_rel_dev = 0.0;
};

inline constexpr double kVerifyTolerance = 1e-9;

/// Each trial uses SplitMix64::stream(seed, trial): draw parameters, then
/// evaluate invariant_ratio at points_per_trial uniform t (redrawn if t hits
/// {0, -1, -2, -3}) and compare to 1/p^2.
VerifyReport run_verification(const VerifyConfig &config);

} // namespace stas
