#include "stas/verification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stas/core.hpp"
#include "stas/errors.hpp"

namespace stas {

std::int64_t random_odd(SplitMix64 &rng, std::int64_t lo, std::int64_t hi) {
  const std::int64_t first = (lo % 2 == 0) ? lo + 1 : lo;
  if (first > hi) {
    throw DomainError("no odd integer in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  const auto choices = static_cast<std::uint64_t>((hi - first) / 2 + 1);
  return first + 2 * static_cast<std::int64_t>(rng.below(choices));
}

StasParams draw_params(SplitMix64 &rng, const SamplingBounds &bounds,
                       std::size_t *resampled) {
  while (true) {
    const Complex p(rng.uniform(bounds.p_re.lo, bounds.p_re.hi),
                    rng.uniform(bounds.p_im.lo, bounds.p_im.hi));
    const Complex q1(rng.uniform(bounds.q_re.lo, bounds.q_re.hi),
                     rng.uniform(bounds.q_im.lo, bounds.q_im.hi));
    const Complex q2(rng.uniform(bounds.q_re.lo, bounds.q_re.hi),
                     rng.uniform(bounds.q_im.lo, bounds.q_im.hi));
    const std::int64_t r1 = random_odd(rng, bounds.r_lo, bounds.r_hi);
    const std::int64_t r2 = random_odd(rng, bounds.r_lo, bounds.r_hi);
    if (std::abs(1.0 + p) < 1e-6 || p == Complex(0.0, 0.0)) {
      if (resampled) {
        ++*resampled;
      }
      continue;
    }
    return StasParams(p, q1, q2, r1, r2);
  }
}

VerifyReport run_verification(const VerifyConfig &config) {
  if (config.trials == 0) {
    throw ContractViolation("verification needs at least one trial");
  }
  if (!(config.t.lo < config.t.hi)) {
    throw ContractViolation("t range must satisfy t_min < t_max");
  }
  VerifyReport report;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    SplitMix64 rng = SplitMix64::stream(config.seed, trial);
    const StasParams params = draw_params(rng, config.bounds, &report.resampled);
    const Complex expected = closed_form_invariant(params);
    for (std::size_t k = 0; k < config.points_per_trial; ++k) {
      double t = rng.uniform(config.t.lo, config.t.hi);
      while (t == 0.0 || t == -1.0 || t == -2.0 || t == -3.0) {
        t = rng.uniform(config.t.lo, config.t.hi);
      }
      const Complex ratio = invariant_ratio(params, t);
      const double dev = std::abs(ratio - expected) / std::abs(expected);
      // NaN must register as a failure.
      report.max_rel_dev = std::isnan(dev) ? dev : std::max(report.max_rel_dev, dev);
      ++report.evaluations;
    }
    ++report.trials;
  }
  return report;
}

} // namespace stas
