#include "stas/estimator.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "stas/errors.hpp"

namespace stas {

std::array<Complex, 2> recover_p(Complex a) {
  if (a == Complex(0.0, 0.0)) {
    throw DegenerateParameter("invariant a = 0 has no base p");
  }
  const Complex w = std::sqrt(1.0 / a);
  return {w, -w};
}

SignChoice disambiguate_p(const std::array<Complex, 2> &candidates,
                          const SampleSeries &series) {
  if (series.size() < 2) {
    throw NoValidWindows("sign disambiguation needs at least 2 samples");
  }
  const auto g = series.values();
  SignChoice choice;
  for (std::size_t c = 0; c < 2; ++c) {
    const Complex cand = candidates[c];
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
      const Complex obs = g[i] + g[i + 1];
      const Complex pred = principal_pow(cand, series.t_at(i)) * (1.0 + cand);
      const double scale = std::max(std::abs(obs), std::abs(pred));
      total += scale == 0.0 ? 0.0 : std::abs(obs - pred) / scale;
    }
    choice.mismatch[c] = total / static_cast<double>(g.size() - 1);
  }
  const std::size_t best = choice.mismatch[1] < choice.mismatch[0] ? 1 : 0;
  choice.p = candidates[best];
  choice.ambiguous =
      std::abs(choice.mismatch[0] - choice.mismatch[1]) <= kSignAmbiguityTolerance;
  return choice;
}

namespace {

std::vector<double> grid_points(const SampleSeries &series) {
  std::vector<double> t(series.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = series.t_at(i);
  }
  return t;
}

void require_points(std::span<const double> t, std::span<const Complex> g,
                    std::size_t min_points) {
  if (t.size() != g.size()) {
    throw ContractViolation("point and sample counts differ");
  }
  if (t.size() < min_points) {
    throw ContractViolation("need at least " + std::to_string(min_points) +
                            " samples, got " + std::to_string(t.size()));
  }
}

double residual_rms(std::span<const double> t, std::span<const Complex> g,
                    const StasParams &model) {
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sum += std::norm(eval_f(model, t[i]) - g[i]);
  }
  return std::sqrt(sum / static_cast<double>(t.size()));
}

} // namespace

TrigAmplitudes fit_trig(std::span<const double> t, std::span<const Complex> g,
                        Complex p, std::int64_t r1, std::int64_t r2) {
  require_points(t, g, 4);
  double ss = 0.0;
  double sc = 0.0;
  double cc = 0.0;
  Complex bs;
  Complex bc;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double s = sin_pi_scaled(r1, t[i]);
    const double c = cos_pi_scaled(r2, t[i]);
    const Complex y = g[i] - principal_pow(p, t[i]);
    ss += s * s;
    sc += s * c;
    cc += c * c;
    bs += s * y;
    bc += c * y;
  }
  // Symmetric PSD 2x2: cond = lambda_max / lambda_min = lambda_max^2 / det.
  const double det = ss * cc - sc * sc;
  const double half_tr = 0.5 * (ss + cc);
  const double lambda_max =
      half_tr + std::sqrt(0.25 * (ss - cc) * (ss - cc) + sc * sc);
  if (!(det > 0.0) || lambda_max * lambda_max / det > kMaxNormalCondition) {
    throw IllConditioned("normal matrix for (r1=" + std::to_string(r1) +
                         ", r2=" + std::to_string(r2) +
                         ") is singular or ill-conditioned");
  }
  return {(cc * bs - sc * bc) / det, (ss * bc - sc * bs) / det};
}

TrigAmplitudes fit_trig(const SampleSeries &series, Complex p, std::int64_t r1,
                        std::int64_t r2) {
  const auto t = grid_points(series);
  return fit_trig(t, series.values(), p, r1, r2);
}

FitResult search_frequencies(std::span<const double> t, std::span<const Complex> g,
                             Complex p, std::int64_t r_max) {
  if (r_max < 1 || r_max % 2 == 0) {
    throw DomainError("r_max must be an odd integer >= 1, got " +
                      std::to_string(r_max));
  }
  require_points(t, g, 8);

  struct Candidate {
    std::int64_t r1;
    std::int64_t r2;
    TrigAmplitudes q;
    double rms;
  };
  std::vector<Candidate> fits;
  for (std::int64_t r1 = 1; r1 <= r_max; r1 += 2) {
    for (std::int64_t r2 = 1; r2 <= r_max; r2 += 2) {
      try {
        const TrigAmplitudes q = fit_trig(t, g, p, r1, r2);
        const double rms = residual_rms(t, g, StasParams(p, q.q1, q.q2, r1, r2));
        fits.push_back({r1, r2, q, rms});
      } catch (const IllConditioned &) {
        // unidentifiable pair; only fatal if all of them are
      }
    }
  }
  if (fits.empty()) {
    throw IllConditioned("every frequency pair up to r_max=" +
                         std::to_string(r_max) + " is ill-conditioned");
  }

  double best = std::numeric_limits<double>::infinity();
  double signal = 0.0;
  for (const auto &f : fits) {
    best = std::min(best, f.rms);
  }
  for (const Complex &z : g) {
    signal += std::norm(z);
  }
  const double tie_tol =
      1e-12 * std::max(std::sqrt(signal / static_cast<double>(g.size())),
                       std::numeric_limits<double>::min());

  std::optional<Candidate> winner;
  std::vector<std::pair<std::int64_t, std::int64_t>> ties;
  for (const auto &f : fits) {
    if (f.rms <= best + tie_tol) {
      if (!winner) {
        winner = f;
      }
      ties.emplace_back(f.r1, f.r2);
    }
  }
  return FitResult{StasParams(p, winner->q.q1, winner->q.q2, winner->r1, winner->r2),
                   winner->rms, false, std::move(ties)};
}

FitResult search_frequencies(const SampleSeries &series, Complex p,
                             std::int64_t r_max) {
  const auto t = grid_points(series);
  return search_frequencies(t, series.values(), p, r_max);
}

ModelFit fit_model(const SampleSeries &series, std::int64_t r_max) {
  InvariantReport invariant = estimate_invariant(series);
  SignChoice sign = disambiguate_p(recover_p(invariant.a_hat), series);
  FitResult fit = search_frequencies(series, sign.p, r_max);
  fit.p_sign_ambiguous = sign.ambiguous;
  return {invariant, sign, std::move(fit)};
}

} // namespace stas
