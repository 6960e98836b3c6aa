#include "stas/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "stas/errors.hpp"

namespace stas {

namespace {

// Splits x = k/2 + d with integer k and |d| <= 1/4. Both steps are exact for
// finite x, so the quadrant (k mod 4) is never perturbed by rounding.
struct HalfTurn {
  int quadrant;
  double sin_d;
  double cos_d;
};

HalfTurn reduce(double x, double tail = 0.0) {
  const double k = std::nearbyint(2.0 * x);
  const double d = (x - 0.5 * k) + tail;
  double q = std::fmod(k, 4.0);
  if (q < 0.0) {
    q += 4.0;
  }
  const double angle = std::numbers::pi * d;
  return {static_cast<int>(q), std::sin(angle), std::cos(angle)};
}

// r t modulo 2 as an unevaluated sum hi + tail. t is reduced first (fmod is
// exact) and the product is split with an FMA, so the phase carries no
// rounding from |r t| being large.
HalfTurn reduce_scaled(std::int64_t r, double t) {
  const double u = std::fmod(t, 2.0);
  const double rd = static_cast<double>(r);
  const double hi = rd * u;
  const double tail = std::fma(rd, u, -hi);
  return reduce(hi, tail);
}

double sin_of(const HalfTurn &h) {
  switch (h.quadrant) {
  case 0:
    return h.sin_d;
  case 1:
    return h.cos_d;
  case 2:
    return -h.sin_d;
  default:
    return -h.cos_d;
  }
}

double cos_of(const HalfTurn &h) {
  switch (h.quadrant) {
  case 0:
    return h.cos_d;
  case 1:
    return -h.sin_d;
  case 2:
    return -h.cos_d;
  default:
    return h.sin_d;
  }
}

Rational minus_one_pow(std::int64_t n) { return Rational(n % 2 == 0 ? 1 : -1); }

// Quarter-turn shift of the phase r (t + k) relative to r t.
HalfTurn shifted(HalfTurn h, std::int64_t r, std::int64_t k) {
  if ((r % 2 != 0) && (k % 2 != 0)) {
    h.quadrant = (h.quadrant + 2) % 4;
  }
  return h;
}

// f(t + k) split into exponential and oscillatory parts. The phases of the
// shifted points are derived from the reduced phase at t, so a unit shift is
// an exact half turn regardless of how t + k rounds.
struct Terms {
  Complex exp;
  Complex osc;
};

class ShiftedTerms {
public:
  ShiftedTerms(const StasParams &params, double t)
      : params_(params), t_(t), sin_(reduce_scaled(params.r1(), t)),
        cos_(reduce_scaled(params.r2(), t)) {}

  Terms at(std::int64_t k) const {
    const HalfTurn s = shifted(sin_, params_.r1(), k);
    const HalfTurn c = shifted(cos_, params_.r2(), k);
    return {principal_pow(params_.p(), t_ + static_cast<double>(k)),
            params_.q1() * sin_of(s) + params_.q2() * cos_of(c)};
  }

private:
  const StasParams &params_;
  double t_;
  HalfTurn sin_;
  HalfTurn cos_;
};

} // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) {
    return std::nan("");
  }
  return sin_of(reduce(x));
}

double cos_pi(double x) {
  if (!std::isfinite(x)) {
    return std::nan("");
  }
  return cos_of(reduce(x));
}

double sin_pi_scaled(std::int64_t r, double t) {
  if (!std::isfinite(t)) {
    return std::nan("");
  }
  return sin_of(reduce_scaled(r, t));
}

double cos_pi_scaled(std::int64_t r, double t) {
  if (!std::isfinite(t)) {
    return std::nan("");
  }
  return cos_of(reduce_scaled(r, t));
}

Complex principal_pow(Complex p, double t) {
  if (p.imag() == 0.0) {
    if (p.real() > 0.0) {
      return {std::pow(p.real(), t), 0.0};
    }
    if (p.real() < 0.0) {
      // Arg p = pi exactly on the negative real axis.
      const double mag = std::pow(-p.real(), t);
      return {mag * cos_pi(t), mag * sin_pi(t)};
    }
  }
  return std::polar(std::pow(std::abs(p), t), t * std::arg(p));
}

Complex eval_f(const StasParams &params, double t) {
  return principal_pow(params.p(), t) + params.q1() * sin_pi_scaled(params.r1(), t) +
         params.q2() * cos_pi_scaled(params.r2(), t);
}

Complex eval_s(const StasParams &params, double t) {
  if (t == 0.0) {
    throw DomainError("s(t) is undefined at t = 0");
  }
  return eval_f(params, t) / t;
}

Complex invariant_ratio(const StasParams &params, double t) {
  if (t == 0.0 || t == -1.0 || t == -2.0 || t == -3.0) {
    throw DomainError("four-point ratio is undefined at t = " +
                      std::to_string(t));
  }
  // Sum like parts first: the oscillatory pairs cancel before they can swamp a
  // small exponential part.
  const ShiftedTerms f(params, t);
  const Terms f0 = f.at(0);
  const Terms f1 = f.at(1);
  const Terms f2 = f.at(2);
  const Terms f3 = f.at(3);
  const Complex num = (f0.exp + f1.exp) + (f0.osc + f1.osc);
  const Complex den = (f2.exp + f3.exp) + (f2.osc + f3.osc);
  if (den == Complex(0.0, 0.0)) {
    throw SingularWindow("four-point ratio denominator vanishes at t = " +
                         std::to_string(t));
  }
  return num / den;
}

Complex closed_form_invariant(const StasParams &params) {
  const Complex p = params.p();
  return 1.0 / (p * p);
}

SampleSeries sample_series(const StasParams &params, double t0,
                           std::size_t count) {
  std::vector<Complex> g(count);
  const ShiftedTerms f(params, t0);
  for (std::size_t i = 0; i < count; ++i) {
    const Terms terms = f.at(static_cast<std::int64_t>(i));
    g[i] = terms.exp + terms.osc;
  }
  return SampleSeries::from_f(t0, std::move(g));
}

Rational seq_a(std::int64_t n) {
  if (n < 1) {
    throw DomainError("a_n is defined for n >= 1, got " + std::to_string(n));
  }
  const Rational half_pow = Rational(1) / Rational::pow2(static_cast<std::uint32_t>(n));
  return (half_pow + minus_one_pow(n)) / Rational(n);
}

Rational recurrence_next(std::int64_t n, const Rational &a_prev2) {
  if (n < 3) {
    throw DomainError("two-step recurrence needs n >= 3, got " +
                      std::to_string(n));
  }
  return (Rational(n - 2) * a_prev2 + Rational(3) * minus_one_pow(n)) /
         Rational(4 * n);
}

Rational four_term_residual(std::int64_t n) {
  if (n < 4) {
    throw DomainError("four-term identity needs n >= 4, got " +
                      std::to_string(n));
  }
  return Rational(4 * n) * seq_a(n) + Rational(4 * (n - 1)) * seq_a(n - 1) -
         Rational(n - 2) * seq_a(n - 2) - Rational(n - 3) * seq_a(n - 3);
}

DiscreteRatio discrete_ratio(std::int64_t n) {
  if (n < 4) {
    throw DomainError("discrete four-point ratio needs n >= 4, got " +
                      std::to_string(n));
  }
  Rational num = Rational(n - 2) * seq_a(n - 2) + Rational(n - 3) * seq_a(n - 3);
  Rational den = Rational(n) * seq_a(n) + Rational(n - 1) * seq_a(n - 1);
  Rational ratio = num / den;
  return {std::move(num), std::move(den), std::move(ratio)};
}

namespace {

double median(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) {
    return upper;
  }
  const double lower =
      *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

} // namespace

InvariantReport estimate_invariant(const SampleSeries &series,
                                   double skip_threshold) {
  if (series.size() < 4) {
    throw NoValidWindows("need at least 4 samples, got " +
                         std::to_string(series.size()));
  }
  const auto g = series.values();
  std::vector<Complex> ratios;
  InvariantReport report;
  for (std::size_t i = 0; i + 3 < g.size(); ++i) {
    const Complex den = g[i + 2] + g[i + 3];
    const double scale = std::max({std::abs(g[i]), std::abs(g[i + 1]),
                                   std::abs(g[i + 2]), std::abs(g[i + 3])});
    if (den == Complex(0.0, 0.0) || std::abs(den) < skip_threshold * scale) {
      ++report.windows_skipped;
      continue;
    }
    ratios.push_back((g[i] + g[i + 1]) / den);
  }
  if (ratios.empty()) {
    throw NoValidWindows("every window has a near-singular denominator");
  }

  std::vector<double> re(ratios.size());
  std::vector<double> im(ratios.size());
  std::transform(ratios.begin(), ratios.end(), re.begin(),
                 [](Complex z) { return z.real(); });
  std::transform(ratios.begin(), ratios.end(), im.begin(),
                 [](Complex z) { return z.imag(); });
  report.a_hat = {median(std::move(re)), median(std::move(im))};
  report.windows_used = ratios.size();

  const double norm = std::max(std::abs(report.a_hat), 1.0);
  for (const Complex &r : ratios) {
    report.max_rel_dev = std::max(report.max_rel_dev, std::abs(r - report.a_hat) / norm);
  }
  return report;
}

} // namespace stas
