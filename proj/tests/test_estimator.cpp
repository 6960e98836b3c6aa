#include <doctest.h>

#include <cmath>
#include <vector>

#include "stas/core.hpp"
#include "stas/errors.hpp"
#include "stas/estimator.hpp"
#include "stas/rng.hpp"
#include "stas/verification.hpp"

using namespace stas;

namespace {

double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

struct Points {
  std::vector<double> t;
  std::vector<Complex> g;
};

Points sample_points(const StasParams &P, std::vector<double> t) {
  Points out{std::move(t), {}};
  for (double x : out.t) {
    out.g.push_back(eval_f(P, x));
  }
  return out;
}

std::vector<double> half_grid(double t0, int n) {
  std::vector<double> t;
  for (int k = 0; k < n; ++k) {
    t.push_back(t0 + 0.5 * k);
  }
  return t;
}

// Irregular abscissae: no two points share a residue modulo 1/2.
std::vector<double> irregular_grid(int n) {
  std::vector<double> t;
  SplitMix64 rng(1234);
  for (int k = 0; k < n; ++k) {
    t.push_back(0.1 + 0.37 * k + 0.05 * rng.uniform01());
  }
  return t;
}

} // namespace

TEST_CASE("recover_p examples") {
  auto c = recover_p(4.0);
  CHECK(c[0] == Complex(0.5, 0.0));
  CHECK(c[1] == Complex(-0.5, -0.0));
  c = recover_p(1.0);
  CHECK(c[0] == Complex(1.0, 0.0));
  CHECK(c[1] == Complex(-1.0, -0.0));
  c = recover_p({-0.28, -0.96});
  CHECK(rel(c[0], {0.6, 0.8}) < 1e-14);
  CHECK(rel(c[1], {-0.6, -0.8}) < 1e-14);
  for (const Complex &p : c) {
    CHECK(rel(p * p, 1.0 / Complex(-0.28, -0.96)) < 1e-12);
  }
  CHECK_THROWS_AS(recover_p(0.0), DegenerateParameter);
}

TEST_CASE("disambiguate_p examples") {
  const SampleSeries base = sample_series(StasParams::base_sequence(), 1.0, 16);
  SignChoice choice = disambiguate_p({Complex(0.5), Complex(-0.5)}, base);
  CHECK(choice.p == Complex(0.5, 0.0));
  CHECK_FALSE(choice.ambiguous);
  choice = disambiguate_p({Complex(-0.5), Complex(0.5)}, base);
  CHECK(choice.p == Complex(0.5, 0.0));

  const StasParams P({0.6, 0.8}, {1.1, -0.3}, {-0.7, 0.2}, 3, 5);
  const SampleSeries s = sample_series(P, -17.75, 12);
  choice = disambiguate_p(recover_p(closed_form_invariant(P)), s);
  CHECK(rel(choice.p, P.p()) < 1e-12);
  CHECK_FALSE(choice.ambiguous);

  // A -1 candidate predicts identically zero pair sums.
  choice = disambiguate_p({Complex(-1.0), Complex(0.5)}, base);
  CHECK(choice.p == Complex(0.5, 0.0));
  CHECK(choice.mismatch[0] == doctest::Approx(1.0));

  CHECK_THROWS_AS(disambiguate_p({Complex(1), Complex(-1)}, SampleSeries::from_f(0, {1})),
                  NoValidWindows);
}

TEST_CASE("sign is recovered on noiseless data") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const StasParams P = draw_params(rng, SamplingBounds{});
    const SampleSeries s = sample_series(P, rng.uniform(-20.0, 10.0), 4 + rng.below(20));
    const SignChoice c = disambiguate_p(recover_p(closed_form_invariant(P)), s);
    if (!c.ambiguous) {
      CHECK(rel(c.p, P.p()) < 1e-9);
    }
  }
}

TEST_CASE("fit_trig examples") {
  const StasParams P(0.5, 2.0, -1.0, 1, 3);
  const Points pts = sample_points(P, half_grid(0.1, 16));
  const TrigAmplitudes q = fit_trig(pts.t, pts.g, 0.5, 1, 3);
  CHECK(std::abs(q.q1 - Complex(2.0)) < 1e-9);
  CHECK(std::abs(q.q2 - Complex(-1.0)) < 1e-9);

  const Points flat = sample_points(StasParams::exponential(0.5), half_grid(0.1, 16));
  const TrigAmplitudes zero = fit_trig(flat.t, flat.g, 0.5, 1, 3);
  CHECK(std::abs(zero.q1) < 1e-12);
  CHECK(std::abs(zero.q2) < 1e-12);

  // Integer abscissae: every odd-frequency sine vanishes.
  const SampleSeries ints = sample_series(P, 1.0, 16);
  CHECK_THROWS_AS(fit_trig(ints, 0.5, 1, 3), IllConditioned);
}

TEST_CASE("unit grids cannot separate the two amplitudes") {
  // On t0 + k both basis vectors are multiples of (-1)^k.
  const StasParams P(0.5, 2.0, -1.0, 1, 3);
  for (double t0 : {0.25, 0.1, -7.3}) {
    const SampleSeries s = sample_series(P, t0, 24);
    for (std::int64_t r1 : {1, 3, 5}) {
      for (std::int64_t r2 : {1, 7}) {
        CHECK_THROWS_AS(fit_trig(s, 0.5, r1, r2), IllConditioned);
      }
    }
    CHECK_THROWS_AS(search_frequencies(s, 0.5, 9), IllConditioned);
  }
}

TEST_CASE("fit_trig argument checks") {
  const Points pts = sample_points(StasParams::base_sequence(), half_grid(0.1, 3));
  CHECK_THROWS_AS(fit_trig(pts.t, pts.g, 0.5, 1, 1), ContractViolation);
  std::vector<double> t{0.1, 0.2, 0.3, 0.4};
  std::vector<Complex> g{1, 2, 3};
  CHECK_THROWS_AS(fit_trig(t, g, 0.5, 1, 1), ContractViolation);
}

TEST_CASE("search_frequencies examples") {
  const StasParams P(0.5, 1.5, 0.5, 5, 7);
  const Points pts = sample_points(P, irregular_grid(24));
  const FitResult fit = search_frequencies(pts.t, pts.g, 0.5, 9);
  CHECK(fit.params.r1() == 5);
  CHECK(fit.params.r2() == 7);
  CHECK(fit.residual_rms < 1e-9);
  CHECK(std::abs(fit.params.q1() - Complex(1.5)) < 1e-9);
  CHECK(std::abs(fit.params.q2() - Complex(0.5)) < 1e-9);
  CHECK(fit.ties.size() == 1);

  const Points flat = sample_points(StasParams::exponential(0.5), irregular_grid(24));
  const FitResult pure = search_frequencies(flat.t, flat.g, 0.5, 3);
  CHECK(pure.residual_rms < 1e-10);
  CHECK(std::abs(pure.params.q1()) < 1e-10);
  CHECK(std::abs(pure.params.q2()) < 1e-10);
  // Every pair fits equally well; the smallest one wins.
  CHECK(pure.params.r1() == 1);
  CHECK(pure.params.r2() == 1);
  CHECK(pure.ties.size() == 4);

  const FitResult single = search_frequencies(pts.t, pts.g, 0.5, 1);
  CHECK(single.params.r1() == 1);
  CHECK(single.params.r2() == 1);
  CHECK(single.ties.size() == 1);

  CHECK_THROWS_AS(search_frequencies(pts.t, pts.g, 0.5, 4), DomainError);
  CHECK_THROWS_AS(search_frequencies(pts.t, pts.g, 0.5, -1), DomainError);
  std::vector<double> few(pts.t.begin(), pts.t.begin() + 7);
  std::vector<Complex> few_g(pts.g.begin(), pts.g.begin() + 7);
  CHECK_THROWS_AS(search_frequencies(few, few_g, 0.5, 9), ContractViolation);
}

TEST_CASE("least-squares amplitudes are locally optimal") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const StasParams truth = draw_params(rng, SamplingBounds{});
    Points pts = sample_points(truth, irregular_grid(24));
    for (Complex &g : pts.g) {
      g += Complex(rng.uniform(-1e-3, 1e-3), rng.uniform(-1e-3, 1e-3));
    }
    const FitResult fit = search_frequencies(pts.t, pts.g, truth.p(), 15);
    auto rms = [&](Complex q1, Complex q2) {
      const StasParams m(truth.p(), q1, q2, fit.params.r1(), fit.params.r2());
      double sum = 0.0;
      for (std::size_t i = 0; i < pts.t.size(); ++i) {
        sum += std::norm(eval_f(m, pts.t[i]) - pts.g[i]);
      }
      return std::sqrt(sum / static_cast<double>(pts.t.size()));
    };
    CHECK(rms(fit.params.q1(), fit.params.q2()) ==
          doctest::Approx(fit.residual_rms).epsilon(1e-12));
    for (int k = 0; k < 8; ++k) {
      const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const Complex delta = std::polar(1e-3, phase);
      const bool first = rng.below(2) == 0;
      const double perturbed = first ? rms(fit.params.q1() + delta, fit.params.q2())
                                     : rms(fit.params.q1(), fit.params.q2() + delta);
      CHECK(perturbed >= fit.residual_rms);
    }
  }
}

TEST_CASE("fit_model on a unit grid recovers a and p, then stops") {
  const StasParams P({0.7, -0.4}, {1.2, 0.3}, {-0.5, 0.9}, 5, 3);
  const SampleSeries s = sample_series(P, 0.25, 24);
  const InvariantReport inv = estimate_invariant(s);
  CHECK(rel(inv.a_hat, closed_form_invariant(P)) < 1e-9);
  const SignChoice sign = disambiguate_p(recover_p(inv.a_hat), s);
  CHECK(rel(sign.p, P.p()) < 1e-8);
  CHECK_THROWS_AS(fit_model(s), IllConditioned);
}
