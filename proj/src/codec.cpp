#include "stas/codec.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "stas/errors.hpp"
#include "stas/reconstruct.hpp"

namespace stas {

namespace {

constexpr double kScaleFloor = 1e-300;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double block_scale(std::span<const Complex> g, std::size_t start) {
  return std::max({std::abs(g[start]), std::abs(g[start + 1]),
                   std::abs(g[start + 2]), std::abs(g[start + 3]), kScaleFloor});
}

} // namespace

void EncodedStream::validate() const {
  if (a == Complex(0.0, 0.0) || !finite(a)) {
    throw FormatError("encoded stream needs a finite non-zero invariant");
  }
  if (remainder.size() > 3) {
    throw FormatError("remainder holds " + std::to_string(remainder.size()) +
                      " samples, at most 3 allowed");
  }
  if (count != 4 * blocks.size() + remainder.size()) {
    throw FormatError("count " + std::to_string(count) + " disagrees with " +
                      std::to_string(blocks.size()) + " blocks and " +
                      std::to_string(remainder.size()) + " remainder samples");
  }
  if (!std::isfinite(t0)) {
    throw FormatError("t0 must be finite");
  }
  for (const auto &b : blocks) {
    if (!std::all_of(b.begin(), b.end(), finite)) {
      throw FormatError("non-finite value in block");
    }
  }
  if (!std::all_of(remainder.begin(), remainder.end(), finite)) {
    throw FormatError("non-finite value in remainder");
  }
}

EncodedStream encode_stream(const SampleSeries &series, Complex a) {
  if (a == Complex(0.0, 0.0)) {
    throw DegenerateParameter("cannot encode with invariant a = 0");
  }
  const auto g = series.values();
  EncodedStream enc;
  enc.a = a;
  enc.t0 = series.t0();
  enc.count = g.size();
  const std::size_t full = g.size() / 4;
  enc.blocks.reserve(full);
  for (std::size_t b = 0; b < full; ++b) {
    const std::size_t s = 4 * b;
    const Complex rebuilt = predict_next(g[s], g[s + 1], g[s + 2], a);
    const double err = std::abs(rebuilt - g[s + 3]) / block_scale(g, s);
    if (!(err <= kEncodeTolerance)) {
      throw IdentityViolation(b, err);
    }
    enc.blocks.push_back({g[s], g[s + 1], g[s + 2]});
  }
  enc.remainder.assign(g.begin() + static_cast<std::ptrdiff_t>(4 * full), g.end());
  return enc;
}

SampleSeries decode_stream(const EncodedStream &enc) {
  enc.validate();
  std::vector<Complex> out;
  out.reserve(enc.count);
  for (const auto &b : enc.blocks) {
    out.insert(out.end(), b.begin(), b.end());
    out.push_back(predict_next(b[0], b[1], b[2], enc.a));
  }
  out.insert(out.end(), enc.remainder.begin(), enc.remainder.end());
  return SampleSeries::from_f(enc.t0, std::move(out));
}

double window_residual(const SampleSeries &series, std::size_t window, Complex a) {
  const auto g = series.values();
  const Complex r = g[window] + g[window + 1] - a * (g[window + 2] + g[window + 3]);
  return std::abs(r) / block_scale(g, window);
}

std::vector<IntegrityFinding> detect_errors(const SampleSeries &series, Complex a,
                                            double tol) {
  if (series.size() < 4) {
    throw NoValidWindows("integrity check needs at least 4 samples, got " +
                         std::to_string(series.size()));
  }
  if (!(tol > 0.0)) {
    throw ContractViolation("tolerance must be positive");
  }
  const std::size_t windows = series.size() - 3;
  std::vector<IntegrityFinding> findings(windows);
  for (std::size_t i = 0; i < windows; ++i) {
    findings[i].window_index = i;
    findings[i].residual = window_residual(series, i, a);
    findings[i].verdict =
        findings[i].residual > tol ? Verdict::flagged : Verdict::clean;
  }

  auto flagged = [&](std::size_t i) { return findings[i].verdict == Verdict::flagged; };
  for (std::size_t j = 0; j < series.size(); ++j) {
    const std::size_t lo = j >= 3 ? j - 3 : 0;
    const std::size_t hi = std::min(j, windows - 1);
    bool run = true;
    for (std::size_t i = lo; i <= hi && run; ++i) {
      run = flagged(i);
    }
    if (!run || (lo > 0 && flagged(lo - 1)) || (hi + 1 < windows && flagged(hi + 1))) {
      continue;
    }
    for (std::size_t i = lo; i <= hi; ++i) {
      findings[i].implicated_samples.push_back(j);
    }
  }
  return findings;
}

RepairResult repair_series(const SampleSeries &series, Complex a,
                           const std::vector<IntegrityFinding> &findings) {
  std::set<std::size_t> targets;
  for (const auto &f : findings) {
    targets.insert(f.implicated_samples.begin(), f.implicated_samples.end());
  }
  RepairResult result{series, {}};
  const std::size_t windows = series.size() >= 4 ? series.size() - 3 : 0;
  for (std::size_t j : targets) {
    // Prefer the window that ends at j so the repair is a forward prediction.
    const std::size_t start = j >= 3 ? std::min(j - 3, windows - 1) : 0;
    Window w;
    for (std::size_t k = 0; k < 4; ++k) {
      w.g[k] = result.series[start + k];
    }
    w.missing = j - start;
    result.series[j] = recover_missing(w, a);
    result.repaired.push_back(j);
  }
  return result;
}

} // namespace stas
