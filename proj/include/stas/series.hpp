#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "stas/params.hpp"

namespace stas {

/// How a series was supplied. Storage is always weighted samples g = t s(t).
enum class SampleKind { f, s };

/// Unit-spaced weighted samples: values()[i] = g(t0 + i) = f(t0 + i).
class SampleSeries {
public:
  SampleSeries() = default;

  static SampleSeries from_f(double t0, std::vector<Complex> values);

  /// Converts s-values to g = t s(t). DomainError if any grid point is 0.
  static SampleSeries from_s(double t0, std::span<const Complex> s_values);

  double t0() const { return t0_; }
  double t_at(std::size_t i) const { return t0_ + static_cast<double>(i); }
  SampleKind source_kind() const { return source_; }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::span<const Complex> values() const { return values_; }
  const Complex &operator[](std::size_t i) const { return values_[i]; }
  Complex &operator[](std::size_t i) { return values_[i]; }

private:
  SampleSeries(double t0, std::vector<Complex> values, SampleKind kind)
      : t0_(t0), values_(std::move(values)), source_(kind) {}

  double t0_ = 0.0;
  std::vector<Complex> values_;
  SampleKind source_ = SampleKind::f;
};

} // namespace stas
