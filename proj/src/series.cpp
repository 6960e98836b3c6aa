#include "stas/series.hpp"

#include <string>

#include "stas/errors.hpp"

namespace stas {

SampleSeries SampleSeries::from_f(double t0, std::vector<Complex> values) {
  return SampleSeries(t0, std::move(values), SampleKind::f);
}

SampleSeries SampleSeries::from_s(double t0, std::span<const Complex> s_values) {
  std::vector<Complex> g;
  g.reserve(s_values.size());
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    const double t = t0 + static_cast<double>(i);
    if (t == 0.0) {
      throw DomainError("s-valued sample " + std::to_string(i) +
                        " sits at t = 0 where t*s(t) is undefined");
    }
    g.push_back(t * s_values[i]);
  }
  return SampleSeries(t0, std::move(g), SampleKind::s);
}

} // namespace stas
