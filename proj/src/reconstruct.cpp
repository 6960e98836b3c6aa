#include "stas/reconstruct.hpp"

#include <cmath>
#include <string>

#include "stas/errors.hpp"

namespace stas {

Window Window::from_slots(const std::array<std::optional<Complex>, 4> &slots) {
  Window w;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i]) {
      w.g[i] = *slots[i];
    } else if (w.missing) {
      throw ContractViolation("a window may have at most one missing slot");
    } else {
      w.missing = i;
    }
  }
  return w;
}

double Window::identity_residual(Complex a) const {
  return std::abs(g[0] + g[1] - a * (g[2] + g[3]));
}

Complex predict_next(Complex g0, Complex g1, Complex g2, Complex a) {
  if (a == Complex(0.0, 0.0)) {
    throw DegenerateParameter("invariant a = 0 cannot predict a trailing slot");
  }
  return (g0 + g1) / a - g2;
}

Complex recover_missing(const Window &window, Complex a) {
  if (!window.missing || *window.missing > 3) {
    throw ContractViolation("recover_missing needs exactly one missing slot in 0..3");
  }
  const auto &g = window.g;
  switch (*window.missing) {
  case 0:
    return a * (g[2] + g[3]) - g[1];
  case 1:
    return a * (g[2] + g[3]) - g[0];
  case 2:
    if (a == Complex(0.0, 0.0)) {
      throw DegenerateParameter("invariant a = 0 cannot recover slot 2");
    }
    return (g[0] + g[1]) / a - g[3];
  default:
    return predict_next(g[0], g[1], g[2], a);
  }
}

} // namespace stas
