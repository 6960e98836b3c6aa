#include "stas/params.hpp"

#include <cmath>
#include <string>

#include "stas/errors.hpp"

namespace stas {

namespace {

void require_odd(std::int64_t r, const char *which) {
  if (r % 2 == 0) {
    throw DomainError(std::string(which) + " must be an odd integer, got " +
                      std::to_string(r));
  }
}

} // namespace

StasParams::StasParams(Complex p, Complex q1, Complex q2, std::int64_t r1,
                       std::int64_t r2)
    : p_(p), q1_(q1), q2_(q2), r1_(r1), r2_(r2) {
  for (Complex c : {p_, q1_, q2_}) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("parameters must be finite");
    }
  }
  if (p_.imag() == 0.0) {
    p_ = Complex(p_.real(), 0.0);
  }
  if (p_ == Complex(0.0, 0.0)) {
    throw DegenerateParameter("p must be non-zero");
  }
  if (p_ == Complex(-1.0, 0.0)) {
    throw DegenerateParameter("p = -1 makes the four-point invariant 0/0");
  }
  require_odd(r1_, "r1");
  require_odd(r2_, "r2");
}

StasParams StasParams::exponential(Complex p) {
  return StasParams(p, 0.0, 0.0, 1, 1);
}

StasParams StasParams::base_sequence() {
  return StasParams(0.5, 0.0, 1.0, 1, 1);
}

} // namespace stas
