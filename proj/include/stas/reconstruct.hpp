#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "stas/params.hpp"

namespace stas {

/// Four weighted samples at t, t+1, t+2, t+3 with at most one unknown slot.
struct Window {
  std::array<Complex, 4> g{};
  std::optional<std::size_t> missing;

  /// Builds a window from possibly-absent slots. ContractViolation when more
  /// than one slot is absent.
  static Window from_slots(const std::array<std::optional<Complex>, 4> &slots);

  /// |g0 + g1 - a (g2 + g3)|, ignoring `missing`.
  double identity_residual(Complex a) const;
};

/// Solves g0 + g1 = a (g2 + g3) for the missing slot.
///
/// Slots 2 and 3 divide by a, which amplifies relative error by up to
/// max(|a|, 1/|a|). ContractViolation when no valid slot is marked missing;
/// DegenerateParameter when a = 0 and the missing slot is 2 or 3.
Complex recover_missing(const Window &window, Complex a);

/// (g0 + g1) / a - g2: the next sample after three known ones.
Complex predict_next(Complex g0, Complex g1, Complex g2, Complex a);

} // namespace stas
