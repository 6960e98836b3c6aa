#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "stas/params.hpp"
#include "stas/series.hpp"

namespace stas {

/// Disjoint 4-blocks stored as three explicit samples each; slot 3 is implied
/// by g0 + g1 = a (g2 + g3). A tail of fewer than four samples is verbatim.
struct EncodedStream {
  Complex a;
  double t0 = 0.0;
  std::size_t count = 0;
  std::vector<std::array<Complex, 3>> blocks;
  std::vector<Complex> remainder;

  /// FormatError unless count = 4 |blocks| + |remainder|, |remainder| < 4,
  /// a != 0 and every stored value is finite.
  void validate() const;

  std::size_t explicit_values() const { return 3 * blocks.size() + remainder.size(); }
};

/// Largest relative reconstruction error of slot 3 accepted by encode_stream.
inline constexpr double kEncodeTolerance = 1e-6;

/// DegenerateParameter when a = 0. IdentityViolation for the first block whose
/// slot 3 cannot be rebuilt within kEncodeTolerance of the block's largest
/// magnitude.
EncodedStream encode_stream(const SampleSeries &series, Complex a);

/// Inverse of encode_stream. FormatError on a structurally invalid stream.
SampleSeries decode_stream(const EncodedStream &enc);

enum class Verdict { clean, flagged };

struct IntegrityFinding {
  std::size_t window_index = 0;
  double residual = 0.0;
  std::vector<std::size_t> implicated_samples;
  Verdict verdict = Verdict::clean;
};

/// |g_i + g_{i+1} - a (g_{i+2} + g_{i+3})| / max(largest |g| in the window, 1e-300).
double window_residual(const SampleSeries &series, std::size_t window, Complex a);

/// One finding per window i in [0, N-4].
///
/// Windows with residual > tol are flagged. Sample j is implicated when the
/// windows covering it, [max(0, j-3), min(j, N-4)], form exactly one maximal
/// run of flagged windows. A single corruption therefore localizes to its
/// index for N >= 7; corruptions closer than 7 samples merge into one run and
/// are reported at window level only.
///
/// NoValidWindows for fewer than four samples; ContractViolation for tol <= 0.
std::vector<IntegrityFinding> detect_errors(const SampleSeries &series, Complex a,
                                            double tol);

struct RepairResult {
  SampleSeries series;
  std::vector<std::size_t> repaired;
};

/// Rewrites every implicated sample by recover_missing on a window covering it.
RepairResult repair_series(const SampleSeries &series, Complex a,
                           const std::vector<IntegrityFinding> &findings);

} // namespace stas
