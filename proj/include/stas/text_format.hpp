#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "stas/codec.hpp"
#include "stas/series.hpp"

// Line-oriented text formats. Numbers use '.' as decimal separator and
// 17 significant digits, which round-trips every binary64 value. Output is
// locale-independent and uses LF line endings.
//
// SIG1 (sample series):
//   SIG1
//   t0=<decimal> kind=<f|s> count=<N>
//   <re>,<im>                      (N lines)
//
// STASC1 (encoded stream):
//   STASC1
//   a=<re>,<im> t0=<decimal> count=<N>
//   <re>,<im>;<re>,<im>;<re>,<im>  (floor(N/4) lines)
//   rem=<k>
//   <re>,<im>                      (k lines)

namespace stas {

std::string format_double(double v);
std::string format_complex(Complex z);

/// FormatError unless the whole string is one finite decimal literal.
double parse_double(std::string_view text);
/// "re,im"; FormatError otherwise.
Complex parse_complex(std::string_view text);

/// kind=s divides each weighted sample by its t (DomainError at t = 0).
void write_sig1(std::ostream &os, const SampleSeries &series,
                SampleKind kind = SampleKind::f);
/// kind=s input is converted to weighted samples (DomainError at t = 0).
SampleSeries read_sig1(std::istream &is);

void write_stasc1(std::ostream &os, const EncodedStream &enc);
/// The parsed stream is validated before it is returned.
EncodedStream read_stasc1(std::istream &is);

} // namespace stas
