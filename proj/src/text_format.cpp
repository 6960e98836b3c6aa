#include "stas/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <vector>

#include "stas/errors.hpp"

namespace stas {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError("invalid count '" + std::string(text) + "'");
  }
  return value;
}

// Reads "key=value" and returns value; FormatError if the key differs.
std::string_view field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw FormatError("expected field '" + std::string(key) + "=', got '" +
                      std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

class LineReader {
public:
  explicit LineReader(std::istream &is) : is_(is) {}

  std::string next(const char *what) {
    std::string line;
    if (!std::getline(is_, line)) {
      throw FormatError(std::string("unexpected end of input, expected ") + what);
    }
    ++line_no_;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    return line;
  }

  void expect_end() {
    std::string line;
    while (std::getline(is_, line)) {
      ++line_no_;
      if (!line.empty() && line != "\r") {
        throw FormatError("trailing content at line " + std::to_string(line_no_));
      }
    }
  }

private:
  std::istream &is_;
  std::size_t line_no_ = 0;
};

} // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw FormatError("invalid decimal '" + std::string(text) + "'");
  }
  return value;
}

Complex parse_complex(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw FormatError("expected '<re>,<im>', got '" + std::string(text) + "'");
  }
  return {parse_double(parts[0]), parse_double(parts[1])};
}

void write_sig1(std::ostream &os, const SampleSeries &series, SampleKind kind) {
  std::vector<Complex> out(series.values().begin(), series.values().end());
  if (kind == SampleKind::s) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double t = series.t_at(i);
      if (t == 0.0) {
        throw DomainError("cannot write s-value at t = 0");
      }
      out[i] /= t;
    }
  }
  os << "SIG1\n"
     << "t0=" << format_double(series.t0())
     << " kind=" << (kind == SampleKind::s ? 's' : 'f') << " count=" << out.size()
     << '\n';
  for (const Complex &z : out) {
    os << format_complex(z) << '\n';
  }
}

SampleSeries read_sig1(std::istream &is) {
  LineReader in(is);
  if (in.next("SIG1 magic") != "SIG1") {
    throw FormatError("missing SIG1 magic line");
  }
  const std::string header = in.next("SIG1 header");
  const auto tokens = split(header, ' ');
  if (tokens.size() != 3) {
    throw FormatError("SIG1 header must be 't0=<x> kind=<f|s> count=<N>'");
  }
  const double t0 = parse_double(field(tokens[0], "t0"));
  const std::string_view kind = field(tokens[1], "kind");
  if (kind != "f" && kind != "s") {
    throw FormatError("kind must be 'f' or 's', got '" + std::string(kind) + "'");
  }
  const std::size_t count = parse_count(field(tokens[2], "count"));
  std::vector<Complex> values;
  values.reserve(std::min<std::size_t>(count, 1u << 20));
  for (std::size_t i = 0; i < count; ++i) {
    values.push_back(parse_complex(in.next("sample")));
  }
  in.expect_end();
  if (kind == "s") {
    return SampleSeries::from_s(t0, values);
  }
  return SampleSeries::from_f(t0, std::move(values));
}

void write_stasc1(std::ostream &os, const EncodedStream &enc) {
  os << "STASC1\n"
     << "a=" << format_complex(enc.a) << " t0=" << format_double(enc.t0)
     << " count=" << enc.count << '\n';
  for (const auto &b : enc.blocks) {
    os << format_complex(b[0]) << ';' << format_complex(b[1]) << ';'
       << format_complex(b[2]) << '\n';
  }
  os << "rem=" << enc.remainder.size() << '\n';
  for (const Complex &z : enc.remainder) {
    os << format_complex(z) << '\n';
  }
}

EncodedStream read_stasc1(std::istream &is) {
  LineReader in(is);
  if (in.next("STASC1 magic") != "STASC1") {
    throw FormatError("missing STASC1 magic line");
  }
  const std::string header = in.next("STASC1 header");
  const auto tokens = split(header, ' ');
  if (tokens.size() != 3) {
    throw FormatError("STASC1 header must be 'a=<re>,<im> t0=<x> count=<N>'");
  }
  EncodedStream enc;
  enc.a = parse_complex(field(tokens[0], "a"));
  enc.t0 = parse_double(field(tokens[1], "t0"));
  enc.count = parse_count(field(tokens[2], "count"));
  for (std::size_t b = 0; b < enc.count / 4; ++b) {
    const std::string line = in.next("block");
    const auto parts = split(line, ';');
    if (parts.size() != 3) {
      throw FormatError("block line must hold three complex values");
    }
    enc.blocks.push_back(
        {parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2])});
  }
  const std::size_t rem = parse_count(field(in.next("rem line"), "rem"));
  if (rem > 3) {
    throw FormatError("rem must be at most 3, got " + std::to_string(rem));
  }
  for (std::size_t i = 0; i < rem; ++i) {
    enc.remainder.push_back(parse_complex(in.next("remainder sample")));
  }
  in.expect_end();
  enc.validate();
  return enc;
}

} // namespace stas
