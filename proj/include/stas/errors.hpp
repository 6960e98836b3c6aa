#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stas {

// Base of every error thrown by the library. name() is the stable identifier
// the CLI prints on stderr.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual std::string_view name() const noexcept = 0;
};

#define STAS_DECLARE_ERROR(Type)                                               \
  class Type : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
    std::string_view name() const noexcept override { return #Type; }          \
  }

// Argument outside the mathematical domain (t = 0 for s(t), n < 1, ...).
STAS_DECLARE_ERROR(DomainError);
// Four-point window whose denominator is exactly zero.
STAS_DECLARE_ERROR(SingularWindow);
STAS_DECLARE_ERROR(NoValidWindows);
// Parameter value that makes the requested inversion undefined (a = 0, p = -1).
STAS_DECLARE_ERROR(DegenerateParameter);
STAS_DECLARE_ERROR(ContractViolation);
STAS_DECLARE_ERROR(FormatError);
STAS_DECLARE_ERROR(IllConditioned);
STAS_DECLARE_ERROR(IoError);

#undef STAS_DECLARE_ERROR

// A 4-block that does not satisfy g0 + g1 = a (g2 + g3) closely enough to be
// encoded without loss.
class IdentityViolation : public Error {
public:
  IdentityViolation(std::size_t block, double residual)
      : Error("block " + std::to_string(block) +
              " violates the four-point identity (residual " +
              std::to_string(residual) + ")"),
        block_(block), residual_(residual) {}

  std::string_view name() const noexcept override {
    return "IdentityViolation";
  }
  std::size_t block_index() const noexcept { return block_; }
  double residual() const noexcept { return residual_; }

private:
  std::size_t block_;
  double residual_;
};

} // namespace stas
