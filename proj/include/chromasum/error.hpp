#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chromasum {

enum class Errc {
  DenominatorDivisibleByP,
  NotPrime,
  NotIrreducible,
  EvenCharacteristic,
  FieldTooLarge,
  InvalidModulus,
  DivisionByZero,
  SpecMismatch,
  RingMismatch,
  OutOfRange,
  NotOnCircle,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the math layer carries one of the codes above so
// callers (and the CLI exit-code mapping) can switch on it.
class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chromasum
