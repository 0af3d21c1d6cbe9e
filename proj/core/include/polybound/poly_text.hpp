#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polybound/error.hpp"
#include "polybound/polynomial.hpp"

namespace polybound {

/// Parse failure in the polynomial text format; `position` is the 0-based
/// character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::parse_error, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Comma-separated coefficients in ascending degree. Each entry is a real
/// literal ("-101", "2.5e-3"), a complex pair "re+imi" / "re-imi", or a pure
/// imaginary "imi" (a bare "i" means 1i).
std::vector<Complex> parse_coefficients(std::string_view text);

inline Polynomial parse_polynomial(std::string_view text) {
  return Polynomial::normalize(parse_coefficients(text));
}

/// Shortest round-trip representation, one token per coefficient.
std::string format_coefficient(Complex c);
std::string format_polynomial(std::span<const Complex> coefficients);

}  // namespace polybound
