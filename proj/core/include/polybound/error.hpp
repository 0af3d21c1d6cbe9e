#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polybound {

enum class ErrorCode {
  invalid_argument,
  zero_polynomial,
  root_finding_failed,
  singular_integrand,
  out_of_range,
  degenerate_binomial,
  inadmissible_pair,
  root_at_origin,
  scan_cap_exceeded,
  kernel_too_peaked,
  search_exhausted,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported as a polybound::Error carrying a code
/// that callers (the CLI in particular) can dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polybound
