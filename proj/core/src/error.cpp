#include "polybound/error.hpp"

namespace polybound {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::zero_polynomial: return "zero polynomial";
    case ErrorCode::root_finding_failed: return "root-finding failed";
    case ErrorCode::singular_integrand: return "singular integrand";
    case ErrorCode::out_of_range: return "range";
    case ErrorCode::degenerate_binomial: return "degenerate binomial";
    case ErrorCode::inadmissible_pair: return "averaging would retain extra terms";
    case ErrorCode::root_at_origin: return "factor z^k first";
    case ErrorCode::scan_cap_exceeded: return "exhaustive scan cap";
    case ErrorCode::kernel_too_peaked: return "kernel too peaked";
    case ErrorCode::search_exhausted: return "search exhausted";
    case ErrorCode::parse_error: return "parse error";
  }
  return "unknown";
}

}  // namespace polybound
