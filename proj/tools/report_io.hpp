#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polybound/blaschke.hpp"
#include "polybound/bounds.hpp"
#include "polybound/ensemble.hpp"

namespace polybound::io {

/// Accepts the comma-separated text format or a JSON array whose entries
/// are [re, im] pairs or plain numbers.
std::vector<Complex> parse_polynomial_argument(std::string_view text);

/// Exponent argument: a positive number or "inf".
double parse_exponent(std::string_view text);

/// Non-finite numbers serialize as the strings "inf" / "-inf".
nlohmann::json number(double x);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const VerifyResult& result);
nlohmann::json to_json(const Witnesses& w, double p);

/// Aligned human-readable table of a report.
std::string to_text(const BoundReport& report);

/// RFC 4180: fields containing comma, quote, CR or LF are quoted and inner
/// quotes doubled. Rows end with CRLF.
std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);

/// Shortest round-trip decimal, or "inf".
std::string format_number(double x);

/// mask, |b0|, |bN|, r, sym, asym_proven, asym_remark (+ header row).
std::string subsets_csv(const SubsetScan& scan);
std::string sharpness_csv(const std::vector<SharpnessRow>& rows);
std::string violations_csv(const std::vector<ViolationRecord>& rows);

}  // namespace polybound::io
