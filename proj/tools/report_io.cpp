#include "report_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "polybound/error.hpp"
#include "polybound/poly_text.hpp"

namespace polybound::io {

using nlohmann::json;

std::vector<Complex> parse_polynomial_argument(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  if (start == text.size() || text[start] != '[') return parse_coefficients(text);

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0,
                     "malformed JSON polynomial at position " + std::to_string(e.byte) + ": " +
                         e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw ParseError(start, "JSON polynomial must be a non-empty array");
  }
  std::vector<Complex> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    if (item.is_number()) {
      out.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() &&
               item[1].is_number()) {
      out.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw ParseError(start, "JSON polynomial entry " + std::to_string(i) +
                                  " must be a number or a [re, im] pair");
    }
  }
  return out;
}

double parse_exponent(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") {
    return std::numeric_limits<double>::infinity();
  }
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::invalid_argument,
                "exponent must be a positive number or 'inf', got '" + std::string(text) + "'");
  }
  return p;
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json violation_json(const ViolationRecord& v) {
  return json{{"poly", v.polynomial},   {"p", number(v.p)},
              {"bound", v.bound},       {"bound_value", v.bound_value},
              {"measured", v.measured}, {"slack", v.slack}};
}

json poly_json(const Polynomial& f) { return f.to_string(); }

}  // namespace

json to_json(const BoundReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"name", e.name},
                           {"value", optional_number(e.value)},
                           {"applicable", e.applicable()},
                           {"p_window", json::array({number(e.p_lo), number(e.p_hi)})},
                           {"ref", e.reference}});
  }
  return json{
      {"poly", report.polynomial},
      {"p", number(report.p)},
      {"measured",
       {{"lp", report.measured.lp.value},
        {"lp_err", report.measured.lp.err_estimate},
        {"lp_nodes", report.measured.lp.nodes_used},
        {"lp_converged", report.measured.lp.converged},
        {"sup", report.measured.sup},
        {"mahler", report.measured.mahler}}},
      {"entries", entries},
      {"best", report.best},
      {"footnotes", report.footnotes},
  };
}

json to_json(const VerifyResult& result) {
  json violations = json::array();
  for (const auto& v : result.violations) violations.push_back(violation_json(v));
  json unproven = json::array();
  for (const auto& v : result.unproven_findings) unproven.push_back(violation_json(v));
  json failures = json::array();
  for (const auto& f : result.quadrature_failures) {
    failures.push_back(json{{"poly", f.polynomial}, {"p", number(f.p)}, {"detail", f.detail}});
  }
  json equalities = json::object();
  for (const auto& [name, n] : result.equalities) equalities[name] = n;
  return json{{"instances", result.instances},
              {"checks", result.checks},
              {"violations", violations},
              {"unproven_form_findings", unproven},
              {"quadrature_failures", failures},
              {"equalities", equalities},
              {"ok", result.ok()}};
}

json to_json(const Witnesses& w, double p) {
  return json{{"p", number(p)},
              {"pair_sym_exceeds_hausdorff_young",
               {{"poly", poly_json(w.pair_wins)},
                {"pair_sym", w.pair_wins_sym},
                {"hausdorff_young", w.pair_wins_hy}}},
              {"hausdorff_young_exceeds_pair_sym",
               {{"poly", poly_json(w.hy_wins)},
                {"pair_sym", w.hy_wins_sym},
                {"hausdorff_young", w.hy_wins_hy}}}};
}

std::string to_text(const BoundReport& report) {
  std::ostringstream s;
  s << "polynomial  " << report.polynomial << '\n'
    << "p           " << format_number(report.p) << '\n'
    << "||F||_p     " << format_number(report.measured.lp.value) << "  (err "
    << format_number(report.measured.lp.err_estimate) << ", " << report.measured.lp.nodes_used
    << " nodes" << (report.measured.lp.converged ? "" : ", NOT converged") << ")\n"
    << "||F||_inf   " << format_number(report.measured.sup) << '\n'
    << "M(F)        " << format_number(report.measured.mahler) << "\n\n";

  std::size_t width = 4;
  for (const auto& e : report.entries) width = std::max(width, e.name.size());
  s << std::left << std::setw(static_cast<int>(width + 2)) << "bound" << std::setw(24)
    << "value" << "p window\n";
  for (const auto& e : report.entries) {
    const std::string value = e.value ? format_number(*e.value) : "n/a";
    const std::string window = "[" + format_number(e.p_lo) + ", " + format_number(e.p_hi) + "]";
    s << std::setw(static_cast<int>(width + 2)) << e.name << std::setw(24) << value << window
      << (e.name == report.best ? "  <- best" : "") << '\n';
  }
  s << '\n';
  for (const auto& note : report.footnotes) s << "note: " << note << '\n';
  return s.str();
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

namespace {

std::string optional_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

}  // namespace

std::string subsets_csv(const SubsetScan& scan) {
  std::string out = csv_row({"mask", "b0_abs", "bN_abs", "r", "sym", "asym_proven", "asym_remark"});
  for (const auto& row : scan.table) {
    out += csv_row({row.subset.to_string(), format_number(row.b0_abs), format_number(row.bN_abs),
                    format_number(row.r), optional_field(row.sym),
                    optional_field(row.asym_proven), optional_field(row.asym_remark)});
  }
  return out;
}

std::string sharpness_csv(const std::vector<SharpnessRow>& rows) {
  std::string out = csv_row({"bound", "p", "count", "min", "median", "max"});
  for (const auto& r : rows) {
    out += csv_row({r.bound, format_number(r.p), std::to_string(r.count), format_number(r.min),
                    format_number(r.median), format_number(r.max)});
  }
  return out;
}

std::string violations_csv(const std::vector<ViolationRecord>& rows) {
  std::string out = csv_row({"poly", "p", "bound", "bound_value", "measured", "slack"});
  for (const auto& v : rows) {
    out += csv_row({v.polynomial, format_number(v.p), v.bound, format_number(v.bound_value),
                    format_number(v.measured), format_number(v.slack)});
  }
  return out;
}

}  // namespace polybound::io
