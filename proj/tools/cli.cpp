#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "polybound/binomial_kernel.hpp"
#include "polybound/blaschke.hpp"
#include "polybound/bounds.hpp"
#include "polybound/ensemble.hpp"
#include "polybound/error.hpp"
#include "polybound/poly_text.hpp"
#include "report_io.hpp"

namespace polybound::cli {

namespace {

using nlohmann::json;

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(io::parse_exponent(item));
  if (grid.empty()) throw Error(ErrorCode::invalid_argument, "empty --p-grid");
  return grid;
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

struct EnsembleFlags {
  std::size_t count = 1000;
  std::uint64_t seed = 20240601;
  std::string p_grid = "1,1.25,1.5,2";
  std::string mode = "roots";
  int degree_min = 1;
  int degree_max = 10;
  double tol = 1e-7;
  bool include_unproven = false;
  unsigned threads = 0;

  void attach(CLI::App* app) {
    app->add_option("--count", count, "number of random polynomials")->capture_default_str();
    app->add_option("--seed", seed, "ensemble seed")->capture_default_str();
    app->add_option("--p-grid", p_grid, "comma-separated exponents")->capture_default_str();
    app->add_option("--mode", mode, "roots | box | mixed | cyclotomic")->capture_default_str();
    app->add_option("--degree-min", degree_min)->capture_default_str();
    app->add_option("--degree-max", degree_max)->capture_default_str();
    app->add_option("--tol", tol, "relative violation tolerance")->capture_default_str();
    app->add_flag("--include-unproven", include_unproven,
                  "also stress the remark-form asymmetric Blaschke value");
    app->add_option("--threads", threads, "worker threads (0: POLYBOUND_THREADS or all cores)");
  }

  EnsembleSpec spec() const {
    EnsembleSpec s;
    s.count = count;
    s.seed = seed;
    s.p_grid = parse_grid(p_grid);
    s.mode = sampling_mode_from_string(mode);
    s.degree_min = degree_min;
    s.degree_max = degree_max;
    s.validate();
    return s;
  }

  VerifyOptions options() const {
    VerifyOptions o;
    o.tol = tol;
    o.include_unproven = include_unproven;
    o.threads = threads;
    return o;
  }
};

void print_constants(std::ostream& out, bool as_json) {
  const std::vector<double> grid{0.5, 1.0, 1.25, 1.5, 1.9, 2.0, 3.0, 4.0};
  const double crossover = crossover_threshold();
  const double c = optimal_p_constant();
  const std::vector<std::string> notes{
      "B_p = (Gamma(p+1) / (2 Gamma(p/2+1)^2))^(1/p) = ((1/2) integral |1 - e(t)|^p dt)^(1/p); "
      "B_1 = 2/pi, B_2 = 1",
      "optimal_p_constant: positive root of 2c^2 = (1 + c^2) log(1 + c^2)",
      kCrossoverFootnote,
  };
  if (as_json) {
    json table = json::array();
    for (double p : grid) table.push_back(json{{"p", p}, {"B_p", bp_constant(p)}});
    out << json{{"bp_constant", table},
                {"crossover_threshold", crossover},
                {"optimal_p_constant", c},
                {"footnotes", notes}}
                   .dump(2)
        << '\n';
    return;
  }
  out << "B_p constants\n";
  out << "  " << std::left << std::setw(8) << "p" << "B_p\n";
  for (double p : grid) {
    out << "  " << std::left << std::setw(8) << fixed(p, 6) << fixed(bp_constant(p), 15) << '\n';
  }
  out << "\ncrossover_threshold  " << fixed(crossover, 15) << "  [1]\n";
  out << "optimal_p_constant   " << fixed(c, 15) << "  [2]\n\n";
  out << "[0] " << notes[0] << '\n';
  out << "[1] " << notes[2] << '\n';
  out << "[2] " << notes[1] << '\n';
}

int dispatch(CLI::App& app, std::ostream& out, std::ostream& err, int argc,
             const char* const* argv) {
  std::string poly_text;
  std::string p_text = "2";
  std::string format = "json";
  bool include_unproven = false;

  auto* report = app.add_subcommand("report", "bound catalog and measured norms for one polynomial");
  report->add_option("poly", poly_text, "coefficients, ascending degree")->required();
  report->add_option("--p", p_text, "exponent (number or inf)")->capture_default_str();
  report->add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  report->add_flag("--include-unproven", include_unproven,
                   "note the largest remark-form Blaschke value in the footnotes");

  EnsembleFlags vflags;
  auto* verify = app.add_subcommand("verify", "check every proven inequality on a random ensemble");
  vflags.attach(verify);
  bool verify_csv = false;
  verify->add_flag("--csv", verify_csv, "print violation records as CSV instead of JSON");

  auto* constants = app.add_subcommand("constants", "B_p table and the two special constants");
  std::string constants_format = "text";
  constants->add_option("--format", constants_format, "text | json")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string subsets_poly;
  std::string subsets_p = "1";
  auto* subsets = app.add_subcommand("subsets", "exhaustive Blaschke subset scan as CSV");
  subsets->add_option("poly", subsets_poly)->required();
  subsets->add_option("--p", subsets_p)->capture_default_str();

  std::string witness_p = "1.5";
  auto* witness = app.add_subcommand("witness", "non-comparability witnesses (1 < p < 2)");
  witness->add_option("--p", witness_p)->capture_default_str();

  EnsembleFlags sflags;
  auto* sharp = app.add_subcommand("sharpness", "bound / measured ratio statistics as CSV");
  sflags.attach(sharp);

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (report->parsed()) {
      const Polynomial f = Polynomial::normalize(io::parse_polynomial_argument(poly_text));
      ReportOptions opts;
      opts.include_unproven = include_unproven;
      const BoundReport r = bound_report(f, io::parse_exponent(p_text), opts);
      if (format == "text") {
        out << io::to_text(r);
      } else {
        out << io::to_json(r).dump(2) << '\n';
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const VerifyResult result = verify_ensemble(vflags.spec(), vflags.options());
      if (verify_csv) {
        out << io::violations_csv(result.violations);
      } else {
        out << io::to_json(result).dump(2) << '\n';
      }
      return result.ok() ? kExitOk : kExitViolation;
    }
    if (constants->parsed()) {
      print_constants(out, constants_format == "json");
      return kExitOk;
    }
    if (subsets->parsed()) {
      const Polynomial f = Polynomial::normalize(io::parse_polynomial_argument(subsets_poly));
      if (f.zero_factor() > 0) {
        throw Error(ErrorCode::root_at_origin, "factor z^k first: a_0 = 0");
      }
      out << io::subsets_csv(scan_subsets(find_roots(f), io::parse_exponent(subsets_p)));
      return kExitOk;
    }
    if (witness->parsed()) {
      const double p = io::parse_exponent(witness_p);
      out << io::to_json(noncomparability_witnesses(p), p).dump(2) << '\n';
      return kExitOk;
    }
    if (sharp->parsed()) {
      out << io::sharpness_csv(sharpness_stats(sflags.spec(), sflags.options()));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"polybound: lower bounds on L_p norms of polynomials on the unit circle"};
  app.name("polybound");
  return dispatch(app, out, err, argc, argv);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"polybound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace polybound::cli
