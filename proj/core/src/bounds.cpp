#include "polybound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "polybound/averaging_filter.hpp"
#include "polybound/binomial_kernel.hpp"
#include "polybound/blaschke.hpp"
#include "polybound/circle_norms.hpp"
#include "polybound/error.hpp"

namespace polybound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool has_origin_root(const RootDecomposition& d) {
  return std::any_of(d.roots.begin(), d.roots.end(),
                     [](Complex r) { return r == Complex{}; });
}

// |a_0 a_N| from the decomposition.
double edge_product(const RootDecomposition& d) {
  double a0 = std::abs(d.leading);
  for (const auto& r : d.roots) a0 *= std::abs(r);
  return a0 * std::abs(d.leading);
}

void require_range(double p, double lo, double hi, const char* what) {
  if (!(p >= lo && p <= hi)) {
    std::ostringstream msg;
    msg << "range: " << what << " requires " << lo << " <= p <= " << hi;
    throw Error(ErrorCode::out_of_range, msg.str());
  }
}

double ell_q_norm(std::span<const Complex> a, double q) {
  double peak = 0.0;
  for (const auto& c : a) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& c : a) s += std::pow(std::abs(c) / peak, q);
  return peak * std::pow(s, 1.0 / q);
}

}  // namespace

double thm1_sym(const RootDecomposition& d, double p) {
  require_range(p, 1.0, 2.0, "symmetric generalized bound");
  double outer = 1.0;
  double inner = 1.0;
  for (const auto& r : d.roots) {
    const double m = std::pow(std::abs(r), p);
    outer *= std::max(1.0, m);
    inner *= std::min(1.0, m);
  }
  return bp_constant(p) * std::abs(d.leading) * std::pow(outer + inner, 1.0 / p);
}

double thm1_asym(const RootDecomposition& d, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::out_of_range, "range: asymmetric generalized bound requires finite p >= 1");
  }
  const double m = mahler_roots(d);
  if (has_origin_root(d)) return m;
  const double k = p * edge_product(d) / (2.0 * m * m);
  return m * std::pow(1.0 + k * k, 1.0 / p);
}

double goncalves_bound(const RootDecomposition& d) {
  double outer = 1.0;
  double inner = 1.0;
  for (const auto& r : d.roots) {
    const double m = std::norm(r);
    outer *= std::max(1.0, m);
    inner *= std::min(1.0, m);
  }
  return std::abs(d.leading) * std::sqrt(outer + inner);
}

double landau_bound(const RootDecomposition& d) { return mahler_roots(d); }

double parseval_norm(const Polynomial& f) {
  return ell_q_norm(f.coefficients(), 2.0);
}

double easy_l1_bound(const Polynomial& f) {
  double peak = 0.0;
  for (const auto& c : f.coefficients()) peak = std::max(peak, std::abs(c));
  return peak;
}

double hausdorff_young_bound(const Polynomial& f, double p) {
  if (!(p > 1.0 && p <= 2.0)) {
    throw Error(ErrorCode::out_of_range,
                "range: Hausdorff-Young bound requires 1 < p <= 2 (use easy_l1_bound at p = 1)");
  }
  return ell_q_norm(f.coefficients(), p / (p - 1.0));
}

double crossover_threshold() {
  constexpr double pi = std::numbers::pi;
  return pi / (2.0 * (2.0 - std::sqrt(4.0 + 2.0 * pi - pi * pi)));
}

double optimal_p_constant() {
  auto g = [](double c) {
    const double s = 1.0 + c * c;
    return 2.0 * c * c - s * std::log(s);
  };
  auto dg = [](double c) {
    const double s = 1.0 + c * c;
    return 4.0 * c - 2.0 * c * std::log(s) - 2.0 * c;
  };
  // g > 0 on (0, c) and g < 0 beyond; g(1.9) > 0 > g(2).
  double lo = 1.9;
  double hi = 2.0;
  for (int i = 0; i < 30; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  double c = 0.5 * (lo + hi);
  for (int i = 0; i < 20; ++i) {
    const double step = g(c) / dg(c);
    c -= step;
    if (std::abs(step) < 1e-16 * c) break;
  }
  return c;
}

OptimalP optimal_p(const RootDecomposition& d) {
  if (has_origin_root(d)) {
    throw Error(ErrorCode::root_at_origin, "factor z^k first: optimal p needs a_0 != 0");
  }
  const double m = mahler_roots(d);
  const double p = 2.0 * optimal_p_constant() * m * m / edge_product(d);
  return {p, 1.0, p};
}

const BoundEntry* BoundReport::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

BoundReport bound_report(const Polynomial& f, double p, const ReportOptions& options) {
  if (f.is_zero()) {
    throw Error(ErrorCode::zero_polynomial, "zero polynomial: no bound applies");
  }
  if (!(p > 0.0) || std::isnan(p)) {
    throw Error(ErrorCode::invalid_argument, "exponent p must be > 0");
  }
  options.quadrature.validate();

  const Polynomial core = f.core();
  const bool infinite = std::isinf(p);

  BoundReport report;
  report.polynomial = f.to_string();
  report.p = p;

  std::optional<RootDecomposition> d;
  if (core.degree() >= 1) d = find_roots(core);

  report.measured.sup = sup_norm(core);
  report.measured.mahler = d ? mahler_roots(*d) : std::abs(core.leading());
  report.measured.lp = infinite ? NormValue{report.measured.sup, 0.0, 0, true}
                                : lp_norm(core, p, options.quadrature);

  auto in = [&](double lo, double hi) { return p >= lo && p <= hi; };
  auto add = [&](std::string name, double lo, double hi, bool applicable,
                 auto&& compute, std::string ref) {
    BoundEntry e{std::move(name), std::nullopt, lo, hi, std::move(ref)};
    if (applicable) e.value = compute();
    report.entries.push_back(std::move(e));
  };

  add("mahler_chain", 0.0, kInf, true, [&] { return report.measured.mahler; },
      "basic inequality M(f) <= ||f||_p <= ||f||_q <= ||f||_inf with Jensen's identity "
      "M(F) = |a_N| prod max{1,|alpha_n|}");

  if (d) {
    const bool finite = !infinite;
    const bool a0_nonzero = !has_origin_root(*d);
    add("thm1_sym", 1.0, 2.0, in(1.0, 2.0), [&] { return thm1_sym(*d, p); },
        "generalized Goncalves inequality, symmetric form with B_p (1 <= p <= 2)");
    add("thm1_asym", 1.0, kInf, finite && p >= 1.0, [&] { return thm1_asym(*d, p); },
        "generalized Goncalves inequality, M(F)(1 + p^2|a_0 a_N|^2/(4M(F)^4))^(1/p) (p >= 1)");
    add("goncalves", 2.0, 2.0, p == 2.0, [&] { return goncalves_bound(*d); },
        "Goncalves' inequality |a_N|(prod max{1,|alpha|^2} + prod min{1,|alpha|^2})^(1/2) (p = 2)");
    add("landau", 2.0, 2.0, p == 2.0, [&] { return landau_bound(*d); },
        "Landau's inequality ||F||_2 >= |a_N| prod max{1,|alpha_n|} (p = 2)");
    add("parseval", 2.0, 2.0, p == 2.0, [&] { return parseval_norm(core); },
        "Parseval's identity ||F||_2 = (sum |a_n|^2)^(1/2) (p = 2)");
    add("easy_l1", 1.0, 1.0, p == 1.0, [&] { return easy_l1_bound(core); },
        "||F||_1 >= max |a_n| from a_n = integral F(e(t)) e(-nt) dt (p = 1)");
    add("hausdorff_young", 1.0, 2.0, p > 1.0 && p <= 2.0,
        [&] { return hausdorff_young_bound(core, p); },
        "Hausdorff-Young inequality ||F||_p >= (sum |a_n|^q)^(1/q), 1/p + 1/q = 1 (1 < p <= 2)");

    for (const auto& pair : admissible_pairs(core)) {
      const PairBounds pb = pair_bounds(core, pair, p);
      const std::string tag = "[" + std::to_string(pair.L) + "," + std::to_string(pair.M) + "]";
      add("pair_sup" + tag, kInf, kInf, infinite, [&] { return *pb.sup_bound.value; },
          "coefficient-pair bound ||F||_inf >= |a_L| + |a_M| for M - L > max{L, N - M}");
      add("pair_sym" + tag, 1.0, 2.0, pb.sym_bound.applicable(),
          [&] { return *pb.sym_bound.value; },
          "coefficient-pair bound ||F||_p >= B_p(|a_L|^p + |a_M|^p)^(1/p) (1 <= p <= 2)");
      add("pair_asym" + tag, 1.0, kInf, pb.asym_bound.applicable(),
          [&] { return *pb.asym_bound.value; },
          "coefficient-pair bound max(1 + (p min/(2 max))^2)^(1/p) over |a_L|, |a_M| "
          "(p >= 1, not both zero)");
    }

    if (a0_nonzero) {
      const SubsetChoice canonical = canonical_subset(*d);
      add("blaschke_sym_canonical", 1.0, 2.0, in(1.0, 2.0),
          [&] { return gen_bound_sym(*d, canonical, p); },
          "Blaschke construction G_E = B_E F at E = {n : |alpha_n| <= 1}, symmetric binomial "
          "bound on its edge coefficients (1 <= p <= 2)");
      add("blaschke_asym_canonical", 1.0, kInf, finite && p >= 1.0,
          [&] { return gen_bound_asym(*d, canonical, p, AsymForm::proven); },
          "Blaschke construction G_E = B_E F at E = {n : |alpha_n| <= 1}, asymmetric binomial "
          "bound on its edge coefficients (p >= 1)");

      if (options.include_unproven && finite && p >= 1.0 && d->degree() <= kMaxScanDegree) {
        const SubsetScan scan = scan_subsets(*d, p);
        const SubsetRow* top = nullptr;
        for (const auto& row : scan.table) {
          if (!top || *row.asym_remark > *top->asym_remark) top = &row;
        }
        std::ostringstream note;
        note.precision(17);
        note << "unproven remark-form maximum over subsets: " << *top->asym_remark
             << " at E = " << top->subset.to_string() << "; " << kRemarkFormFootnote;
        report.footnotes.push_back(note.str());
      }
    }
  }

  const BoundEntry* best = nullptr;
  for (const auto& e : report.entries) {
    if (e.applicable() && (!best || *e.value > *best->value)) best = &e;
  }
  report.best = best ? best->name : std::string{};
  report.footnotes.insert(report.footnotes.begin(), kCrossoverFootnote);
  return report;
}

}  // namespace polybound
