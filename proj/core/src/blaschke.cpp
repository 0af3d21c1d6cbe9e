#include "polybound/blaschke.hpp"

#include <cmath>
#include <sstream>

#include "polybound/binomial_kernel.hpp"
#include "polybound/circle_norms.hpp"
#include "polybound/error.hpp"

namespace polybound {

namespace {

void require_no_origin_root(const RootDecomposition& d) {
  for (const auto& r : d.roots) {
    if (r == Complex{}) {
      throw Error(ErrorCode::root_at_origin,
                  "factor z^k first: root at the origin (a_0 = 0)");
    }
  }
}

void require_subset(const RootDecomposition& d, const SubsetChoice& e) {
  if (e.degree() != d.degree()) {
    throw Error(ErrorCode::invalid_argument,
                "subset built for a different degree than the decomposition");
  }
}

// |b0|, |bN| from root moduli; bit i of mask selects root i.
std::pair<double, double> edge_moduli(const RootDecomposition& d, std::uint64_t mask) {
  double b0 = std::abs(d.leading);
  double bN = b0;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    const double m = std::abs(d.roots[i]);
    if (mask & (std::uint64_t{1} << i)) {
      bN *= m;
    } else {
      b0 *= m;
    }
  }
  return {b0, bN};
}

double proven_asym(double b0, double bN, double p) {
  return binomial_bound_asym(b0, bN, p);
}

double remark_asym(double b0, double a0aN, double p) {
  return b0 * std::pow(1.0 + p * p * a0aN * a0aN / (4.0 * std::pow(b0, 4)), 1.0 / p);
}

void require_p_at_least_one(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::out_of_range, "range: bound requires finite p >= 1");
  }
}

}  // namespace

SubsetChoice::SubsetChoice(std::uint64_t mask, int degree) : mask_(mask), degree_(degree) {
  if (degree < 0 || degree > 64 ||
      (degree < 64 && (mask >> degree) != 0)) {
    throw Error(ErrorCode::invalid_argument, "subset index outside 1..N");
  }
}

SubsetChoice SubsetChoice::from_indices(const std::vector<int>& one_based, int degree) {
  std::uint64_t mask = 0;
  for (int i : one_based) {
    if (i < 1 || i > degree) {
      throw Error(ErrorCode::invalid_argument, "subset index outside 1..N");
    }
    mask |= std::uint64_t{1} << (i - 1);
  }
  return SubsetChoice(mask, degree);
}

bool SubsetChoice::contains(int one_based) const noexcept {
  return one_based >= 1 && one_based <= degree_ &&
         (mask_ & (std::uint64_t{1} << (one_based - 1))) != 0;
}

std::vector<int> SubsetChoice::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= degree_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

SubsetChoice SubsetChoice::complement() const {
  const std::uint64_t full =
      degree_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << degree_) - 1;
  return SubsetChoice(full & ~mask_, degree_);
}

std::string SubsetChoice::to_string() const {
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (int i : indices()) {
    if (!first) s << ',';
    s << i;
    first = false;
  }
  s << '}';
  return s.str();
}

const char* to_string(AsymForm form) noexcept {
  return form == AsymForm::proven ? "proven" : "remark";
}

EdgeCoefficients edge_coeffs(const RootDecomposition& d, const SubsetChoice& e) {
  require_subset(d, e);
  require_no_origin_root(d);
  EdgeCoefficients out{d.leading, d.leading, 1.0};
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (e.contains(static_cast<int>(i) + 1)) {
      out.bN *= -std::conj(d.roots[i]);
    } else {
      out.b0 *= -d.roots[i];
    }
  }
  out.r = mahler_roots(d) / std::abs(out.b0);
  return out;
}

Polynomial blaschke_poly(const RootDecomposition& d, const SubsetChoice& e) {
  require_subset(d, e);
  require_no_origin_root(d);
  // Start from the constant a_N and multiply in linear factors.
  std::vector<Complex> c{d.leading};
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    const bool inside = e.contains(static_cast<int>(i) + 1);
    // factor u + v z
    const Complex u = inside ? Complex{1.0, 0.0} : -d.roots[i];
    const Complex v = inside ? -std::conj(d.roots[i]) : Complex{1.0, 0.0};
    c.push_back(Complex{});
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = u * c[k] + v * c[k - 1];
    c[0] *= u;
  }
  return Polynomial::normalize(c);
}

Polynomial blaschke_poly(const Polynomial& f, const SubsetChoice& e) {
  if (f.zero_factor() > 0) {
    throw Error(ErrorCode::root_at_origin,
                "factor z^k first: root at the origin (a_0 = 0)");
  }
  return blaschke_poly(find_roots(f), e);
}

double gen_bound_sym(const RootDecomposition& d, const SubsetChoice& e, double p) {
  require_subset(d, e);
  require_no_origin_root(d);
  if (!(p >= 1.0 && p <= 2.0)) {
    throw Error(ErrorCode::out_of_range, "range: symmetric bound requires 1 <= p <= 2");
  }
  const auto [b0, bN] = edge_moduli(d, e.mask());
  return binomial_bound_sym(b0, bN, p);
}

double gen_bound_asym(const RootDecomposition& d, const SubsetChoice& e, double p,
                      AsymForm form) {
  require_subset(d, e);
  require_no_origin_root(d);
  require_p_at_least_one(p);
  const auto [b0, bN] = edge_moduli(d, e.mask());
  if (form == AsymForm::proven) return proven_asym(b0, bN, p);
  return remark_asym(b0, b0 * bN, p);
}

SubsetChoice canonical_subset(const RootDecomposition& d) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (std::abs(d.roots[i]) <= 1.0 + 1e-10) mask |= std::uint64_t{1} << i;
  }
  return SubsetChoice(mask, d.degree());
}

SubsetScan scan_subsets(const RootDecomposition& d, double p, bool keep_table) {
  if (d.degree() > kMaxScanDegree) {
    throw Error(ErrorCode::scan_cap_exceeded,
                "exhaustive scan cap: degree exceeds 24; use canonical_subset");
  }
  require_no_origin_root(d);
  if (!(p > 0.0)) throw Error(ErrorCode::invalid_argument, "exponent p must be > 0");

  const int n = d.degree();
  const double mahler = mahler_roots(d);
  const bool sym_ok = p >= 1.0 && p <= 2.0;
  const bool asym_ok = p >= 1.0 && std::isfinite(p);
  const std::uint64_t canonical = canonical_subset(d).mask();
  const std::uint64_t count = std::uint64_t{1} << n;

  SubsetScan scan;
  if (keep_table) scan.table.reserve(count);

  auto consider = [&](std::optional<std::pair<SubsetChoice, double>>& best,
                      std::uint64_t mask, double value) {
    if (!best) {
      best.emplace(SubsetChoice(mask, n), value);
      return;
    }
    const double incumbent = best->second;
    const double tol = 1e-12 * std::max(std::abs(incumbent), std::abs(value));
    if (value > incumbent + tol) {
      best.emplace(SubsetChoice(mask, n), value);
    } else if (std::abs(value - incumbent) <= tol && mask == canonical) {
      best.emplace(SubsetChoice(mask, n), std::max(value, incumbent));
    }
  };

  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto [b0, bN] = edge_moduli(d, mask);
    SubsetRow row;
    row.subset = SubsetChoice(mask, n);
    row.b0_abs = b0;
    row.bN_abs = bN;
    row.r = mahler / b0;
    if (sym_ok) {
      row.sym = binomial_bound_sym(b0, bN, p);
      consider(scan.best_sym, mask, *row.sym);
    }
    if (asym_ok) {
      row.asym_proven = proven_asym(b0, bN, p);
      row.asym_remark = remark_asym(b0, b0 * bN, p);
      consider(scan.best_asym_proven, mask, *row.asym_proven);
    }
    if (keep_table) scan.table.push_back(std::move(row));
  }
  return scan;
}

bool improvement_condition(double mahler, double a0aN, double p, double r) {
  if (!(mahler > 0.0) || !(a0aN > 0.0) || !(r >= 1.0) || !(p >= 1.0)) {
    throw Error(ErrorCode::invalid_argument,
                "improvement condition needs M > 0, |a_0 a_N| > 0, r >= 1, p >= 1");
  }
  const double m4 = 4.0 * std::pow(mahler, 4);
  const double c = p * p * a0aN * a0aN;
  return (m4 + c) * std::pow(r, p) < m4 + c * std::pow(r, 4);
}

}  // namespace polybound
