#include "polybound/binomial_kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "polybound/error.hpp"

namespace polybound {

namespace {

constexpr double kSeriesUpper = 0.75;
constexpr double kSeriesLowerInverse = 4.0 / 3.0;
constexpr long kMaxSeriesTerms = 200'000'000;

double checked_p(double p) { return PExponent(p).value(); }

double squared_modulus_one_minus(double x, double t) {
  // |1 - x e(t)|^2 without cancellation near t = 0.
  const double s = std::sin(std::numbers::pi * t);
  return (1.0 - x) * (1.0 - x) + 4.0 * x * s * s;
}

// sum_{m>=0} C(p/2,m)^2 w^m, or with derivative = true
// sum_{m>=1} C(p/2,m)^2 (2m/p) w^m, for 0 <= w < 1.
double binomial_series(double p, double w, bool derivative) {
  const double half = p / 2.0;
  double coeff = 1.0;  // C(p/2, m)
  double power = 1.0;  // w^m
  long double sum = derivative ? 0.0L : 1.0L;
  double previous = derivative ? 0.0 : 1.0;
  bool decreasing = false;
  for (long m = 0; m < kMaxSeriesTerms; ++m) {
    coeff *= (half - static_cast<double>(m)) / static_cast<double>(m + 1);
    power *= w;
    if (coeff == 0.0 || power == 0.0) break;
    double term = coeff * coeff * power;
    if (derivative) term *= 2.0 * static_cast<double>(m + 1) / p;
    sum += term;
    if (term < previous) decreasing = true;
    if (decreasing && term < 1e-15 * static_cast<double>(sum)) break;
    previous = term;
  }
  return static_cast<double>(sum);
}

// Boundary value (w = 1) of the same series. The terms behave like
// m^(-s-1) (s = p+1 for the value, s = p for the derivative), so the tail
// after M terms expands in M^(-s), M^(-s-1), ...; partial sums at doubling M
// are combined by Richardson extrapolation.
double boundary_series(double p, bool derivative) {
  const double half = p / 2.0;
  const double s = derivative ? p : p + 1.0;
  constexpr int kLevels = 5;
  constexpr long kBase = 4096;

  std::array<double, kLevels> partial{};
  double coeff = 1.0;
  long double sum = derivative ? 0.0L : 1.0L;
  long m = 0;
  for (int level = 0; level < kLevels; ++level) {
    const long target = kBase << level;
    for (; m < target; ++m) {
      coeff *= (half - static_cast<double>(m)) / static_cast<double>(m + 1);
      double term = coeff * coeff;
      if (derivative) term *= 2.0 * static_cast<double>(m + 1) / p;
      sum += term;
    }
    partial[static_cast<std::size_t>(level)] = static_cast<double>(sum);
  }
  for (int j = 1; j < kLevels; ++j) {
    const double factor = std::pow(2.0, s + static_cast<double>(j - 1));
    for (int k = 0; k + j < kLevels; ++k) {
      const auto i = static_cast<std::size_t>(k);
      partial[i] = (factor * partial[i + 1] - partial[i]) / (factor - 1.0);
    }
  }
  return partial[0];
}

}  // namespace

PExponent::PExponent(double p) : p_(p) {
  if (!std::isfinite(p) || !(p > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "exponent p must be finite and > 0");
  }
  if (p > kMaxKernelExponent) {
    throw Error(ErrorCode::out_of_range, "range: kernel exponent p exceeds 64");
  }
}

const char* to_string(KernelMethod m) noexcept {
  switch (m) {
    case KernelMethod::series: return "series";
    case KernelMethod::functional_equation_series:
      return "functional-equation+series";
    case KernelMethod::quadrature: return "quadrature";
  }
  return "unknown";
}

double bp_constant(double p) {
  checked_p(p);
  const double log_ratio =
      std::lgamma(p + 1.0) - std::log(2.0) - 2.0 * std::lgamma(p / 2.0 + 1.0);
  return std::exp(log_ratio / p);
}

double ip_series(double p, double r) {
  checked_p(p);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::out_of_range, "range: series branch needs 0 <= r <= 1");
  }
  if (r == 1.0) return boundary_series(p, false);
  return binomial_series(p, std::pow(r, 2.0 / p), false);
}

double ip_quadrature(double p, double r) {
  checked_p(p);
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::invalid_argument, "r must be finite and >= 0");
  }
  const double x = std::pow(r, 1.0 / p);
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-13;
  const auto m = periodic_mean(
      [&](double t) { return std::pow(squared_modulus_one_minus(x, t), p / 2.0); },
      cfg);
  return m.mean;
}

KernelValue ip_value(double p, double r) {
  checked_p(p);
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::invalid_argument, "r must be finite and >= 0");
  }
  if (r <= kSeriesUpper) return {ip_series(p, r), KernelMethod::series};
  if (r >= kSeriesLowerInverse) {
    return {r * ip_series(p, 1.0 / r), KernelMethod::functional_equation_series};
  }
  return {ip_quadrature(p, r), KernelMethod::quadrature};
}

double ip_derivative(double p, double r, Side side) {
  checked_p(p);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::invalid_argument, "r must be finite and > 0");
  }
  if (r == 1.0) {
    switch (side) {
      case Side::automatic:
        return std::pow(bp_constant(p), p);  // I_p(1) / 2 = B_p^p
      case Side::left:
        return boundary_series(p, true);
      case Side::right:
        return boundary_series(p, false) - boundary_series(p, true);
    }
  }
  if (r < 1.0) return binomial_series(p, std::pow(r, 2.0 / p), true) / r;
  const double s = 1.0 / r;
  return ip_value(p, s).value - ip_derivative(p, s) / r;
}

double poisson_weighted_integral(double p, double r) {
  checked_p(p);
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorCode::out_of_range, "range: Poisson integral needs 0 < r < 1");
  }
  if (r > 1.0 - 1e-6) {
    throw Error(ErrorCode::kernel_too_peaked,
                "kernel too peaked: r exceeds 1 - 1e-6");
  }
  QuadratureConfig cfg;
  cfg.max_nodes = std::size_t{1} << 24;
  cfg.rel_tol = 1e-12;
  const double weight = 1.0 - r * r;
  const auto m = periodic_mean(
      [&](double t) {
        return weight * std::pow(squared_modulus_one_minus(r, t), (p - 2.0) / 2.0);
      },
      cfg);
  return m.mean;
}

double convexity_floor(double p, double r) {
  checked_p(p);
  if (p > 2.0) {
    throw Error(ErrorCode::out_of_range,
                "convexity range: the floor is established only for 0 < p <= 2");
  }
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::invalid_argument, "r must be finite and > 0");
  }
  const double i1 = 2.0 * std::pow(bp_constant(p), p);
  return i1 * (1.0 + r) / 2.0;
}

double binomial_bound_asym(Complex a, Complex b, double p) {
  if (!std::isfinite(p) || !(p > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "exponent p must be finite and > 0");
  }
  const double hi = std::max(std::abs(a), std::abs(b));
  const double lo = std::min(std::abs(a), std::abs(b));
  if (hi == 0.0) {
    throw Error(ErrorCode::degenerate_binomial,
                "degenerate binomial: both coefficients are zero");
  }
  const double ratio = p * lo / (2.0 * hi);
  return hi * std::pow(1.0 + ratio * ratio, 1.0 / p);
}

double binomial_bound_sym(Complex a, Complex b, double p) {
  checked_p(p);
  if (p > 2.0) {
    throw Error(ErrorCode::out_of_range, "range: symmetric binomial bound needs p <= 2");
  }
  const double sum = std::pow(std::abs(a), p) + std::pow(std::abs(b), p);
  return bp_constant(p) * std::pow(sum, 1.0 / p);
}

}  // namespace polybound
