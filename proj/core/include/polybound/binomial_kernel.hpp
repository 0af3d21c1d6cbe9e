#pragma once

#include "polybound/polynomial.hpp"
#include "polybound/quadrature.hpp"

namespace polybound {

/// Kernel functions accept 0 < p <= kMaxKernelExponent.
inline constexpr double kMaxKernelExponent = 64.0;

/// Strong type for the exponent of a kernel evaluation.
class PExponent {
 public:
  explicit PExponent(double p);
  double value() const noexcept { return p_; }

 private:
  double p_;
};

/// B_p = (Gamma(p+1) / (2 Gamma(p/2+1)^2))^(1/p), the normalized L_p norm of
/// 1 - z. B_1 = 2/pi and B_2 = 1.
double bp_constant(double p);

enum class KernelMethod {
  series,
  functional_equation_series,
  quadrature,
};

const char* to_string(KernelMethod m) noexcept;

struct KernelValue {
  double value = 0.0;
  KernelMethod method = KernelMethod::series;
};

/// I_p(r) = integral_0^1 |1 - r^(1/p) e(t)|^p dt.
///
/// r <= 0.75 uses the binomial series sum C(p/2,m)^2 r^(2m/p); r >= 4/3 uses
/// I_p(r) = r I_p(1/r) with the series; the band in between is integrated
/// directly, since the series converges only like m^(-p-2) near r = 1.
KernelValue ip_value(double p, double r);

/// Series branch only; 0 <= r <= 1 (r = 1 is summed with tail extrapolation).
double ip_series(double p, double r);

/// Quadrature branch only; any r >= 0.
double ip_quadrature(double p, double r);

enum class Side { left, right, automatic };

/// I_p'(r). For r < 1 the termwise-differentiated series; for r > 1 the
/// differentiated functional equation I_p'(r) = I_p(1/r) - I_p'(1/r)/r.
/// At r = 1, Side::automatic returns I_p(1)/2 and Side::left / Side::right
/// return the one-sided limits of the series representations, obtained by
/// summing the boundary series (Abel) with Richardson tail extrapolation.
double ip_derivative(double p, double r, Side side = Side::automatic);

/// integral |1 - r e(t)|^p P(r,t) dt with the Poisson kernel
/// P(r,t) = (1 - r^2) / |1 - r e(t)|^2, for 0 < r <= 1 - 1e-6.
double poisson_weighted_integral(double p, double r);

/// I_p(1) (1 + r) / 2, the tangent-line floor of the convex kernel; 0 < p <= 2.
double convexity_floor(double p, double r);

/// ||a z^L + b z^M||_p >= hi (1 + (p lo / (2 hi))^2)^(1/p), hi/lo the larger
/// and smaller of |a|, |b|. Valid for every p > 0.
double binomial_bound_asym(Complex a, Complex b, double p);

/// ||a z^L + b z^M||_p >= B_p (|a|^p + |b|^p)^(1/p) for 0 < p <= 2.
double binomial_bound_sym(Complex a, Complex b, double p);

}  // namespace polybound
