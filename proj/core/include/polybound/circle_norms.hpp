#pragma once

#include "polybound/polynomial.hpp"
#include "polybound/quadrature.hpp"

namespace polybound {

/// (integral_0^1 |F(e(t))|^p dt)^(1/p) by the periodic trapezoid rule.
/// A result that did not reach rel_tol is returned with converged = false.
NormValue lp_norm(const Polynomial& f, double p,
                  const QuadratureConfig& cfg = {});

/// max |F(e(t))|: dense sampling at max(4N, 256) nodes followed by
/// golden-section refinement of |F|^2 around every sampled local maximum.
double sup_norm(const Polynomial& f);

/// |a_N| * prod max(1, |alpha_n|).
double mahler_roots(const RootDecomposition& d);

/// exp(integral log|F(e(t))| dt). Refuses polynomials with a root within
/// 1e-6 of the circle (Error(singular_integrand)); use mahler_roots there.
NormValue mahler_integral(const Polynomial& f,
                          const QuadratureConfig& cfg = {});

/// M(F) <= ||F||_p <= ||F||_q <= ||F||_inf within 1e-9 relative slack.
bool norm_chain_check(const Polynomial& f, double p, double q,
                      const QuadratureConfig& cfg = {});

}  // namespace polybound
