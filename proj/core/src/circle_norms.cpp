#include "polybound/circle_norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polybound/error.hpp"

namespace polybound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit(double t) { return std::polar(1.0, kTwoPi * t); }

// Horner on the stored coefficients; |z^k| = 1 on the circle.
double modulus_on_circle(std::span<const Complex> c, double t) {
  const Complex z = unit(t);
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return std::abs(acc);
}

void require_nonzero(const Polynomial& f) {
  if (f.is_zero()) {
    throw Error(ErrorCode::zero_polynomial, "norm of the zero polynomial");
  }
}

void require_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::invalid_argument, "exponent p must be finite and > 0");
  }
}

}  // namespace

void QuadratureConfig::validate() const {
  const bool pow2 = initial_nodes > 0 && (initial_nodes & (initial_nodes - 1)) == 0;
  if (!pow2 || initial_nodes > max_nodes || !(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "invalid quadrature configuration");
  }
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

NormValue lp_norm(const Polynomial& f, double p, const QuadratureConfig& cfg) {
  require_nonzero(f);
  require_exponent(p);
  const auto c = f.coefficients();
  if (c.size() == 1) {
    return {std::abs(c[0]), 0.0, cfg.initial_nodes, true};
  }
  const auto m = periodic_mean(
      [&](double t) { return std::pow(modulus_on_circle(c, t), p); }, cfg);
  NormValue out;
  out.value = std::pow(m.mean, 1.0 / p);
  out.err_estimate = std::abs(out.value - std::pow(m.previous, 1.0 / p));
  out.nodes_used = m.nodes;
  out.converged = m.converged;
  return out;
}

double sup_norm(const Polynomial& f) {
  require_nonzero(f);
  const auto c = f.coefficients();
  if (c.size() == 1) return std::abs(c[0]);

  const std::size_t n = std::max<std::size_t>(4 * (c.size() - 1), 256);
  auto g = [&](double t) {
    const double m = modulus_on_circle(c, t);
    return m * m;
  };
  std::vector<double> samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    samples[j] = g(static_cast<double>(j) / static_cast<double>(n));
  }
  double best = *std::max_element(samples.begin(), samples.end());

  const double h = 1.0 / static_cast<double>(n);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double prev = samples[(j + n - 1) % n];
    const double next = samples[(j + 1) % n];
    if (samples[j] < prev || samples[j] < next) continue;
    // Golden-section maximization on [t_{j-1}, t_{j+1}].
    double lo = (static_cast<double>(j) - 1.0) * h;
    double hi = (static_cast<double>(j) + 1.0) * h;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double g1 = g(x1);
    double g2 = g(x2);
    for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
      if (g1 < g2) {
        lo = x1;
        x1 = x2;
        g1 = g2;
        x2 = lo + inv_phi * (hi - lo);
        g2 = g(x2);
      } else {
        hi = x2;
        x2 = x1;
        g2 = g1;
        x1 = hi - inv_phi * (hi - lo);
        g1 = g(x1);
      }
    }
    best = std::max({best, g1, g2});
  }
  return std::sqrt(best);
}

double mahler_roots(const RootDecomposition& d) {
  double m = std::abs(d.leading);
  for (const auto& r : d.roots) m *= std::max(1.0, std::abs(r));
  return m;
}

NormValue mahler_integral(const Polynomial& f, const QuadratureConfig& cfg) {
  require_nonzero(f);
  const auto c = f.coefficients();
  if (c.size() == 1) return {std::abs(c[0]), 0.0, cfg.initial_nodes, true};

  const RootDecomposition d = find_roots(f.core());
  for (const auto& r : d.roots) {
    if (std::abs(std::abs(r) - 1.0) < 1e-6) {
      throw Error(ErrorCode::singular_integrand,
                  "singular integrand: root within 1e-6 of the unit circle; "
                  "use mahler_roots");
    }
  }
  const auto m = periodic_mean(
      [&](double t) { return std::log(modulus_on_circle(c, t)); }, cfg,
      cfg.rel_tol);
  NormValue out;
  out.value = std::exp(m.mean);
  out.err_estimate = std::abs(out.value - std::exp(m.previous));
  out.nodes_used = m.nodes;
  out.converged = m.converged;
  return out;
}

bool norm_chain_check(const Polynomial& f, double p, double q,
                      const QuadratureConfig& cfg) {
  require_exponent(p);
  require_exponent(q);
  if (!(p < q)) {
    throw Error(ErrorCode::invalid_argument, "norm chain requires p < q");
  }
  const double mahler =
      f.core_degree() == 0 ? std::abs(f.leading()) : mahler_roots(find_roots(f));
  const double np = lp_norm(f, p, cfg).value;
  const double nq = lp_norm(f, q, cfg).value;
  const double ns = sup_norm(f);
  constexpr double slack = 1e-9;
  auto le = [&](double a, double b) { return a <= b + slack * std::abs(b); };
  return le(mahler, np) && le(np, nq) && le(nq, ns);
}

}  // namespace polybound
