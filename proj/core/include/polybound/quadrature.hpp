#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace polybound {

/// Node-doubling controls for every integral over the circle.
struct QuadratureConfig {
  std::size_t initial_nodes = 512;  // power of two
  std::size_t max_nodes = std::size_t{1} << 20;
  double rel_tol = 1e-10;

  /// Throws Error(invalid_argument) if the fields are inconsistent.
  void validate() const;
};

struct NormValue {
  double value = 0.0;
  /// |value at the last level - value at the level before|
  double err_estimate = 0.0;
  std::size_t nodes_used = 0;
  /// false when max_nodes was reached before rel_tol
  bool converged = true;
};

/// Pairwise (cascade) summation; deterministic for a given input order.
double pairwise_sum(std::span<const double> values);

struct PeriodicMean {
  double mean = 0.0;
  double previous = 0.0;  // mean at the previous refinement level
  std::size_t nodes = 0;
  bool converged = false;
};

/// Composite trapezoid mean of a 1-periodic integrand over [0, 1), doubling
/// the node count until |I_2n - I_n| <= rel_tol * |I_2n| + abs_tol.
/// Node values from coarser levels are reused.
template <class Integrand>
PeriodicMean periodic_mean(Integrand&& g, const QuadratureConfig& cfg,
                           double abs_tol = 0.0) {
  cfg.validate();
  std::size_t n = cfg.initial_nodes;
  std::vector<double> buf(n);
  for (std::size_t j = 0; j < n; ++j) {
    buf[j] = g(static_cast<double>(j) / static_cast<double>(n));
  }
  double sum = pairwise_sum(buf);
  PeriodicMean out;
  out.mean = sum / static_cast<double>(n);
  out.nodes = n;
  while (2 * n <= cfg.max_nodes) {
    const std::size_t fine = 2 * n;
    buf.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      buf[j] = g(static_cast<double>(2 * j + 1) / static_cast<double>(fine));
    }
    sum += pairwise_sum(buf);
    out.previous = out.mean;
    out.mean = sum / static_cast<double>(fine);
    out.nodes = fine;
    n = fine;
    if (std::abs(out.mean - out.previous) <=
        cfg.rel_tol * std::abs(out.mean) + abs_tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace polybound
