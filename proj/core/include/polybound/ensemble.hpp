#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polybound/polynomial.hpp"
#include "polybound/quadrature.hpp"

namespace polybound {

enum class SamplingMode {
  /// Roots log-uniform in modulus with uniform argument, then expanded.
  roots,
  /// Coefficients uniform in the complex box [-c, c]^2.
  coefficient_box,
  /// Even indices use roots, odd indices use the coefficient box.
  mixed,
  /// c (z^N - 1) with random complex c.
  cyclotomic,
};

const char* to_string(SamplingMode mode) noexcept;
SamplingMode sampling_mode_from_string(std::string_view name);

struct EnsembleSpec {
  std::size_t count = 1000;
  int degree_min = 1;
  int degree_max = 10;
  SamplingMode mode = SamplingMode::roots;
  double root_modulus_lo = 0.2;
  double root_modulus_hi = 5.0;
  double coefficient_box = 1.0;
  std::uint64_t seed = 20240601;
  std::vector<double> p_grid{1.0, 1.25, 1.5, 2.0};

  void validate() const;
};

struct RandomInstance {
  Polynomial polynomial;
  SamplingMode mode = SamplingMode::roots;
  /// The drawn roots in root mode (empty otherwise).
  std::vector<Complex> sampled_roots;
};

/// Deterministic in (spec, index): the generator is seeded from
/// (seed, index) alone, independent of evaluation order.
RandomInstance random_instance(const EnsembleSpec& spec, std::size_t index);
Polynomial random_polynomial(const EnsembleSpec& spec, std::size_t index);

struct ViolationRecord {
  std::string polynomial;
  double p = 0.0;
  std::string bound;
  double bound_value = 0.0;
  double measured = 0.0;
  /// (measured - bound) / measured; negative means the bound was exceeded.
  double slack = 0.0;
};

struct QuadratureFailure {
  std::string polynomial;
  double p = 0.0;
  std::string detail;
};

struct VerifyOptions {
  /// Relative tolerance; the quadrature error estimate is added on top.
  double tol = 1e-7;
  /// Also stress the remark-form asymmetric Blaschke value; its shortfalls
  /// go to unproven_findings, never to violations.
  bool include_unproven = false;
  /// Exhaustive Blaschke subset checks up to this degree.
  int subset_scan_max_degree = 8;
  QuadratureConfig quadrature;
  unsigned threads = 0;  // 0: worker_count()
};

struct VerifyResult {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<ViolationRecord> violations;
  std::vector<ViolationRecord> unproven_findings;
  std::vector<QuadratureFailure> quadrature_failures;
  /// Per bound family: checks where |slack| <= tol.
  std::map<std::string, std::size_t> equalities;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks every proven inequality on every instance and exponent of the
/// ensemble: all bound_report entries, the pair sup bounds against the sup
/// norm, both binomial corollaries on each averaged pair, contraction of the
/// averaging filter, and every Blaschke subset for small degrees. Output is
/// ordered by instance index.
VerifyResult verify_ensemble(const EnsembleSpec& spec, const VerifyOptions& options = {});

struct SharpnessRow {
  std::string bound;
  double p = 0.0;
  std::size_t count = 0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

/// Ratio bound / measured norm per (bound family, p): min, median, max.
std::vector<SharpnessRow> sharpness_stats(const EnsembleSpec& spec,
                                          const VerifyOptions& options = {});

struct Witnesses {
  /// Best pair symmetric bound exceeds the Hausdorff-Young bound.
  Polynomial pair_wins;
  double pair_wins_sym = 0.0;
  double pair_wins_hy = 0.0;
  /// Hausdorff-Young bound exceeds the best pair symmetric bound.
  Polynomial hy_wins;
  double hy_wins_sym = 0.0;
  double hy_wins_hy = 0.0;
};

/// Largest symmetric pair bound over the admissible pairs of F (1 <= p <= 2).
double best_pair_sym(const Polynomial& f, double p);

/// Two polynomials showing that the symmetric pair bound and the
/// Hausdorff-Young bound are not comparable at this p in (1, 2). A fixed
/// catalog is tried first, then a seeded random search.
Witnesses noncomparability_witnesses(double p);

}  // namespace polybound
