#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polybound/polynomial.hpp"

namespace polybound {

/// A subset E of root indices {1, ..., N}, stored as a bitmask where bit
/// i-1 stands for root index i (indices follow find_roots ordering).
class SubsetChoice {
 public:
  SubsetChoice() = default;
  SubsetChoice(std::uint64_t mask, int degree);
  static SubsetChoice from_indices(const std::vector<int>& one_based, int degree);

  std::uint64_t mask() const noexcept { return mask_; }
  int degree() const noexcept { return degree_; }
  bool contains(int one_based) const noexcept;
  std::vector<int> indices() const;
  SubsetChoice complement() const;

  /// "{1,3}"; "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const SubsetChoice&, const SubsetChoice&) = default;

 private:
  std::uint64_t mask_ = 0;
  int degree_ = 0;
};

/// Constant and leading coefficients of G_E = B_E F.
struct EdgeCoefficients {
  Complex b0{};
  Complex bN{};
  /// |b0| = M(F) / r, 1 <= r <= M(F)^2 / |a_0 a_N|
  double r = 1.0;
};

/// b0(E) = a_N prod_{m not in E} (-alpha_m), bN(E) = a_N prod_{n in E} (-conj alpha_n).
/// Throws Error(root_at_origin) if a root is zero.
EdgeCoefficients edge_coeffs(const RootDecomposition& d, const SubsetChoice& e);

/// G_E(z) = a_N prod_{n in E} (1 - conj(alpha_n) z) prod_{m not in E} (z - alpha_m),
/// which has |G_E| = |F| on the unit circle.
Polynomial blaschke_poly(const RootDecomposition& d, const SubsetChoice& e);
Polynomial blaschke_poly(const Polynomial& f, const SubsetChoice& e);

/// B_p |a_N| (prod_{m not in E} |alpha_m|^p + prod_{n in E} |alpha_n|^p)^(1/p),
/// i.e. B_p (|b0|^p + |bN|^p)^(1/p); 1 <= p <= 2.
double gen_bound_sym(const RootDecomposition& d, const SubsetChoice& e, double p);

enum class AsymForm {
  /// hi (1 + (p lo / (2 hi))^2)^(1/p) with hi, lo = max/min(|b0|, |bN|):
  /// the binomial corollary applied to the edges of G_E.
  proven,
  /// |b0| (1 + p^2 |a_0 a_N|^2 / (4 |b0|^4))^(1/p) taken literally, whichever
  /// edge is larger. Not a certified bound; kept to reproduce the remark.
  remark,
};

const char* to_string(AsymForm form) noexcept;

/// p >= 1.
double gen_bound_asym(const RootDecomposition& d, const SubsetChoice& e,
                      double p, AsymForm form = AsymForm::proven);

/// E = {n : |alpha_n| <= 1}. Roots on the circle (to 1e-10) are included.
SubsetChoice canonical_subset(const RootDecomposition& d);

struct SubsetRow {
  SubsetChoice subset;
  double b0_abs = 0.0;
  double bN_abs = 0.0;
  double r = 1.0;
  std::optional<double> sym;           // 1 <= p <= 2
  std::optional<double> asym_proven;   // p >= 1
  std::optional<double> asym_remark;   // p >= 1
};

struct SubsetScan {
  std::optional<std::pair<SubsetChoice, double>> best_sym;
  std::optional<std::pair<SubsetChoice, double>> best_asym_proven;
  /// All 2^N rows in mask order (empty when keep_table is false).
  std::vector<SubsetRow> table;
};

inline constexpr int kMaxScanDegree = 24;

/// Exhaustive scan over all 2^N subsets (N <= 24). Ties within 1e-12
/// relative go to the canonical subset when it is among the maximizers,
/// otherwise to the smallest mask.
SubsetScan scan_subsets(const RootDecomposition& d, double p, bool keep_table = true);

/// (4 M^4 + p^2 |a_0 a_N|^2) r^p < 4 M^4 + p^2 |a_0 a_N|^2 r^4.
bool improvement_condition(double mahler, double a0aN, double p, double r);

}  // namespace polybound
