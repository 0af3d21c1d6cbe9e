#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polybound/polynomial.hpp"
#include "polybound/quadrature.hpp"

namespace polybound {

/// B_p |a_N| (prod max(1, |alpha|^p) + prod min(1, |alpha|^p))^(1/p), 1 <= p <= 2.
double thm1_sym(const RootDecomposition& d, double p);

/// M (1 + p^2 |a_0 a_N|^2 / (4 M^4))^(1/p) for p >= 1. Falls back to M(F)
/// when a_0 = 0.
double thm1_asym(const RootDecomposition& d, double p);

/// |a_N| (prod max(1, |alpha|^2) + prod min(1, |alpha|^2))^(1/2).
double goncalves_bound(const RootDecomposition& d);

/// ||F||_2 >= M(F).
double landau_bound(const RootDecomposition& d);

/// (sum |a_n|^2)^(1/2) = ||F||_2 exactly.
double parseval_norm(const Polynomial& f);

/// ||F||_1 >= max |a_n|.
double easy_l1_bound(const Polynomial& f);

/// ||F||_p >= (sum |a_n|^q)^(1/q), q = p/(p-1), 1 < p <= 2.
double hausdorff_young_bound(const Polynomial& f, double p);

/// Value of M^2/|a_0 a_N| above which the asymmetric bound beats the
/// symmetric one at p = 1: pi / (2 (2 - sqrt(4 + 2 pi - pi^2))).
double crossover_threshold();

/// The positive root c of 2c^2 = (1 + c^2) log(1 + c^2).
double optimal_p_constant();

struct OptimalP {
  double p = 0.0;
  /// [1, p]: the range where the asymmetric bound can beat M(F).
  double window_lo = 1.0;
  double window_hi = 1.0;
};

/// Maximizer 2 c M^2 / |a_0 a_N| of p -> thm1_asym(d, p). Requires a_0 != 0.
OptimalP optimal_p(const RootDecomposition& d);

struct BoundEntry {
  std::string name;
  std::optional<double> value;  // empty iff not applicable at this p
  double p_lo = 0.0;
  double p_hi = 0.0;  // +inf for open-ended windows
  std::string reference;

  bool applicable() const noexcept { return value.has_value(); }
};

struct MeasuredNorms {
  NormValue lp;  // equals the sup norm when p = inf
  double sup = 0.0;
  double mahler = 0.0;
};

struct BoundReport {
  std::string polynomial;
  double p = 0.0;
  MeasuredNorms measured;
  std::vector<BoundEntry> entries;
  std::string best;
  std::vector<std::string> footnotes;

  const BoundEntry* find(std::string_view name) const;
};

struct ReportOptions {
  QuadratureConfig quadrature;
  /// Also emit the remark-form asymmetric Blaschke value at the canonical
  /// subset, marked not applicable and described in a footnote.
  bool include_unproven = false;
};

inline constexpr const char* kCrossoverFootnote =
    "crossover threshold: y* = pi/(2(2 - sqrt(4 + 2pi - pi^2))) = 1.1576382..., "
    "the root of pi y^2/4 - 2y + (pi - 2) = 0 where the two p = 1 bounds agree; "
    "the closed form with pi^2 in the numerator evaluates to 3.6368277... "
    "and does not match that decimal, so it is not used";

inline constexpr const char* kRemarkFormFootnote =
    "blaschke_asym_remark uses |b0(E)| as the outer edge even when "
    "|b0(E)| < |bN(E)|; it is not a certified bound and is never ranked";

/// Every bound applicable to (F, p) with measured ||F||_p, ||F||_inf and
/// M(F). p may be +inf. Entries appear in catalog order and `best` is the
/// first applicable entry with maximal value. Bounds are computed on F with
/// the z^k factor removed, which leaves all circle norms unchanged.
BoundReport bound_report(const Polynomial& f, double p,
                         const ReportOptions& options = {});

}  // namespace polybound
