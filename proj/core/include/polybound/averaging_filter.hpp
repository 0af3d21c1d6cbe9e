#pragma once

#include <optional>
#include <vector>

#include "polybound/polynomial.hpp"

namespace polybound {

/// Two coefficient indices L < M of a degree-N polynomial with
/// M - L > max(L, N - M): averaging over the K-th roots of unity, K = M - L,
/// keeps exactly the terms a_L z^L and a_M z^M.
struct CoefficientPair {
  int L = 0;
  int M = 1;
  Complex aL{};
  Complex aM{};

  int K() const noexcept { return M - L; }
};

bool is_admissible(int L, int M, int degree) noexcept;

/// Every admissible (L, M) for F in full-index coefficient numbering.
std::vector<CoefficientPair> admissible_pairs(const Polynomial& f);

/// Pair (L, M) of F with its coefficients filled in.
CoefficientPair make_pair(const Polynomial& f, int L, int M);

/// (1/K) sum_k zeta_K^{-kL} F(zeta_K^k z), computed explicitly over the K
/// rotations. Throws Error(inadmissible_pair) listing the other surviving
/// indices when the pair is not admissible. The result is a_L z^L + a_M z^M,
/// and the explicit average is checked against congruence selection.
Polynomial filter(const Polynomial& f, const CoefficientPair& pair);

/// Full-index coefficients a_n with n = L (mod K), others zeroed. This is the
/// algebraic route the explicit average must reproduce.
std::vector<Complex> congruence_select(const Polynomial& f, int L, int K);

/// Bound value tagged with the exponent window where it is a theorem.
struct WindowedBound {
  std::optional<double> value;  // empty when inapplicable
  double p_lo = 0.0;
  double p_hi = 0.0;            // +inf for an unbounded window

  bool applicable() const noexcept { return value.has_value(); }
};

struct PairBounds {
  WindowedBound sup_bound;   // ||F||_inf >= |a_L| + |a_M|
  WindowedBound sym_bound;   // 1 <= p <= 2
  WindowedBound asym_bound;  // p >= 1, (a_L, a_M) != (0, 0)
};

/// p may be +inf, in which case only the sup bound is applicable. The sup
/// bound is a bound on ||F||_inf for every p.
PairBounds pair_bounds(const Polynomial& f, const CoefficientPair& pair,
                       double p);

}  // namespace polybound
