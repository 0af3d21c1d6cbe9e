#include "polybound/averaging_filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "polybound/binomial_kernel.hpp"
#include "polybound/error.hpp"

namespace polybound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> extra_survivors(int L, int M, int degree) {
  std::vector<int> out;
  const int K = M - L;
  for (int n = L % K; n <= degree; n += K) {
    if (n != L && n != M) out.push_back(n);
  }
  return out;
}

}  // namespace

bool is_admissible(int L, int M, int degree) noexcept {
  return 0 <= L && L < M && M <= degree && M - L > std::max(L, degree - M);
}

CoefficientPair make_pair(const Polynomial& f, int L, int M) {
  return CoefficientPair{L, M, f.coefficient(L), f.coefficient(M)};
}

std::vector<CoefficientPair> admissible_pairs(const Polynomial& f) {
  std::vector<CoefficientPair> out;
  const int n = f.degree();
  for (int L = 0; L < n; ++L) {
    for (int M = L + 1; M <= n; ++M) {
      if (is_admissible(L, M, n)) out.push_back(make_pair(f, L, M));
    }
  }
  return out;
}

std::vector<Complex> congruence_select(const Polynomial& f, int L, int K) {
  std::vector<Complex> a = f.expanded();
  for (int n = 0; n < static_cast<int>(a.size()); ++n) {
    if (((n - L) % K + K) % K != 0) a[static_cast<std::size_t>(n)] = Complex{};
  }
  return a;
}

Polynomial filter(const Polynomial& f, const CoefficientPair& pair) {
  const int n = f.degree();
  if (pair.L < 0 || pair.L >= pair.M || pair.M > n) {
    throw Error(ErrorCode::invalid_argument, "pair indices outside 0 <= L < M <= N");
  }
  if (!is_admissible(pair.L, pair.M, n)) {
    std::ostringstream msg;
    msg << "averaging would retain extra terms: indices";
    for (int i : extra_survivors(pair.L, pair.M, n)) msg << ' ' << i;
    msg << " survive alongside " << pair.L << " and " << pair.M;
    throw Error(ErrorCode::inadmissible_pair, msg.str());
  }

  const int K = pair.K();
  const std::vector<Complex> a = f.expanded();
  std::vector<Complex> avg(a.size(), Complex{});
  // Coefficient n of zeta^{-kL} F(zeta^k z) is a_n zeta^{k(n-L)}.
  for (int k = 0; k < K; ++k) {
    for (int m = 0; m <= n; ++m) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((static_cast<long>(k) * (m - pair.L)) % K) /
                           static_cast<double>(K);
      avg[static_cast<std::size_t>(m)] += a[static_cast<std::size_t>(m)] * std::polar(1.0, angle);
    }
  }
  for (auto& c : avg) c /= static_cast<double>(K);

  const auto selected = congruence_select(f, pair.L, K);
  double scale = 0.0;
  for (const auto& c : a) scale = std::max(scale, std::abs(c));
  for (std::size_t i = 0; i < avg.size(); ++i) {
    if (std::abs(avg[i] - selected[i]) > 1e-12 * std::max(scale, 1.0)) {
      throw Error(ErrorCode::invalid_argument,
                  "root-of-unity average disagrees with congruence selection");
    }
  }

  std::vector<Complex> out(a.size(), Complex{});
  out[static_cast<std::size_t>(pair.L)] = avg[static_cast<std::size_t>(pair.L)];
  out[static_cast<std::size_t>(pair.M)] = avg[static_cast<std::size_t>(pair.M)];
  return Polynomial::from_coefficients(out);
}

PairBounds pair_bounds(const Polynomial& f, const CoefficientPair& pair,
                       double p) {
  if (!is_admissible(pair.L, pair.M, f.degree())) {
    throw Error(ErrorCode::inadmissible_pair,
                "averaging would retain extra terms: pair is not admissible");
  }
  if (!(p > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "exponent p must be > 0");
  }
  PairBounds out;
  out.sup_bound = {std::abs(pair.aL) + std::abs(pair.aM), kInf, kInf};
  out.sym_bound = {std::nullopt, 1.0, 2.0};
  out.asym_bound = {std::nullopt, 1.0, kInf};
  if (p >= 1.0 && p <= 2.0) {
    out.sym_bound.value = binomial_bound_sym(pair.aL, pair.aM, p);
  }
  const bool nonzero = pair.aL != Complex{} || pair.aM != Complex{};
  if (p >= 1.0 && std::isfinite(p) && nonzero) {
    out.asym_bound.value = binomial_bound_asym(pair.aL, pair.aM, p);
  }
  return out;
}

}  // namespace polybound
