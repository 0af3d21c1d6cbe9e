#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace polybound {

using Complex = std::complex<double>;

/// A complex polynomial F(z) = z^k * (c_0 + c_1 z + ... + c_m z^m).
///
/// Coefficients are stored in ascending degree with the factor z^k split off
/// (k is the zero factor), so the stored constant term is nonzero and the
/// stored leading term is nonzero. Since |z^k| = 1 on the unit circle, every
/// circle norm depends only on the stored part. The only polynomial with an
/// empty coefficient list is the zero polynomial, which `normalize` refuses
/// to build but the averaging filter may legitimately produce.
class Polynomial {
 public:
  Polynomial() = default;

  /// Strips trailing zeros and factors out leading zeros as z^k.
  /// Throws Error(zero_polynomial) on all-zero input and
  /// Error(invalid_argument) on empty or non-finite input.
  static Polynomial normalize(std::span<const Complex> raw);
  static Polynomial normalize(std::initializer_list<Complex> raw) {
    return normalize(std::span<const Complex>(raw.begin(), raw.size()));
  }

  /// Like normalize, but the all-zero input yields the zero polynomial.
  static Polynomial from_coefficients(std::span<const Complex> raw);

  std::span<const Complex> coefficients() const noexcept { return coeffs_; }
  int zero_factor() const noexcept { return zero_factor_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree of the full polynomial including z^k; -1 for zero.
  int degree() const noexcept;
  /// Degree of the stored part (z^k removed).
  int core_degree() const noexcept;

  /// Full-index coefficient a_n (zero outside the support).
  Complex coefficient(int n) const noexcept;
  /// a_0 ... a_N including the leading zeros from z^k.
  std::vector<Complex> expanded() const;
  /// The stored part as its own polynomial (zero factor dropped).
  Polynomial core() const;

  Complex leading() const noexcept;

  Complex operator()(Complex z) const;

  Polynomial scaled(Complex c) const;
  /// z -> F(w z).
  Polynomial rotated(Complex w) const;
  /// z^k * F(z).
  Polynomial shifted(int k) const;

  /// Comma-separated ascending coefficients in the CLI text format.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
  int zero_factor_ = 0;
};

inline Polynomial normalize(std::span<const Complex> raw) {
  return Polynomial::normalize(raw);
}

/// Horner evaluation including the z^k factor.
Complex evaluate(const Polynomial& f, Complex z);

/// F = leading * prod (z - roots[i]).
struct RootDecomposition {
  Complex leading{1.0, 0.0};
  std::vector<Complex> roots;
  /// max_n |reconstructed a_n - a_n| / max_n |a_n|
  double residual = 0.0;

  int degree() const noexcept { return static_cast<int>(roots.size()); }
};

struct RootFinderOptions {
  int max_iterations = 200;
  double residual_cap = 1e-8;
};

/// Simultaneous (Aberth-Ehrlich) iteration followed by a Newton polish.
/// Roots at the origin coming from the zero factor are reported exactly.
/// Output roots are sorted by modulus, then by argument in [0, 2pi).
/// Throws Error(root_finding_failed) when the reconstruction residual
/// exceeds the cap.
RootDecomposition find_roots(const Polynomial& f,
                             const RootFinderOptions& options = {});

/// Coefficients of leading * prod (z - r) in ascending order.
std::vector<Complex> expand_roots(Complex leading,
                                  std::span<const Complex> roots);

Polynomial reconstruct(const RootDecomposition& d);

/// Sort roots by (modulus, argument) with the deterministic key used by
/// find_roots.
void sort_roots(std::vector<Complex>& roots);

}  // namespace polybound
