#include "polybound/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polybound/error.hpp"
#include "polybound/poly_text.hpp"

namespace polybound {

namespace {

bool is_finite(Complex c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

}  // namespace

Polynomial Polynomial::from_coefficients(std::span<const Complex> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::invalid_argument, "empty coefficient sequence");
  }
  for (const auto& c : raw) {
    if (!is_finite(c)) {
      throw Error(ErrorCode::invalid_argument, "non-finite coefficient");
    }
  }
  Polynomial f;
  auto first = std::find_if(raw.begin(), raw.end(),
                            [](Complex c) { return c != Complex{}; });
  if (first == raw.end()) return f;
  auto last = std::find_if(raw.rbegin(), raw.rend(),
                           [](Complex c) { return c != Complex{}; })
                  .base();
  f.zero_factor_ = static_cast<int>(first - raw.begin());
  f.coeffs_.assign(first, last);
  return f;
}

Polynomial Polynomial::normalize(std::span<const Complex> raw) {
  Polynomial f = from_coefficients(raw);
  if (f.is_zero()) {
    throw Error(ErrorCode::zero_polynomial,
                "zero polynomial: no bound applies");
  }
  return f;
}

int Polynomial::degree() const noexcept {
  return is_zero() ? -1 : core_degree() + zero_factor_;
}

int Polynomial::core_degree() const noexcept {
  return static_cast<int>(coeffs_.size()) - 1;
}

Complex Polynomial::coefficient(int n) const noexcept {
  const int i = n - zero_factor_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<Complex> Polynomial::expanded() const {
  if (is_zero()) return {Complex{}};
  std::vector<Complex> out(static_cast<std::size_t>(zero_factor_), Complex{});
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Polynomial Polynomial::core() const {
  Polynomial f = *this;
  f.zero_factor_ = 0;
  return f;
}

Complex Polynomial::leading() const noexcept {
  return is_zero() ? Complex{} : coeffs_.back();
}

Complex Polynomial::operator()(Complex z) const { return evaluate(*this, z); }

Polynomial Polynomial::scaled(Complex c) const {
  std::vector<Complex> raw = expanded();
  for (auto& a : raw) a *= c;
  return from_coefficients(raw);
}

Polynomial Polynomial::rotated(Complex w) const {
  std::vector<Complex> raw = expanded();
  Complex wn{1.0, 0.0};
  for (auto& a : raw) {
    a *= wn;
    wn *= w;
  }
  return from_coefficients(raw);
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "negative shift");
  Polynomial f = *this;
  if (!f.is_zero()) f.zero_factor_ += k;
  return f;
}

std::string Polynomial::to_string() const {
  return format_polynomial(expanded());
}

Complex evaluate(const Polynomial& f, Complex z) {
  if (!is_finite(z)) {
    throw Error(ErrorCode::invalid_argument, "non-finite evaluation point");
  }
  const auto c = f.coefficients();
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  if (f.zero_factor() > 0) acc *= std::pow(z, f.zero_factor());
  return acc;
}

std::vector<Complex> expand_roots(Complex leading,
                                  std::span<const Complex> roots) {
  std::vector<Complex> c{leading};
  c.reserve(roots.size() + 1);
  for (const Complex& r : roots) {
    c.push_back(Complex{});
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return c;
}

Polynomial reconstruct(const RootDecomposition& d) {
  if (d.leading == Complex{}) {
    throw Error(ErrorCode::invalid_argument, "leading coefficient is zero");
  }
  return Polynomial::normalize(expand_roots(d.leading, d.roots));
}

}  // namespace polybound
