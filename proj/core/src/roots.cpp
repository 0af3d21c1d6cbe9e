#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "polybound/error.hpp"
#include "polybound/polynomial.hpp"

namespace polybound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct NewtonTerm {
  Complex value;
  Complex ratio;  // p(z) / p'(z); zero when p(z) == 0
};

// Evaluates p(z) and the Newton ratio. For |z| > 1 the reversed polynomial
// is used, which keeps the Horner recurrences bounded.
NewtonTerm newton_term(std::span<const Complex> a, Complex z) {
  const std::size_t n = a.size() - 1;
  if (std::abs(z) <= 1.0) {
    Complex p = a[n];
    Complex dp{};
    for (std::size_t i = n; i-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[i];
    }
    if (p == Complex{}) return {p, {}};
    if (dp == Complex{}) return {p, Complex{1e-8, 0.0}};
    return {p, p / dp};
  }
  // p(z) = z^n q(w), w = 1/z, q(w) = sum a_i w^{n-i}.
  // p/p' = z q(w) / (n q(w) - w q'(w)).
  const Complex w = 1.0 / z;
  Complex q = a[0];
  Complex dq{};
  for (std::size_t i = 1; i <= n; ++i) {
    dq = dq * w + q;
    q = q * w + a[i];
  }
  const Complex denom = static_cast<double>(n) * q - w * dq;
  const Complex p = q * std::pow(z, static_cast<int>(n));
  if (q == Complex{}) return {p, {}};
  if (denom == Complex{}) return {p, Complex{1e-8, 0.0}};
  return {p, z * q / denom};
}

std::vector<Complex> aberth(std::span<const Complex> a, int max_iterations) {
  const std::size_t n = a.size() - 1;
  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    radius = std::max(radius, std::abs(a[i] / a[n]));
  }
  radius += 1.0;

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const NewtonTerm t = newton_term(a, z[i]);
      Complex correction{};
      if (t.ratio != Complex{}) {
        Complex s{};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) s += 1.0 / (z[i] - z[j]);
        }
        correction = t.ratio / (1.0 - t.ratio * s);
      }
      z[i] -= correction;
      if (std::abs(correction) < 1e-13 * (1.0 + std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  // Newton polish, accepting a step only when it reduces |p|.
  for (auto& root : z) {
    for (int step = 0; step < 3; ++step) {
      const NewtonTerm t = newton_term(a, root);
      if (t.ratio == Complex{}) break;
      const Complex candidate = root - t.ratio;
      if (std::abs(newton_term(a, candidate).value) < std::abs(t.value)) {
        root = candidate;
      } else {
        break;
      }
    }
  }
  return z;
}

// Coefficients of the k-th derivative.
std::vector<Complex> derivative(std::span<const Complex> a, int k) {
  std::vector<Complex> d(a.begin(), a.end());
  for (int step = 0; step < k && d.size() > 1; ++step) {
    for (std::size_t i = 1; i < d.size(); ++i) d[i - 1] = d[i] * static_cast<double>(i);
    d.pop_back();
  }
  return d;
}

// A root of multiplicity m is computed only to about eps^(1/m), with errors
// that do not cancel in the coefficients. Merging each cluster into its
// centroid, refined as a simple root of the (m-1)-th derivative, restores
// the coefficients. Clustering is single-linkage at the given radius.
std::vector<Complex> merge_clusters(std::span<const Complex> a, std::vector<Complex> z,
                                    double radius) {
  const std::size_t n = z.size();
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  auto find = [&](std::size_t i) {
    while (label[i] != i) i = label[i] = label[label[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) <= radius * (1.0 + std::abs(z[i]))) label[find(i)] = find(j);
    }
  }
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (find(i) == root) members.push_back(i);
    }
    if (members.size() < 2) continue;
    Complex c{};
    for (auto i : members) c += z[i];
    c /= static_cast<double>(members.size());
    const auto d = derivative(a, static_cast<int>(members.size()) - 1);
    for (int step = 0; step < 50; ++step) {
      const NewtonTerm t = newton_term(d, c);
      c -= t.ratio;
      if (std::abs(t.ratio) <= 1e-15 * (1.0 + std::abs(c))) break;
    }
    for (auto i : members) z[i] = c;
  }
  return z;
}

double reconstruction_residual(Complex leading, std::span<const Complex> roots,
                               std::span<const Complex> target) {
  const auto rebuilt = expand_roots(leading, roots);
  double scale = 0.0;
  for (const auto& c : target) scale = std::max(scale, std::abs(c));
  double worst = 0.0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const Complex r = i < rebuilt.size() ? rebuilt[i] : Complex{};
    worst = std::max(worst, std::abs(r - target[i]));
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace

void sort_roots(std::vector<Complex>& roots) {
  auto key = [](Complex z) {
    // Quantize the modulus so conjugate pairs and roots of unity compare
    // equal in modulus and fall through to the argument.
    const double modulus = std::round(std::abs(z) * 1e10) / 1e10;
    double arg = std::arg(z);
    if (arg < 0.0) arg += kTwoPi;
    if (arg > kTwoPi - 1e-12) arg = 0.0;
    return std::pair{modulus, arg};
  };
  std::stable_sort(roots.begin(), roots.end(),
                   [&](Complex x, Complex y) { return key(x) < key(y); });
}

RootDecomposition find_roots(const Polynomial& f,
                             const RootFinderOptions& options) {
  if (f.is_zero()) {
    throw Error(ErrorCode::zero_polynomial, "zero polynomial has no roots");
  }
  const auto a = f.coefficients();
  const std::size_t n = a.size() - 1;

  RootDecomposition d;
  d.leading = f.leading();
  d.roots.assign(static_cast<std::size_t>(f.zero_factor()), Complex{});

  std::vector<Complex> found;
  if (n == 1) {
    found.push_back(-a[0] / a[1]);
  } else if (n > 1) {
    found = aberth(a, options.max_iterations);
  }
  double residual = reconstruction_residual(a[n], found, a);
  for (double radius : {1e-6, 1e-4, 1e-3, 1e-2}) {
    if (residual <= options.residual_cap) break;
    auto merged = merge_clusters(a, found, radius);
    const double r = reconstruction_residual(a[n], merged, a);
    if (r < residual) {
      residual = r;
      found = std::move(merged);
    }
  }
  d.roots.insert(d.roots.end(), found.begin(), found.end());
  sort_roots(d.roots);

  const auto target = f.expanded();
  d.residual = reconstruction_residual(d.leading, d.roots, target);
  if (!(d.residual <= options.residual_cap)) {
    std::ostringstream msg;
    msg << "root-finding failed: degree " << f.degree()
        << ", reconstruction residual " << d.residual << " exceeds cap "
        << options.residual_cap << " after " << options.max_iterations
        << " iterations";
    throw Error(ErrorCode::root_finding_failed, msg.str());
  }
  return d;
}

}  // namespace polybound
