#include "discres/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace discres {

namespace {

using Complex = std::complex<double>;

Complex horner(const std::vector<Complex>& coeffs, Complex x) {
  Complex y = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) y = y * x + coeffs[i];
  return y;
}

// Magnitude scale of a Horner evaluation at x, for relative residual tests.
double eval_scale(const std::vector<Complex>& coeffs, Complex x) {
  const double ax = std::max(1.0, std::abs(x));
  double s = 0.0;
  double p = 1.0;
  for (const Complex& c : coeffs) {
    s += std::abs(c) * p;
    p *= ax;
  }
  return s;
}

}  // namespace

RootSet find_roots(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

  const double lead = std::abs(p.leading().get_d());
  RootSet rs;
  if (n == 1) {
    const Complex root(-p.coeff(0).get_d() / p.coeff(1).get_d(), 0.0);
    rs.roots.push_back(root);
    rs.radii.push_back(4 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(root)));
    return rs;
  }

  std::vector<Complex> monic(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) monic[static_cast<size_t>(i)] = p.coeff(i).get_d() / lead;
  std::vector<Complex> dmonic(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) dmonic[static_cast<size_t>(i - 1)] = monic[static_cast<size_t>(i)] * double(i);

  // Initial guesses on a circle enclosing all roots, phase-shifted off the
  // real axis so real-coefficient symmetry cannot lock the iteration.
  const double radius0 = 1.0 + p.height().get_d() / lead;
  std::vector<Complex> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / n + 0.3987;
    z[static_cast<size_t>(k)] = radius0 * Complex(std::cos(phi), std::sin(phi));
  }

  const int max_iterations = 1000;
  for (int it = 0; it < max_iterations; ++it) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex zi = z[static_cast<size_t>(i)];
      const Complex pv = horner(monic, zi);
      if (pv == Complex(0.0, 0.0)) continue;
      const Complex pd = horner(dmonic, zi);
      Complex delta;
      if (pd == Complex(0.0, 0.0)) {
        delta = std::pow(pv, 1.0 / n);  // fallback nudge off a critical point
      } else {
        const Complex ratio = pv / pd;
        Complex repulsion(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          const Complex diff = zi - z[static_cast<size_t>(j)];
          if (diff != Complex(0.0, 0.0)) repulsion += 1.0 / diff;
        }
        const Complex denom = 1.0 - ratio * repulsion;
        delta = (denom == Complex(0.0, 0.0)) ? ratio : ratio / denom;
      }
      z[static_cast<size_t>(i)] = zi - delta;
      max_step = std::max(max_step, std::abs(delta) / (1.0 + std::abs(zi)));
    }
    bool finite = true;
    for (const Complex& zi : z) {
      if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag())) finite = false;
    }
    if (!finite) {
      RootSet best;
      best.roots = z;
      best.radii.assign(z.size(), std::numeric_limits<double>::infinity());
      throw RootFindingError("find_roots: iteration produced non-finite values",
                             std::move(best));
    }
    if (max_step < 3e-15) break;
  }

  rs.roots = z;
  rs.radii.resize(static_cast<size_t>(n));
  bool acceptable = true;
  for (int i = 0; i < n; ++i) {
    const Complex zi = z[static_cast<size_t>(i)];
    const Complex pv = horner(monic, zi);
    Complex prod(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
      if (j != i) prod *= zi - z[static_cast<size_t>(j)];
    }
    double radius;
    if (prod == Complex(0.0, 0.0)) {
      radius = 1.0 + std::abs(zi);
    } else {
      // Inclusion disk from the Weierstrass correction.
      radius = n * std::abs(pv / prod);
    }
    radius = std::max(radius, 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(zi)));
    rs.radii[static_cast<size_t>(i)] = radius;
    if (std::abs(pv) > 1e-8 * eval_scale(monic, zi)) acceptable = false;
  }
  if (!acceptable) {
    throw RootFindingError("find_roots: residuals did not converge after iteration cap", rs);
  }
  return rs;
}

RootSet sort_roots_by_distance(RootSet rs, std::complex<double> x) {
  std::vector<size_t> order(rs.roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return std::abs(x - rs.roots[a]) < std::abs(x - rs.roots[b]);
  });
  RootSet out;
  out.roots.reserve(order.size());
  out.radii.reserve(order.size());
  for (size_t i : order) {
    out.roots.push_back(rs.roots[i]);
    out.radii.push_back(rs.radii[i]);
  }
  return out;
}

std::complex<double> discriminant_from_roots(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("discriminant_from_roots: degree must be >= 2");
  const RootSet rs = find_roots(p);
  Complex prod(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Complex d = rs.roots[static_cast<size_t>(i)] - rs.roots[static_cast<size_t>(j)];
      prod *= d * d;
    }
  }
  return std::pow(p.leading().get_d(), 2 * n - 2) * prod;
}

std::complex<double> resultant_from_roots(const IntPolynomial& p1,
                                          const IntPolynomial& p2) {
  const int n = p1.degree();
  const int m = p2.degree();
  if (n < 1 || m < 1) {
    throw std::invalid_argument("resultant_from_roots: both degrees must be >= 1");
  }
  const RootSet rs = find_roots(p1);
  Complex prod(1.0, 0.0);
  for (const auto& alpha : rs.roots) prod *= p2.evaluate(alpha);
  return std::pow(p1.leading().get_d(), m) * prod;
}

}  // namespace discres
