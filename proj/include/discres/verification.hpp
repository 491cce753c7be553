#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "discres/int_polynomial.hpp"
#include "discres/roots.hpp"

namespace discres {

// Finite union of closed intervals with rational endpoints, normalized to a
// sorted, pairwise-disjoint form (overlapping or touching inputs are merged).
class IntervalUnion {
 public:
  using Interval = std::pair<Rational, Rational>;

  explicit IntervalUnion(std::vector<Interval> intervals);

  const std::vector<Interval>& components() const { return components_; }
  Rational measure() const;
  Rational min() const { return components_.front().first; }
  Rational max() const { return components_.back().second; }

 private:
  std::vector<Interval> components_;
};

// Exact area of {(x, y) : x, y in A, |x - y| <= delta} for A inside the
// interval I, by decomposing A x A into rectangles and clipping each against
// the diagonal band. Requires A within I and 0 < delta < |I|.
Rational diagonal_measure(const IntervalUnion& a, const IntervalUnion::Interval& i,
                          const Rational& delta);

// Lower bound (1/64) * lambda^3 * delta * |I| with lambda = |A|/|I|, the
// quantity diagonal_measure is guaranteed to dominate.
Rational diagonal_measure_lower_bound(const IntervalUnion& a,
                                      const IntervalUnion::Interval& i,
                                      const Rational& delta);

struct BoundReport {
  std::string check;
  std::string inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  bool applicable = true;
  bool pass = true;
};

// |P^(j)(x)| <= (n!/(n-j)!) * |a_n| * prod_{i>j} |x - alpha_i| with the roots
// ordered by distance from x. Holds unconditionally; checked to a relative
// tolerance of 1e-6 (1e-4 when the minimum root gap is below 1e-3).
// Requires 0 <= j < deg P.
BoundReport check_derivative_upper_bound(const IntPolynomial& p,
                                         std::complex<double> x, int j);

// Under the gap hypothesis |x - alpha_j| < (1/2) C(n,j)^{-1} |x - alpha_{j+1}|,
// |P^(j)(x)| >= (1/2) |a_n| * prod_{i>j} |x - alpha_i|. Reports
// applicable = false when the hypothesis fails. Requires 1 <= j < deg P.
BoundReport check_derivative_lower_bound(const IntPolynomial& p,
                                         std::complex<double> x, int j);

// c_1 = n c0/delta0, c_{j+1} = max{ (2 c0/delta0) C(n, j+1), 2 c_j C(n, j) }.
// Exact rationals; c0 > 0 and delta0 > 0 required.
std::vector<Rational> root_proximity_constants(int n, const Rational& c0,
                                               const Rational& delta0);

enum class ProximityStatus { hypothesis_failed, pass, fail };

struct ProximityReport {
  ProximityStatus status = ProximityStatus::pass;
  // Per-derivative sandwich diagnostics and per-root distance results.
  std::vector<BoundReport> details;
};

// Checks the derivative sandwich delta0 * Q^{-v_j} <= |P^(j)(x)| <= c0 * Q^{-v_j}
// for the v-profile induced by d (v_n = -1, v_{j-1} = v_j + d_j); when it
// holds, asserts |x - alpha_j| <= c_j Q^{-d_j} for the distance-sorted roots.
// The d-profile must be non-increasing and non-negative.
ProximityReport check_root_proximity(const IntPolynomial& p, std::complex<double> x,
                                     const std::vector<Rational>& dprofile,
                                     const Rational& c0, const Rational& delta0,
                                     long q);

// Exact count of pairs (a, q): q <= T, alpha*q < a <= beta*q, and the
// distance from a^2/q to the nearest integer is < eps. Requires T >= 1 and
// 0 < eps < 1/2. The distance is min(r, q-r)/q with r = a^2 mod q, so the
// test is carried out entirely in integers.
long long near_curve_count(long long t_max, const Rational& eps,
                           const Rational& alpha, const Rational& beta);

// Same count for an arbitrary curve, with the nearest-integer distance taken
// in floating point.
long long near_curve_count(long long t_max, double eps,
                           const std::function<double(double)>& curve, double alpha,
                           double beta);

// eps_t = 2^{-t} * Q^{2-2v}; exact when the power is rational, otherwise
// rounded down as in the enumeration thresholds. Requires t >= 0, Q > 1.
Rational dyadic_epsilon(int t, long q, const Rational& v);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  int points_used = 0;
};

// Least-squares line through (ln Q, ln count); the slope estimates the
// growth exponent. Requires >= 2 points, distinct Q, all counts > 0.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& q_count);

// Seeded property sweeps shared by the CLI and the acceptance suite.
struct SweepSummary {
  std::string check;
  unsigned long long samples = 0;
  unsigned long long applicable = 0;
  unsigned long long failures = 0;
};

// Random (P, x, j) sweep of both derivative bounds: deg <= 6, H <= 20,
// x uniform in [-1/2, 1/2]. Returns {upper-bound summary, lower-bound summary}.
std::vector<SweepSummary> derivative_bound_sweep(uint64_t seed, unsigned samples,
                                                 std::vector<BoundReport>* reports = nullptr);

// Random interval unions in [0, 1] (up to 8 components, rational endpoints)
// against the exact diagonal band bound; zero tolerance.
SweepSummary diagonal_band_sweep(uint64_t seed, unsigned samples);

// Proximity machinery: constructed cases where the sandwich holds plus random
// mismatched profiles exercising the hypothesis_failed path.
SweepSummary proximity_sweep(uint64_t seed, unsigned samples);

}  // namespace discres
