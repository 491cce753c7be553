#include "discres/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "discres/exponents.hpp"
#include "discres/prng.hpp"

namespace discres {

namespace {

double min_root_gap(const RootSet& rs) {
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    for (size_t j = i + 1; j < rs.roots.size(); ++j) {
      gap = std::min(gap, std::abs(rs.roots[i] - rs.roots[j]));
    }
  }
  return gap;
}

double relative_tolerance(const RootSet& rs) {
  return min_root_gap(rs) < 1e-3 ? 1e-4 : 1e-6;
}

std::string describe_inputs(const IntPolynomial& p, std::complex<double> x, int j) {
  std::ostringstream out;
  out << "P = " << p.to_string() << "; x = " << x.real();
  if (x.imag() != 0.0) out << (x.imag() < 0 ? " - " : " + ") << std::abs(x.imag()) << "i";
  out << "; j = " << j;
  return out.str();
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<Interval> intervals) {
  if (intervals.empty()) throw std::invalid_argument("interval union needs a component");
  for (const auto& [lo, hi] : intervals) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.first < b.first; });
  components_.push_back(intervals.front());
  for (size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].first <= components_.back().second) {
      if (intervals[i].second > components_.back().second) {
        components_.back().second = intervals[i].second;
      }
    } else {
      components_.push_back(intervals[i]);
    }
  }
}

Rational IntervalUnion::measure() const {
  Rational m = 0;
  for (const auto& [lo, hi] : components_) m += hi - lo;
  return m;
}

namespace {

// Exact area of ([a,b] x [c,d]) intersected with the band |x - y| <= delta.
// The vertical section length min(d, x+delta) - max(c, x-delta) is piecewise
// linear in x, so trapezoids between its kinks integrate it exactly.
Rational band_rectangle_area(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d, const Rational& delta) {
  Rational lo = c - delta;
  if (a > lo) lo = a;
  Rational hi = d + delta;
  if (b < hi) hi = b;
  if (lo >= hi) return Rational(0);

  std::vector<Rational> cuts{lo, hi};
  const Rational k1 = c + delta;
  const Rational k2 = d - delta;
  if (k1 > lo && k1 < hi) cuts.push_back(k1);
  if (k2 > lo && k2 < hi) cuts.push_back(k2);
  std::sort(cuts.begin(), cuts.end());

  const auto section = [&](const Rational& x) {
    Rational top = x + delta;
    if (d < top) top = d;
    Rational bottom = x - delta;
    if (c > bottom) bottom = c;
    return Rational(top - bottom);
  };

  Rational area = 0;
  for (size_t s = 0; s + 1 < cuts.size(); ++s) {
    area += (section(cuts[s]) + section(cuts[s + 1])) * (cuts[s + 1] - cuts[s]) / 2;
  }
  return area;
}

}  // namespace

Rational diagonal_measure(const IntervalUnion& a, const IntervalUnion::Interval& i,
                          const Rational& delta) {
  const Rational ilen = i.second - i.first;
  if (!(delta > 0) || delta >= ilen) {
    throw std::domain_error("diagonal_measure: need 0 < delta < |I|");
  }
  if (a.min() < i.first || a.max() > i.second) {
    throw std::invalid_argument("diagonal_measure: A must lie inside I");
  }
  Rational total = 0;
  for (const auto& [p, q] : a.components()) {
    for (const auto& [r, s] : a.components()) {
      total += band_rectangle_area(p, q, r, s, delta);
    }
  }
  return total;
}

Rational diagonal_measure_lower_bound(const IntervalUnion& a,
                                      const IntervalUnion::Interval& i,
                                      const Rational& delta) {
  const Rational ilen = i.second - i.first;
  const Rational lambda = a.measure() / ilen;
  return lambda * lambda * lambda * delta * ilen / 64;
}

BoundReport check_derivative_upper_bound(const IntPolynomial& p, std::complex<double> x,
                                         int j) {
  const int n = p.degree();
  if (j < 0 || j >= n) {
    throw std::invalid_argument("check_derivative_upper_bound: 0 <= j < deg P required");
  }
  const RootSet sorted = sort_roots_by_distance(find_roots(p), x);
  BoundReport report;
  report.check = "derivative_upper_bound";
  report.inputs = describe_inputs(p, x, j);
  report.tolerance = relative_tolerance(sorted);
  report.lhs = std::abs(p.derivative(j).evaluate(x));
  double tail = 1.0;
  for (int i = j; i < n; ++i) tail *= std::abs(x - sorted.roots[static_cast<size_t>(i)]);
  report.rhs = falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(j)).get_d() *
               std::abs(p.leading().get_d()) * tail;
  report.pass = report.lhs <= report.rhs * (1.0 + report.tolerance) +
                              1e-12 * (1.0 + std::abs(p.leading().get_d()));
  return report;
}

BoundReport check_derivative_lower_bound(const IntPolynomial& p, std::complex<double> x,
                                         int j) {
  const int n = p.degree();
  if (j < 1 || j >= n) {
    throw std::invalid_argument("check_derivative_lower_bound: 1 <= j < deg P required");
  }
  const RootSet sorted = sort_roots_by_distance(find_roots(p), x);
  BoundReport report;
  report.check = "derivative_lower_bound";
  report.inputs = describe_inputs(p, x, j);
  report.tolerance = relative_tolerance(sorted);

  const double dist_j = std::abs(x - sorted.roots[static_cast<size_t>(j - 1)]);
  const double dist_next = std::abs(x - sorted.roots[static_cast<size_t>(j)]);
  const double binom = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)).get_d();
  if (!(dist_j < 0.5 / binom * dist_next)) {
    report.applicable = false;
    report.pass = true;
    return report;
  }
  report.lhs = std::abs(p.derivative(j).evaluate(x));
  double tail = 1.0;
  for (int i = j; i < n; ++i) tail *= std::abs(x - sorted.roots[static_cast<size_t>(i)]);
  report.rhs = 0.5 * std::abs(p.leading().get_d()) * tail;
  report.pass = report.lhs >= report.rhs * (1.0 - report.tolerance) - 1e-300;
  return report;
}

std::vector<Rational> root_proximity_constants(int n, const Rational& c0,
                                               const Rational& delta0) {
  if (n < 1) throw std::invalid_argument("root_proximity_constants: n >= 1 required");
  if (!(c0 > 0) || !(delta0 > 0)) {
    throw std::invalid_argument("root_proximity_constants: c0 > 0 and delta0 > 0 required");
  }
  std::vector<Rational> c(static_cast<size_t>(n));
  c[0] = Rational(n) * c0 / delta0;
  for (int j = 1; j < n; ++j) {
    const Rational first =
        2 * c0 / delta0 * Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j + 1)));
    const Rational second =
        2 * c[static_cast<size_t>(j - 1)] *
        Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)));
    c[static_cast<size_t>(j)] = first > second ? first : second;
  }
  return c;
}

ProximityReport check_root_proximity(const IntPolynomial& p, std::complex<double> x,
                                     const std::vector<Rational>& dprofile,
                                     const Rational& c0, const Rational& delta0,
                                     long q) {
  const int n = p.degree();
  if (static_cast<int>(dprofile.size()) != n) {
    throw std::invalid_argument("check_root_proximity: d-profile length must equal deg P");
  }
  for (int j = 0; j + 1 < n; ++j) {
    if (dprofile[static_cast<size_t>(j)] < dprofile[static_cast<size_t>(j + 1)]) {
      throw std::invalid_argument("check_root_proximity: d-profile must be non-increasing");
    }
  }
  if (dprofile.back() < 0) {
    throw std::invalid_argument("check_root_proximity: d-profile must be non-negative");
  }
  if (q <= 1) throw std::invalid_argument("check_root_proximity: Q > 1 required");

  // v_n = -1, v_{j-1} = v_j + d_j.
  std::vector<Rational> vprofile(static_cast<size_t>(n) + 1);
  vprofile[static_cast<size_t>(n)] = Rational(-1);
  for (int j = n; j >= 1; --j) {
    vprofile[static_cast<size_t>(j - 1)] =
        vprofile[static_cast<size_t>(j)] + dprofile[static_cast<size_t>(j - 1)];
  }

  ProximityReport report;
  const double logq = std::log(static_cast<double>(q));
  for (int j = 0; j <= n; ++j) {
    BoundReport row;
    row.check = "derivative_sandwich_j" + std::to_string(j);
    row.inputs = describe_inputs(p, x, j);
    const double scale = std::exp(-vprofile[static_cast<size_t>(j)].get_d() * logq);
    const double value = std::abs(p.derivative(j).evaluate(x));
    row.lhs = value;
    row.rhs = c0.get_d() * scale;
    row.tolerance = 1e-9;
    const double lo = delta0.get_d() * scale;
    row.pass = value >= lo * (1.0 - 1e-9) && value <= row.rhs * (1.0 + 1e-9);
    report.details.push_back(row);
    if (!row.pass) report.status = ProximityStatus::hypothesis_failed;
  }
  if (report.status == ProximityStatus::hypothesis_failed) return report;

  const std::vector<Rational> constants = root_proximity_constants(n, c0, delta0);
  const RootSet sorted = sort_roots_by_distance(find_roots(p), x);
  const double tol = relative_tolerance(sorted);
  bool all_pass = true;
  for (int j = 1; j <= n; ++j) {
    BoundReport row;
    row.check = "root_distance_j" + std::to_string(j);
    row.inputs = describe_inputs(p, x, j);
    row.lhs = std::abs(x - sorted.roots[static_cast<size_t>(j - 1)]);
    row.rhs = constants[static_cast<size_t>(j - 1)].get_d() *
              std::exp(-dprofile[static_cast<size_t>(j - 1)].get_d() * logq);
    row.tolerance = tol;
    row.pass = row.lhs <= row.rhs * (1.0 + tol) + 1e-12;
    all_pass = all_pass && row.pass;
    report.details.push_back(row);
  }
  report.status = all_pass ? ProximityStatus::pass : ProximityStatus::fail;
  return report;
}

long long near_curve_count(long long t_max, const Rational& eps, const Rational& alpha,
                           const Rational& beta) {
  if (t_max < 1) throw std::invalid_argument("near_curve_count: T >= 1 required");
  if (!(eps > 0) || !(2 * eps < 1)) {
    throw std::domain_error("near_curve_count: eps must lie in (0, 1/2)");
  }
  const BigInt eps_num = eps.get_num();
  const BigInt eps_den = eps.get_den();
  const bool small_eps = eps_num.fits_slong_p() && eps_den.fits_slong_p() &&
                         eps_den.get_si() < (1L << 31) && eps_num.get_si() < (1L << 31);
  const long long en = small_eps ? eps_num.get_si() : 0;
  const long long ed = small_eps ? eps_den.get_si() : 0;

  long long count = 0;
  for (long long q = 1; q <= t_max; ++q) {
    BigInt lo_f, hi_f;
    const long ql = static_cast<long>(q);
    mpz_fdiv_q(lo_f.get_mpz_t(), BigInt(alpha.get_num() * ql).get_mpz_t(),
               alpha.get_den().get_mpz_t());
    mpz_fdiv_q(hi_f.get_mpz_t(), BigInt(beta.get_num() * ql).get_mpz_t(),
               beta.get_den().get_mpz_t());
    if (!lo_f.fits_slong_p() || !hi_f.fits_slong_p()) {
      throw std::invalid_argument("near_curve_count: range too large");
    }
    const long long a_lo = lo_f.get_si() + 1;  // a > alpha*q
    const long long a_hi = hi_f.get_si();      // a <= beta*q
    if (std::max(std::llabs(a_lo), std::llabs(a_hi)) > 3'000'000'000LL) {
      throw std::invalid_argument("near_curve_count: range too large");
    }
    for (long long a = a_lo; a <= a_hi; ++a) {
      const long long r = (a * a) % q;
      const long long rr = std::min(r, q - r);
      if (small_eps) {
        if (rr * ed < en * q) ++count;
      } else {
        if (BigInt(static_cast<long>(rr)) * eps_den < eps_num * static_cast<long>(q)) ++count;
      }
    }
  }
  return count;
}

long long near_curve_count(long long t_max, double eps,
                           const std::function<double(double)>& curve, double alpha,
                           double beta) {
  if (t_max < 1) throw std::invalid_argument("near_curve_count: T >= 1 required");
  if (!(eps > 0.0) || !(eps < 0.5)) {
    throw std::domain_error("near_curve_count: eps must lie in (0, 1/2)");
  }
  long long count = 0;
  for (long long q = 1; q <= t_max; ++q) {
    const long long a_lo = static_cast<long long>(std::floor(alpha * static_cast<double>(q))) + 1;
    const long long a_hi = static_cast<long long>(std::floor(beta * static_cast<double>(q)));
    for (long long a = a_lo; a <= a_hi; ++a) {
      const double value = static_cast<double>(q) * curve(static_cast<double>(a) / static_cast<double>(q));
      const double dist = std::abs(value - std::nearbyint(value));
      if (dist < eps) ++count;
    }
  }
  return count;
}

Rational dyadic_epsilon(int t, long q, const Rational& v) {
  if (t < 0) throw std::invalid_argument("dyadic_epsilon: t >= 0 required");
  if (q <= 1) throw std::invalid_argument("dyadic_epsilon: Q > 1 required");
  const Rational exponent = Rational(2) - 2 * v;
  if (exponent < 0) {
    throw std::domain_error("dyadic_epsilon: v must be <= 1 so the exponent stays nonnegative");
  }
  BigInt two_t;
  mpz_ui_pow_ui(two_t.get_mpz_t(), 2, static_cast<unsigned long>(t));
  Rational scale(1, two_t);
  scale.canonicalize();
  return lower_rational_power(BigInt(q), exponent, scale);
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& q_count) {
  if (q_count.size() < 2) {
    throw std::invalid_argument("fit_exponent: need at least two points");
  }
  std::vector<double> xs, ys;
  for (const auto& [q, count] : q_count) {
    if (!(count > 0.0)) {
      throw std::invalid_argument("fit_exponent: zero count; increase Q or the threshold");
    }
    if (!(q > 0.0)) throw std::invalid_argument("fit_exponent: Q must be positive");
    xs.push_back(std::log(q));
    ys.push_back(std::log(count));
  }
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) throw std::invalid_argument("fit_exponent: Q values must be distinct");
    }
  }
  const double n = static_cast<double>(xs.size());
  double mean_x = 0, mean_y = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.points_used = static_cast<int>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    fit.max_residual =
        std::max(fit.max_residual, std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
  }
  return fit;
}

std::vector<SweepSummary> derivative_bound_sweep(uint64_t seed, unsigned samples,
                                                 std::vector<BoundReport>* reports) {
  SplitMix64 rng(seed);
  SweepSummary upper{"derivative_upper_bound", 0, 0, 0};
  SweepSummary lower{"derivative_lower_bound", 0, 0, 0};
  for (unsigned s = 0; s < samples; ++s) {
    const int n = 1 + static_cast<int>(rng.below(6));
    std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) coeffs[static_cast<size_t>(i)] = rng.range(-20, 20);
    long lead = rng.range(-20, 20);
    if (lead == 0) lead = 1 + rng.range(0, 19);
    coeffs[static_cast<size_t>(n)] = lead;
    const IntPolynomial p(coeffs);
    const std::complex<double> x(rng.unit() - 0.5, 0.0);
    const int j = static_cast<int>(rng.below(static_cast<uint64_t>(n)));

    ++upper.samples;
    ++upper.applicable;
    try {
      const BoundReport r = check_derivative_upper_bound(p, x, j);
      if (!r.pass) ++upper.failures;
      if (reports) reports->push_back(r);
    } catch (const RootFindingError&) {
      ++upper.failures;
    }
    if (j >= 1) {
      ++lower.samples;
      try {
        const BoundReport r = check_derivative_lower_bound(p, x, j);
        if (r.applicable) {
          ++lower.applicable;
          if (!r.pass) ++lower.failures;
        }
        if (reports) reports->push_back(r);
      } catch (const RootFindingError&) {
        ++lower.failures;
      }
    }
  }
  return {upper, lower};
}

SweepSummary diagonal_band_sweep(uint64_t seed, unsigned samples) {
  SplitMix64 rng(seed);
  SweepSummary summary{"diagonal_band_measure", 0, 0, 0};
  const IntervalUnion::Interval unit{Rational(0), Rational(1)};
  for (unsigned s = 0; s < samples; ++s) {
    const int pieces = 1 + static_cast<int>(rng.below(8));
    std::vector<long> knots(static_cast<size_t>(2 * pieces));
    for (long& k : knots) k = rng.range(0, 1000);
    std::sort(knots.begin(), knots.end());
    std::vector<IntervalUnion::Interval> intervals;
    for (int c = 0; c < pieces; ++c) {
      intervals.push_back({Rational(knots[static_cast<size_t>(2 * c)], 1000),
                           Rational(knots[static_cast<size_t>(2 * c + 1)], 1000)});
      intervals.back().first.canonicalize();
      intervals.back().second.canonicalize();
    }
    const IntervalUnion a(intervals);
    Rational delta(1 + rng.range(0, 998), 1000);
    delta.canonicalize();

    ++summary.samples;
    ++summary.applicable;
    const Rational measured = diagonal_measure(a, unit, delta);
    const Rational bound = diagonal_measure_lower_bound(a, unit, delta);
    if (measured < bound) ++summary.failures;
  }
  return summary;
}

SweepSummary proximity_sweep(uint64_t seed, unsigned samples) {
  SplitMix64 rng(seed);
  SweepSummary summary{"root_proximity", 0, 0, 0};

  // Constructed family: P = (K y - 1) (y^2 - 4) has a root K^{-1} = Q^{-e}/2
  // next to x = 0 and two roots far away, so the sandwich can be satisfied
  // with constants read off the actual derivative values.
  for (long q : {16L, 81L, 256L}) {
    for (int e_num : {1, 2}) {
      ++summary.samples;
      BigInt k_big = floor_scaled_power(BigInt(q), Rational(e_num), Rational(2));
      const long k = k_big.get_si();
      const IntPolynomial p{4, -4 * k, -1, k};  // (K y - 1)(y^2 - 4)
      const std::complex<double> x(0.0, 0.0);
      std::vector<Rational> d{Rational(e_num), Rational(0), Rational(0)};

      // Read the sandwich constants off the polynomial itself.
      std::vector<Rational> vprofile{d[0] + d[1] + d[2] - 1, d[1] + d[2] - 1, d[2] - 1,
                                     Rational(-1)};
      double lo_ratio = std::numeric_limits<double>::infinity();
      double hi_ratio = 0.0;
      for (int j = 0; j <= 3; ++j) {
        const double value = std::abs(p.derivative(j).evaluate(x));
        const double ratio =
            value * std::pow(static_cast<double>(q), vprofile[static_cast<size_t>(j)].get_d());
        lo_ratio = std::min(lo_ratio, ratio);
        hi_ratio = std::max(hi_ratio, ratio);
      }
      Rational delta0(static_cast<long>(std::floor(lo_ratio * 512.0)), 1024);
      delta0.canonicalize();
      Rational c0(static_cast<long>(std::ceil(hi_ratio * 2048.0)), 1024);
      c0.canonicalize();
      if (!(delta0 > 0)) continue;
      const ProximityReport report = check_root_proximity(p, x, d, c0, delta0, q);
      if (report.status != ProximityStatus::hypothesis_failed) {
        ++summary.applicable;
        if (report.status == ProximityStatus::fail) ++summary.failures;
      }
    }
  }

  // Random polynomials against a mismatched profile: expected to bail out at
  // the hypothesis stage, and never to report a violation.
  while (summary.samples < samples) {
    ++summary.samples;
    const int n = 2 + static_cast<int>(rng.below(3));
    std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1);
    for (int i = 0; i < n; ++i) coeffs[static_cast<size_t>(i)] = rng.range(-10, 10);
    long lead = rng.range(-10, 10);
    if (lead == 0) lead = 1;
    coeffs[static_cast<size_t>(n)] = lead;
    const IntPolynomial p(coeffs);
    const std::complex<double> x(rng.unit() - 0.5, 0.0);
    const auto profile = optimal_discriminant_profile(n, Rational(1, 2));
    const ProximityReport report =
        check_root_proximity(p, x, profile.d, Rational(10), Rational(1, 10), 100);
    if (report.status != ProximityStatus::hypothesis_failed) {
      ++summary.applicable;
      if (report.status == ProximityStatus::fail) ++summary.failures;
    }
  }
  return summary;
}

}  // namespace discres
