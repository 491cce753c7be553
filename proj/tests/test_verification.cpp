#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "discres/verification.hpp"

using namespace discres;

namespace {

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("derivative upper bound on hand-checked points") {
  const IntPolynomial p{-1, 0, 1};  // x^2 - 1
  const BoundReport at0 = check_derivative_upper_bound(p, {0.0, 0.0}, 0);
  CHECK(at0.pass);
  CHECK(at0.lhs == doctest::Approx(1.0));
  CHECK(at0.rhs == doctest::Approx(1.0));

  const BoundReport at_half = check_derivative_upper_bound(p, {0.5, 0.0}, 1);
  CHECK(at_half.pass);
  CHECK(at_half.lhs == doctest::Approx(1.0));
  CHECK(at_half.rhs == doctest::Approx(3.0));

  CHECK_THROWS_AS(check_derivative_upper_bound(p, {0.0, 0.0}, 2), std::invalid_argument);
}

TEST_CASE("derivative upper bound is tight for pure powers") {
  // P = x^3 at x = 1, j = 2: |P''| = 6 equals 6 * |x - alpha_3|.
  const BoundReport r = check_derivative_upper_bound(IntPolynomial{0, 0, 0, 1}, {1.0, 0.0}, 2);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(6.0));
  CHECK(r.rhs == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("derivative lower bound and its gap hypothesis") {
  const IntPolynomial p{0, -1, 1};  // x(x - 1)
  const BoundReport close = check_derivative_lower_bound(p, {1e-3, 0.0}, 1);
  CHECK(close.applicable);
  CHECK(close.pass);
  CHECK(close.lhs == doctest::Approx(0.998));
  CHECK(close.rhs == doctest::Approx(0.4995));

  const BoundReport tie = check_derivative_lower_bound(IntPolynomial{-1, 0, 1}, {0.0, 0.0}, 1);
  CHECK_FALSE(tie.applicable);

  CHECK_THROWS_AS(check_derivative_lower_bound(p, {0.0, 0.0}, 0), std::invalid_argument);
}

TEST_CASE("seeded derivative-bound sweep has zero violations") {
  const auto summaries = derivative_bound_sweep(42, 500);
  REQUIRE(summaries.size() == 2);
  CHECK(summaries[0].samples == 500);
  CHECK(summaries[0].failures == 0);
  CHECK(summaries[1].failures == 0);
  CHECK(summaries[1].applicable <= summaries[1].samples);

  // Same seed, same outcome.
  const auto again = derivative_bound_sweep(42, 500);
  CHECK(again[0].failures == summaries[0].failures);
  CHECK(again[1].applicable == summaries[1].applicable);
}

TEST_CASE("proximity constants recurrence") {
  const auto c2 = root_proximity_constants(2, 1, 1);
  CHECK(c2 == std::vector<Rational>{2, 8});
  const auto c3 = root_proximity_constants(3, 1, 1);
  CHECK(c3 == std::vector<Rational>{3, 18, 108});
  CHECK_THROWS_AS(root_proximity_constants(2, 1, 0), std::invalid_argument);
}

TEST_CASE("root proximity check paths") {
  // Mismatched profile: the derivative sandwich fails, nothing is asserted.
  const IntPolynomial p{1, 3, 1};
  const ProximityReport vacuous =
      check_root_proximity(p, {0.3, 0.0}, {frac(3, 2), frac(1, 2)}, 10, frac(1, 10), 100);
  CHECK(vacuous.status == ProximityStatus::hypothesis_failed);

  // Constructed case: P = (Ky - 1)(y^2 - 4) with K = 2Q, x = 0, d = (1, 0, 0).
  const long q = 64;
  const long k = 2 * q;
  const IntPolynomial constructed{4, -4 * k, -1, k};
  // Sandwich constants straddling the actual derivative magnitudes.
  const ProximityReport held = check_root_proximity(constructed, {0.0, 0.0},
                                                    {1, 0, 0}, 1000, frac(1, 1000), q);
  CHECK(held.status == ProximityStatus::pass);

  CHECK_THROWS_AS(
      check_root_proximity(p, {0.0, 0.0}, {frac(1, 2), frac(3, 2)}, 10, frac(1, 10), 100),
      std::invalid_argument);  // increasing d-profile
}

TEST_CASE("proximity sweep never reports a violation") {
  const SweepSummary summary = proximity_sweep(7, 60);
  CHECK(summary.failures == 0);
  CHECK(summary.applicable >= 6);  // the constructed cases are applicable
}

TEST_CASE("interval unions normalize to disjoint components") {
  const IntervalUnion u({{frac(1, 2), frac(3, 4)}, {0, frac(1, 2)}, {frac(7, 8), 1}});
  CHECK(u.components().size() == 2);
  CHECK(u.measure() == frac(7, 8));
  CHECK_THROWS_AS(IntervalUnion({{1, 0}}), std::invalid_argument);
}

TEST_CASE("diagonal band measure, exact values") {
  const IntervalUnion full({{0, 1}});
  const IntervalUnion::Interval unit{0, 1};
  CHECK(diagonal_measure(full, unit, frac(1, 2)) == frac(3, 4));
  CHECK(diagonal_measure_lower_bound(full, unit, frac(1, 2)) == frac(1, 128));
  CHECK(diagonal_measure(full, unit, frac(1, 1000)) == frac(1999, 1000000));

  const IntervalUnion split({{0, frac(1, 4)}, {frac(3, 4), 1}});
  const Rational measured = diagonal_measure(split, unit, frac(1, 10));
  CHECK(measured == frac(2, 25));
  CHECK(measured >= diagonal_measure_lower_bound(split, unit, frac(1, 10)));

  CHECK_THROWS_AS(diagonal_measure(full, unit, 1), std::domain_error);
  CHECK_THROWS_AS(diagonal_measure(full, {frac(1, 4), frac(1, 2)}, frac(1, 10)),
                  std::invalid_argument);
}

TEST_CASE("seeded diagonal band sweep has zero violations") {
  const SweepSummary summary = diagonal_band_sweep(11, 300);
  CHECK(summary.samples == 300);
  CHECK(summary.failures == 0);
}

TEST_CASE("near-curve counter, exact values") {
  CHECK(near_curve_count(2, frac(3, 10), 0, 3) == 6);
  CHECK(near_curve_count(1, frac(1, 10), 0, 3) == 3);
  CHECK_THROWS_AS(near_curve_count(2, frac(3, 5), 0, 3), std::domain_error);
  CHECK_THROWS_AS(near_curve_count(2, frac(1, 2), 0, 3), std::domain_error);
  CHECK_THROWS_AS(near_curve_count(0, frac(1, 10), 0, 3), std::invalid_argument);
}

TEST_CASE("near-curve counter is monotone in T and eps") {
  long long previous = -1;
  for (long long t : {1, 2, 4, 8, 16, 32}) {
    const long long n = near_curve_count(t, frac(1, 5), 0, 3);
    CHECK(n >= previous);
    previous = n;
  }
  previous = -1;
  for (long den : {16L, 8L, 4L, 3L}) {
    const long long n = near_curve_count(20, frac(1, den), 0, 3);
    CHECK(n >= previous);
    previous = n;
  }
}

TEST_CASE("exact and floating near-curve counts agree away from boundary ties") {
  for (long den : {20L, 10L, 5L}) {
    const Rational eps = frac(1, den);
    const double eps_d = 1.0 / static_cast<double>(den);
    for (long long q = 1; q <= 50; ++q) {
      for (long long a = 1; a <= 3 * q; ++a) {
        const double value = static_cast<double>(q) *
                             (static_cast<double>(a) / static_cast<double>(q)) *
                             (static_cast<double>(a) / static_cast<double>(q));
        const double dist_f = std::abs(value - std::nearbyint(value));
        if (std::abs(dist_f - eps_d) <= 1e-9) continue;  // boundary tie
        const long long r = (a * a) % q;
        const long long rr = std::min(r, q - r);
        const bool exact_in = rr * den < q;  // rr/q < 1/den
        const bool float_in = dist_f < eps_d;
        CHECK(exact_in == float_in);
      }
    }
  }
  // The floating overload totals also match on a tie-free instance.
  CHECK(near_curve_count(50, 0.15, [](double x) { return x * x; }, 0.0, 3.0) ==
        near_curve_count(50, frac(15, 100), 0, 3));
}

TEST_CASE("dyadic epsilon ladder") {
  CHECK(dyadic_epsilon(0, 10, frac(1, 2)) == 10);
  CHECK(dyadic_epsilon(3, 10, frac(1, 2)) == frac(5, 4));
  CHECK(dyadic_epsilon(0, 7, 1) == 1);
  CHECK_THROWS_AS(dyadic_epsilon(-1, 10, frac(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(dyadic_epsilon(0, 1, frac(1, 2)), std::invalid_argument);
}

TEST_CASE("dyadic epsilon ladder drives the near-curve counter") {
  // Q = 16, v = 3/4: eps_t = 16^(1/2) / 2^t = 4 / 2^t, admissible once below 1/2.
  long long previous = -1;
  for (int t = 4; t <= 7; ++t) {
    const Rational eps = dyadic_epsilon(t, 16, frac(3, 4));
    CHECK(eps == Rational(4) / (1L << t));
    const long long n = near_curve_count(1LL << t, eps, 0, 3);
    CHECK(n >= 0);
    if (previous >= 0) {
      // Halving eps at fixed T can only reduce the count.
      CHECK(near_curve_count(1LL << t, eps, 0, 3) <=
            near_curve_count(1LL << t, dyadic_epsilon(t - 1, 16, frac(3, 4)), 0, 3));
    }
    previous = n;
  }
}

TEST_CASE("exponent fitting") {
  const FitResult cubic = fit_exponent({{10, 1e3}, {100, 1e6}});
  CHECK(cubic.slope == doctest::Approx(3.0));
  CHECK(cubic.points_used == 2);

  const FitResult with_constant = fit_exponent({{10, 500}, {100, 50000}});
  CHECK(with_constant.slope == doctest::Approx(2.0));
  CHECK(with_constant.intercept == doctest::Approx(std::log(5.0)));

  // 5% multiplicative noise moves a 4-point slope by far less than 0.1.
  std::vector<std::pair<double, double>> noisy;
  double sign = 1.0;
  for (double q : {10.0, 20.0, 40.0, 80.0}) {
    noisy.push_back({q, 7.0 * std::pow(q, 2.5) * (1.0 + 0.05 * sign)});
    sign = -sign;
  }
  const FitResult fit = fit_exponent(noisy);
  CHECK(std::abs(fit.slope - 2.5) < 0.1);
  CHECK(fit.max_residual < 0.1);

  CHECK_THROWS_AS(fit_exponent({{10, 100}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_exponent({{10, 100}, {20, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_exponent({{10, 100}, {10, 200}}), std::invalid_argument);
}
