#pragma once

#include <string>
#include <vector>

#include "discres/rational_util.hpp"

namespace discres {

// Optimal root-separation profile behind the discriminant counting bound.
// All arithmetic is exact rational: fitted slopes are later compared against
// these values, so the reference must carry no rounding at all.
struct ExponentProfile {
  int n = 2;
  Rational v = 0;
  std::vector<Rational> d;         // d_1..d_n, descending, sum j*d_j = n+1
  std::vector<Rational> vprofile;  // v_0..v_n, v_{j-1} - v_j = d_j, v_n = -1
  Rational exponent = 0;           // predicted count exponent, = d_1
  // Set at v = n-1 exactly, where the scale constant in the threshold can no
  // longer be chosen freely.
  bool gamma_warning = false;
};

// Profile for the resultant pair-counting bound; t is the diagonal-band
// exponent and the predicted exponent equals 2*d_1 - t.
struct ResultantProfile {
  enum class Case { low_w, high_w };
  int n = 1;
  Rational w = 0;
  std::vector<Rational> d;
  Rational t = 0;
  Case case_tag = Case::low_w;
  Rational exponent = 0;
};

// Closed-form solution maximising d_1 subject to
//   sum j*d_j = n+1,  sum d_j = n+1-v,  d_1 >= ... >= d_n >= 0:
// d_2 = ... = d_n = 2v/(n(n-1)), d_1 = n+1 - (n+2)v/n.
// Requires n >= 2 and 0 <= v <= n-1.
ExponentProfile optimal_discriminant_profile(int n, const Rational& v);

// Closed-form solution maximising 2*d_1 - t subject to the same d-constraints
// plus d_1 >= t >= d_2 and 2*d_1 - t + sum_{j>=2} d_j = 2n+2-2w.
// Requires n >= 1 and 0 <= w <= n.
ResultantProfile optimal_resultant_profile(int n, const Rational& w);

struct ConstraintResidual {
  std::string name;
  Rational residual;     // exact; equality constraints demand 0
  bool is_inequality;    // inequality rows: residual is the slack, >= 0 required
  bool satisfied;
};

std::vector<ConstraintResidual> verify_profile(const ExponentProfile& profile);
std::vector<ConstraintResidual> verify_profile(const ResultantProfile& profile);

// Count exponent contributed by degree-k polynomials at discriminant-size
// parameter x: 2/k + (k+2)/(2k) * x capped at k+1 from x = 2k-2 on.
// Requires k >= 2, x >= 0.
Rational degree_count_exponent(int k, const Rational& x);

// max over 2 <= k <= n of degree_count_exponent: piecewise-linear staircase,
// computed both as the max and from the explicit branch formula, which are
// asserted equal. Requires n >= 2, x >= 0.
Rational staircase_exponent(int n, const Rational& x);

// Smallest k attaining the staircase max at x.
int staircase_argmax(int n, const Rational& x);

// Exponent x+2 for the union-over-degrees resultant count, 0 <= x <= 2n+2.
Rational resultant_union_exponent(int n, const Rational& x);

}  // namespace discres
