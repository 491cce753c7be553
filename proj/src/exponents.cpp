#include "discres/exponents.hpp"

#include <stdexcept>

namespace discres {

namespace {

Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void push_equality(std::vector<ConstraintResidual>& out, std::string name,
                   const Rational& residual) {
  out.push_back({std::move(name), residual, false, residual == 0});
}

void push_slack(std::vector<ConstraintResidual>& out, std::string name,
                const Rational& slack) {
  out.push_back({std::move(name), slack, true, slack >= 0});
}

}  // namespace

ExponentProfile optimal_discriminant_profile(int n, const Rational& v) {
  if (n < 2) throw std::invalid_argument("optimal_discriminant_profile: n >= 2 required");
  if (v < 0 || v > n - 1) {
    throw std::domain_error(
        "v must lie in [0, n-1]: integer discriminants satisfy 1 <= |D(P)| and "
        "|D(P)| <= gamma * Q^(2n-2), so thresholds outside that window are empty or full");
  }
  ExponentProfile p;
  p.n = n;
  p.v = v;
  const Rational d_tail = 2 * v / rat(static_cast<long>(n) * (n - 1));
  const Rational d_head = rat(n + 1) - rat(n + 2, n) * v;
  p.d.assign(static_cast<size_t>(n), d_tail);
  p.d[0] = d_head;
  p.exponent = d_head;
  p.vprofile.resize(static_cast<size_t>(n) + 1);
  p.vprofile[0] = rat(n) - v;
  for (int j = 1; j < n; ++j) p.vprofile[static_cast<size_t>(j)] = rat(-1) + rat(n - j) * d_tail;
  p.vprofile[static_cast<size_t>(n)] = rat(-1);
  p.gamma_warning = (v == n - 1);
  return p;
}

ResultantProfile optimal_resultant_profile(int n, const Rational& w) {
  if (n < 1) throw std::invalid_argument("optimal_resultant_profile: n >= 1 required");
  if (w < 0 || w > n) {
    throw std::domain_error(
        "w must lie in [0, n]: integer resultants satisfy 1 <= |R| <= rho * Q^(2n)");
  }
  ResultantProfile p;
  p.n = n;
  p.w = w;
  p.d.assign(static_cast<size_t>(n), Rational(0));
  if (2 * w <= n + 1) {
    p.case_tag = ResultantProfile::Case::low_w;
    p.d[0] = rat(n + 1);
    p.t = 2 * w;
    p.exponent = rat(2 * (n + 1)) - 2 * w;  // 2*d_1 - t
  } else {
    p.case_tag = ResultantProfile::Case::high_w;
    const Rational d_tail = (4 * w - rat(2 * n + 2)) / rat(static_cast<long>(n) * (n - 1));
    const Rational d_head = rat(2 * n + 2) - 2 * w - rat(2, n) * (2 * w - rat(n + 1));
    for (int j = 1; j < n; ++j) p.d[static_cast<size_t>(j)] = d_tail;
    p.d[0] = d_head;
    p.t = d_head;
    p.exponent = d_head;  // 2*d_1 - t with t = d_1
  }
  return p;
}

std::vector<ConstraintResidual> verify_profile(const ExponentProfile& profile) {
  std::vector<ConstraintResidual> out;
  const int n = profile.n;
  Rational weighted_sum = 0, plain_sum = 0;
  for (int j = 1; j <= n; ++j) {
    weighted_sum += rat(j) * profile.d[static_cast<size_t>(j - 1)];
    plain_sum += profile.d[static_cast<size_t>(j - 1)];
  }
  push_equality(out, "sum j*d_j = n+1", weighted_sum - rat(n + 1));
  push_equality(out, "sum d_j = n+1-v", plain_sum - (rat(n + 1) - profile.v));
  for (int j = 1; j < n; ++j) {
    push_slack(out, "d_" + std::to_string(j) + " >= d_" + std::to_string(j + 1),
               profile.d[static_cast<size_t>(j - 1)] - profile.d[static_cast<size_t>(j)]);
  }
  push_slack(out, "d_n >= 0", profile.d[static_cast<size_t>(n - 1)]);

  if (profile.vprofile.size() == static_cast<size_t>(n) + 1) {
    Rational vsum = 0;
    for (const Rational& vj : profile.vprofile) vsum += vj;
    push_equality(out, "sum v_j = 0", vsum);
    push_equality(out, "v_n = -1", profile.vprofile[static_cast<size_t>(n)] + 1);
    for (int j = 1; j <= n; ++j) {
      push_equality(out, "v_" + std::to_string(j - 1) + " - v_" + std::to_string(j) + " = d_" + std::to_string(j),
                    profile.vprofile[static_cast<size_t>(j - 1)] -
                        profile.vprofile[static_cast<size_t>(j)] -
                        profile.d[static_cast<size_t>(j - 1)]);
      push_slack(out, "v_" + std::to_string(j - 1) + " >= v_" + std::to_string(j),
                 profile.vprofile[static_cast<size_t>(j - 1)] - profile.vprofile[static_cast<size_t>(j)]);
    }
  }
  push_equality(out, "exponent = d_1", profile.exponent - profile.d[0]);
  return out;
}

std::vector<ConstraintResidual> verify_profile(const ResultantProfile& profile) {
  std::vector<ConstraintResidual> out;
  const int n = profile.n;
  Rational weighted_sum = 0, tail_sum = 0;
  for (int j = 1; j <= n; ++j) {
    weighted_sum += rat(j) * profile.d[static_cast<size_t>(j - 1)];
    if (j >= 2) tail_sum += profile.d[static_cast<size_t>(j - 1)];
  }
  const Rational d1 = profile.d[0];
  const Rational d2 = n >= 2 ? profile.d[1] : Rational(0);
  push_equality(out, "sum j*d_j = n+1", weighted_sum - rat(n + 1));
  push_equality(out, "2d_1 - t + sum_{j>=2} d_j = 2n+2-2w",
                2 * d1 - profile.t + tail_sum - (rat(2 * n + 2) - 2 * profile.w));
  push_equality(out, "2d_1 + (n-1)(n+2)d_2 = 2n+2",
                2 * d1 + rat(static_cast<long>(n - 1) * (n + 2)) * d2 - rat(2 * n + 2));
  push_equality(out, "(n^2-1)d_2 + t = 2w",
                rat(static_cast<long>(n) * n - 1) * d2 + profile.t - 2 * profile.w);
  push_slack(out, "d_1 >= t", d1 - profile.t);
  push_slack(out, "t >= d_2", profile.t - d2);
  for (int j = 1; j < n; ++j) {
    push_slack(out, "d_" + std::to_string(j) + " >= d_" + std::to_string(j + 1),
               profile.d[static_cast<size_t>(j - 1)] - profile.d[static_cast<size_t>(j)]);
  }
  push_slack(out, "d_n >= 0", profile.d[static_cast<size_t>(n - 1)]);
  push_equality(out, "exponent = 2d_1 - t", profile.exponent - (2 * d1 - profile.t));
  return out;
}

Rational degree_count_exponent(int k, const Rational& x) {
  if (k < 2) throw std::invalid_argument("degree_count_exponent: k >= 2 required");
  if (x < 0) throw std::invalid_argument("degree_count_exponent: x >= 0 required");
  Rational capped = x / 2;
  if (capped > k - 1) capped = rat(k - 1);
  return rat(k + 1) - rat(k + 2, k) * (rat(k - 1) - capped);
}

namespace {

// Explicit branch formula for the staircase; cross-checked against the max
// form in staircase_exponent.
Rational staircase_explicit(int n, const Rational& x) {
  if (x <= 2) return x + 1;
  if (x >= 2 * n - 2) return rat(n + 1);
  for (int k = 3; k <= n; ++k) {
    const Rational plateau_start = rat(2 * k - 4);
    const Rational plateau_end = plateau_start + rat(4, k + 2);
    const Rational line_end = rat(2 * k - 2);
    if (x >= plateau_start && x <= plateau_end) return rat(k);
    if (x >= plateau_end && x <= line_end) return rat(2, k) + rat(k + 2, 2 * k) * x;
  }
  throw std::logic_error("staircase_explicit: uncovered x");
}

}  // namespace

Rational staircase_exponent(int n, const Rational& x) {
  if (n < 2) throw std::invalid_argument("staircase_exponent: n >= 2 required");
  Rational best = degree_count_exponent(2, x);
  for (int k = 3; k <= n; ++k) {
    const Rational fk = degree_count_exponent(k, x);
    if (fk > best) best = fk;
  }
  if (best != staircase_explicit(n, x)) {
    throw std::logic_error("staircase_exponent: max form and explicit form disagree");
  }
  return best;
}

int staircase_argmax(int n, const Rational& x) {
  if (n < 2) throw std::invalid_argument("staircase_argmax: n >= 2 required");
  int best_k = 2;
  Rational best = degree_count_exponent(2, x);
  for (int k = 3; k <= n; ++k) {
    const Rational fk = degree_count_exponent(k, x);
    if (fk > best) {
      best = fk;
      best_k = k;
    }
  }
  return best_k;
}

Rational resultant_union_exponent(int n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("resultant_union_exponent: n >= 1 required");
  if (x < 0 || x > 2 * n + 2) {
    throw std::domain_error("resultant_union_exponent: x must lie in [0, 2n+2]");
  }
  return x + 2;
}

}  // namespace discres
