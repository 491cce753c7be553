#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "discres/int_polynomial.hpp"

namespace discres {

// Approximate complex roots with a per-root inclusion radius. All roots of a
// degree-n input are present, so roots.size() == n.
struct RootSet {
  std::vector<std::complex<double>> roots;
  std::vector<double> radii;
};

// Thrown when the simultaneous iteration fails to reach an acceptable
// residual; carries the best iterate found.
class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(std::string what, RootSet best)
      : std::runtime_error(std::move(what)), best_iterate(std::move(best)) {}
  RootSet best_iterate;
};

// All complex roots by Aberth simultaneous iteration on the monic rescaled
// polynomial, started on a circle of radius 1 + H(P)/|a_n|.
RootSet find_roots(const IntPolynomial& p);

// Stable reordering by |x - root|, ascending; ties keep their original order.
RootSet sort_roots_by_distance(RootSet rs, std::complex<double> x);

// Numerical cross-check oracles against the exact integer pipeline:
// a_n^(2n-2) * prod_{i<j} (alpha_i - alpha_j)^2, and
// a_n^m * prod_i p2(alpha_i) over the roots alpha of p1.
std::complex<double> discriminant_from_roots(const IntPolynomial& p);
std::complex<double> resultant_from_roots(const IntPolynomial& p1,
                                          const IntPolynomial& p2);

}  // namespace discres
