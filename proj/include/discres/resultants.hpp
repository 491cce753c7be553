#pragma once

#include <cstdint>
#include <vector>

#include "discres/int_polynomial.hpp"

namespace discres {

// Dense square integer matrix, row major.
using BigMatrix = std::vector<std::vector<BigInt>>;

// The (n+m) x (n+m) matrix whose first m rows carry shifted coefficients of
// p1 (leading coefficient first) and whose last n rows carry shifted
// coefficients of p2. Both degrees must be >= 1.
BigMatrix sylvester_matrix(const IntPolynomial& p1, const IntPolynomial& p2);

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// Every intermediate value stays an exact integer.
BigInt determinant(BigMatrix m);

// det of the Sylvester matrix; zero iff p1 and p2 share a complex root.
BigInt resultant(const IntPolynomial& p1, const IntPolynomial& p2);

// (-1)^(n(n-1)/2) * resultant(P, P') / a_n for deg P = n >= 2. The division
// is exact; a nonzero remainder indicates a determinant bug and throws.
BigInt discriminant(const IntPolynomial& p);

// A computed constant g(n) with |D(P)| <= g(n) * Q^(2n-2) for all P of degree
// n and height <= Q: here (2n-1)! * n^(2n-1), a permanent-style bound on the
// Sylvester determinant of (P, P').
BigInt discriminant_bound_constant(int n);

// (2n)!  --  |R(P1,P2)| <= (2n)! * Q^(2n) on pairs from P_n(Q).
BigInt resultant_bound_constant(int n);

// Closed forms used by the counting fast paths. Arguments are coefficients in
// decreasing-degree order. Callers are responsible for staying inside int64
// range (|.| <= 5Q^2, 54Q^4, 2Q^2, 8Q^4 respectively).
long long quadratic_discriminant(long long a, long long b, long long c);
long long cubic_discriminant(long long a, long long b, long long c, long long d);
long long linear_resultant(long long a1, long long a0, long long b1, long long b0);
long long quadratic_resultant(long long a, long long b, long long c,
                              long long d, long long e, long long f);

}  // namespace discres
