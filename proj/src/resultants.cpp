#include "discres/resultants.hpp"

#include <stdexcept>
#include <utility>

namespace discres {

BigMatrix sylvester_matrix(const IntPolynomial& p1, const IntPolynomial& p2) {
  const int n = p1.degree();
  const int m = p2.degree();
  if (n < 1 || m < 1) {
    throw std::invalid_argument("sylvester_matrix: both degrees must be >= 1");
  }
  const int size = n + m;
  BigMatrix mat(static_cast<size_t>(size), std::vector<BigInt>(static_cast<size_t>(size), BigInt(0)));
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) {
      mat[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = p1.coeff(n - k);
    }
  }
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) {
      mat[static_cast<size_t>(m + row)][static_cast<size_t>(row + k)] = p2.coeff(m - k);
    }
  }
  return mat;
}

BigInt determinant(BigMatrix m) {
  const size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix must be square");
  }
  if (n == 0) return BigInt(1);

  int sign = 1;
  BigInt prev_pivot = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k;
      for (size_t i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == k) return BigInt(0);  // column is zero below the diagonal
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    const BigInt& pivot = m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev_pivot;  // exact
      }
      m[i][k] = 0;
    }
    prev_pivot = pivot;
  }
  BigInt det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

BigInt resultant(const IntPolynomial& p1, const IntPolynomial& p2) {
  return determinant(sylvester_matrix(p1, p2));
}

BigInt discriminant(const IntPolynomial& p) {
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
  BigInt r = resultant(p, p.derivative());
  BigInt q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  if (rem != 0) {
    throw std::logic_error("discriminant: resultant not divisible by leading coefficient");
  }
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) q = -q;
  return q;
}

BigInt discriminant_bound_constant(int n) {
  if (n < 2) throw std::invalid_argument("discriminant_bound_constant: n >= 2");
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * n - 1));
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(2 * n - 1));
  return fact * power;
}

BigInt resultant_bound_constant(int n) {
  if (n < 1) throw std::invalid_argument("resultant_bound_constant: n >= 1");
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * n));
  return fact;
}

long long quadratic_discriminant(long long a, long long b, long long c) {
  return b * b - 4 * a * c;
}

long long cubic_discriminant(long long a, long long b, long long c, long long d) {
  return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
         27 * a * a * d * d;
}

long long linear_resultant(long long a1, long long a0, long long b1, long long b0) {
  return a1 * b0 - a0 * b1;
}

long long quadratic_resultant(long long a, long long b, long long c, long long d,
                              long long e, long long f) {
  const long long u = a * f - c * d;
  return u * u - (a * e - b * d) * (b * f - c * e);
}

}  // namespace discres
