#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "discres/rational_util.hpp"

namespace discres {

// Integer-coefficient polynomial of exact degree: the stored leading
// coefficient is always nonzero. Coefficient i belongs to x^i, so the
// constant term sits at index 0.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }
  const BigInt& leading() const { return coeffs_.back(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  // max |a_i| over all coefficients.
  BigInt height() const;

  // Derivative with exact integer coefficients. A degree-0 input has no
  // meaningful derivative here and is rejected with std::domain_error.
  IntPolynomial derivative() const;
  IntPolynomial derivative(int order) const;

  // Horner evaluation.
  std::complex<double> evaluate(std::complex<double> x) const;
  BigInt evaluate(const BigInt& x) const;  // exact

  std::string to_string() const;

  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
};

}  // namespace discres
