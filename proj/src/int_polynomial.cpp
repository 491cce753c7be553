#include "discres/int_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace discres {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("polynomial needs at least one coefficient");
  }
  if (coeffs_.back() == 0) {
    throw std::invalid_argument("leading coefficient must be nonzero (exact degree)");
  }
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
    : IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

BigInt IntPolynomial::height() const {
  BigInt h = 0;
  for (const BigInt& c : coeffs_) {
    BigInt a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() == 0) {
    throw std::domain_error("constant polynomial has no derivative of interest");
  }
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * BigInt(static_cast<unsigned long>(i));
  }
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  IntPolynomial p = *this;
  for (int i = 0; i < order; ++i) p = p.derivative();
  return p;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> y = coeffs_.back().get_d();
  for (size_t i = coeffs_.size() - 1; i-- > 0;) {
    y = y * x + coeffs_[i].get_d();
  }
  return y;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt y = coeffs_.back();
  for (size_t i = coeffs_.size() - 1; i-- > 0;) {
    y = y * x + coeffs_[i];
  }
  return y;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0 && coeffs_.size() > 1) continue;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) out << a.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

}  // namespace discres
