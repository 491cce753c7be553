#include "discres/rational_util.hpp"

#include <stdexcept>

namespace discres {

Rational parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational \"p/q\": '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::optional<Rational> exact_rational_power(const BigInt& q, const BigInt& num,
                                             const BigInt& den) {
  if (q < 1 || num < 0 || den < 1) {
    throw std::invalid_argument("exact_rational_power: need Q >= 1, num >= 0, den >= 1");
  }
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), q.get_mpz_t(), num.get_ui());
  BigInt root;
  const int exact =
      mpz_root(root.get_mpz_t(), power.get_mpz_t(), den.get_ui());
  if (!exact) return std::nullopt;
  return Rational(root);
}

BigInt floor_scaled_power(const BigInt& q, const Rational& exponent,
                          const Rational& scale) {
  if (q < 1) throw std::invalid_argument("floor_scaled_power: Q >= 1 required");
  if (exponent < 0 || scale < 0) {
    throw std::invalid_argument("floor_scaled_power: exponent and scale must be >= 0");
  }
  const BigInt a = exponent.get_num();
  const BigInt b = exponent.get_den();  // canonical, b >= 1
  const unsigned long k = b.get_ui();

  // floor(s * Q^(a/b)) = floor( b-th root of floor(s^b * Q^a) ) for s >= 0:
  // r^b <= s^b Q^a  <=>  r^b <= floor(s^b Q^a) because r^b is an integer.
  BigInt qa;
  mpz_pow_ui(qa.get_mpz_t(), q.get_mpz_t(), a.get_ui());
  BigInt sn_k, sd_k;
  mpz_pow_ui(sn_k.get_mpz_t(), scale.get_num().get_mpz_t(), k);
  mpz_pow_ui(sd_k.get_mpz_t(), scale.get_den().get_mpz_t(), k);
  BigInt inner = (sn_k * qa) / sd_k;  // mpz division truncates toward zero; operands >= 0
  BigInt result;
  mpz_root(result.get_mpz_t(), inner.get_mpz_t(), k);
  return result;
}

Rational lower_rational_power(const BigInt& q, const Rational& exponent,
                              const Rational& scale, unsigned bits) {
  if (auto exact = exact_rational_power(q, exponent.get_num(), exponent.get_den())) {
    return scale * *exact;
  }
  BigInt two_bits;
  mpz_ui_pow_ui(two_bits.get_mpz_t(), 2, bits);
  const BigInt num = floor_scaled_power(q, exponent, scale * Rational(two_bits));
  Rational r(num, two_bits);
  r.canonicalize();
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt falling_factorial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= BigInt(n - i);
  return r;
}

}  // namespace discres
