#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace discres {

using BigInt = mpz_class;
using Rational = mpq_class;

// Parses "p/q" or "p" (base 10, optional sign). Decimal notation is rejected.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p/q" form; plain "p" when the denominator is 1.
std::string rational_str(const Rational& r);

// Q^(num/den) as an exact rational when the den-th root of Q^num exists,
// nullopt otherwise. Requires Q >= 1, num >= 0, den >= 1.
std::optional<Rational> exact_rational_power(const BigInt& q, const BigInt& num,
                                             const BigInt& den);

// floor(scale * Q^exponent) with directed (downward) rounding throughout, so a
// threshold computed this way never over-approximates the set it bounds.
// Requires Q >= 1, exponent >= 0, scale >= 0.
BigInt floor_scaled_power(const BigInt& q, const Rational& exponent,
                          const Rational& scale);

// scale * Q^exponent as an exact rational when possible; otherwise the largest
// rational with denominator 2^bits that does not exceed the true value.
Rational lower_rational_power(const BigInt& q, const Rational& exponent,
                              const Rational& scale, unsigned bits = 128);

// Exact binomial coefficient and falling factorial n*(n-1)*...*(n-k+1).
BigInt binomial(unsigned n, unsigned k);
BigInt falling_factorial(unsigned n, unsigned k);

}  // namespace discres
