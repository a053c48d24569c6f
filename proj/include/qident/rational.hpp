#pragma once

#include <gmpxx.h>

#include <string>

namespace qident {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den as a canonical rational; den must be nonzero.
Rational make_rational(long num, long den);
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "-p" or "p/q" (decimal-free).
Rational rational_from_string(const std::string& s);

/// Decimal-free rendering, "p" or "p/q".
std::string rational_to_string(const Rational& r);

/// Decimal approximation with the given number of significant digits.
/// Display only; exact values always travel as rational strings.
std::string rational_to_decimal(const Rational& r, int sig_digits = 12);

/// base^exp as an exact integer, exp >= 0.
BigInt int_pow(const BigInt& base, unsigned long exp);

/// base^exp for rational base; negative exponents allowed (base != 0).
Rational rational_pow(const Rational& base, long exp);

/// 1/q^e for integer q >= 2 and e >= 0.
Rational inv_power(long q, unsigned long e);

/// (x)_n = (1-x)(1-x^2)...(1-x^n) evaluated at a rational x; (x)_0 = 1.
Rational pochhammer_at(const Rational& x, int n);

/// Falling-factorial binomial C(n, k) for big n and small k.
BigInt binomial(const BigInt& n, unsigned long k);

}  // namespace qident
