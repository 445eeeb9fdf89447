#pragma once

#include <gmpxx.h>

#include <string>

namespace pcf {

// Exact rationals. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as they are built through the helpers
// below or through arithmetic on already-canonical values.
using Rational = mpq_class;

// Canonicalized num/den constructor. Throws ZeroDenominator on den = 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Parses "n", "-n", "n/d" (arbitrary precision). Throws DomainError on
// malformed input, ZeroDenominator on a zero denominator.
Rational rational_from_string(const std::string& s);

// p-adic valuation of a nonzero integer / rational. Throws DomainError
// on zero input.
long vp_int(const mpz_class& n, const mpz_class& p);
long vp_rational(const Rational& q, const mpz_class& p);

enum class Rounding {
  Truncate,          // toward zero
  HalfAwayFromZero,  // ties away from zero
};

// Fixed-point decimal rendering with `frac_digits` fractional digits.
// The sign applies to the magnitude; rounding is on |q|.
std::string decimal_fixed(const Rational& q, int frac_digits,
                          Rounding mode = Rounding::Truncate);

// |q| rounded half away from zero to `digits` significant digits.
// Trailing zeros are kept so the result always shows exactly `digits`
// significant digits (integers wider than that are zero-padded).
std::string decimal_significant(const Rational& q, int digits);

}  // namespace pcf
