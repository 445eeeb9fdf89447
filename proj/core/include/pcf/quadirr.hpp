#pragma once

#include <string>

#include "pcf/rational.hpp"

namespace pcf {

// Element x + y*sqrt(D) of Q(sqrt(D)), exact components. D is stored
// verbatim (not reduced to its squarefree part) because the digit
// bookkeeping downstream works with the radicand as given.
struct QuadIrr {
  Rational x;
  Rational y;
  long D = 0;

  bool operator==(const QuadIrr& other) const = default;
};

// Validating constructor: D must be positive and not a perfect square.
QuadIrr make_quadirr(Rational x, Rational y, long D);

// Embeds a rational into Q(sqrt(D)) (y = 0).
QuadIrr qi_from_rational(Rational q, long D);

inline bool qi_is_rational(const QuadIrr& a) { return a.y == 0; }

// 1/(alpha - a), exact. Throws DivisionByZero when alpha = a.
QuadIrr qi_sub_inv(const QuadIrr& alpha, const Rational& a);

// x - y*sqrt(D).
QuadIrr qi_conjugate(const QuadIrr& alpha);

// alpha * conjugate(alpha) = x^2 - D*y^2.
Rational qi_norm(const QuadIrr& alpha);

// Decimal rendering of x + y*sqrt(D) (positive real root) to `digits`
// significant digits, guaranteed by interval refinement around sqrt(D).
std::string real_embed(const QuadIrr& alpha, int digits);

// "x + y*sqrt(D)" diagnostic form.
std::string qi_to_string(const QuadIrr& alpha);

}  // namespace pcf
