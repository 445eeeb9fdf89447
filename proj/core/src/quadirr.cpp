#include "pcf/quadirr.hpp"

#include "pcf/errors.hpp"

namespace pcf {

QuadIrr make_quadirr(Rational x, Rational y, long D) {
  if (D <= 0) throw DomainError("radicand must be positive");
  mpz_class d(D);
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    throw DomainError("radicand must not be a perfect square");
  }
  return QuadIrr{std::move(x), std::move(y), D};
}

QuadIrr qi_from_rational(Rational q, long D) {
  return make_quadirr(std::move(q), Rational(0), D);
}

QuadIrr qi_sub_inv(const QuadIrr& alpha, const Rational& a) {
  Rational xs = alpha.x - a;
  if (alpha.y == 0 && xs == 0) {
    throw DivisionByZero("inverting alpha - a with alpha = a");
  }
  // 1/(xs + y*sqrt(D)) = (xs - y*sqrt(D)) / (xs^2 - D*y^2). The norm is
  // nonzero: D is not a square, so it vanishes only at xs = y = 0.
  Rational norm = xs * xs - Rational(alpha.D) * alpha.y * alpha.y;
  return QuadIrr{xs / norm, -alpha.y / norm, alpha.D};
}

QuadIrr qi_conjugate(const QuadIrr& alpha) {
  return QuadIrr{alpha.x, -alpha.y, alpha.D};
}

Rational qi_norm(const QuadIrr& alpha) {
  return alpha.x * alpha.x - Rational(alpha.D) * alpha.y * alpha.y;
}

std::string real_embed(const QuadIrr& alpha, int digits) {
  if (digits < 1) throw DomainError("need at least one significant digit");
  if (alpha.y == 0) return decimal_significant(alpha.x, digits);
  // sqrt(D) in [r, r+1]/10^m with r = isqrt(D * 10^(2m)); widen m until
  // both interval ends render identically at the requested precision.
  for (long m = 32;; m *= 2) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(m));
    mpz_class r;
    mpz_class scaled = mpz_class(alpha.D) * scale * scale;
    mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
    Rational lo = make_rational(r, scale);
    Rational hi = make_rational(r + 1, scale);
    Rational vlo = alpha.x + alpha.y * (alpha.y > 0 ? lo : hi);
    Rational vhi = alpha.x + alpha.y * (alpha.y > 0 ? hi : lo);
    std::string slo = decimal_significant(vlo, digits);
    std::string shi = decimal_significant(vhi, digits);
    if (slo == shi) return slo;
  }
}

std::string qi_to_string(const QuadIrr& alpha) {
  return alpha.x.get_str() + " + " + alpha.y.get_str() + "*sqrt(" +
         std::to_string(alpha.D) + ")";
}

}  // namespace pcf
