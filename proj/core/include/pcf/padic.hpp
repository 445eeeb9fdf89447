#pragma once

#include <map>
#include <vector>

#include "pcf/quadirr.hpp"
#include "pcf/rational.hpp"

namespace pcf {

// Symmetric-residue digit window: digits c_lo..c_hi of the p-adic
// expansion, each in {-(p-1)/2, ..., (p-1)/2}. When lo is the valuation
// of the element the leading digit is nonzero.
struct DigitWindow {
  long lo = 0;
  std::vector<long> digits;
};

enum class Branch { Default, Alternate };

// Everything needed to read p-adic digits of elements of Q(sqrt(D)):
// the prime, the chosen branch of sqrt(D) in Z_p, and a cache of Hensel
// lifts of that root. The cache mutates; share one context per thread.
class PadicContext {
 public:
  // Requires: p an odd prime, D >= 1 with p not dividing D (else
  // RamifiedPrime) and D a quadratic residue mod p (else NotAResidue).
  // The default branch root is the one in {1, ..., (p-1)/2}.
  PadicContext(long p, long D, Branch branch = Branch::Default,
               long max_precision = 1L << 20);

  long p() const { return p_; }
  long D() const { return D_; }
  long branch_digit() const { return branch_digit_; }
  long max_precision() const { return max_precision_; }

  // S_k in [0, p^k) with S_k^2 = D (mod p^k), S_k = branch_digit (mod p).
  // Newton lifting, quadratic in the cached precision; results cached.
  mpz_class hensel_sqrt(long k);

  // p^k (cached small powers are not worth the bookkeeping; GMP is fast).
  mpz_class pow_p(long k) const;

 private:
  long p_;
  long D_;
  long branch_digit_;
  long max_precision_;
  long cache_top_;                  // highest precision lifted so far
  std::map<long, mpz_class> cache_; // precision -> root mod p^precision
};

// v_p(alpha) for nonzero alpha. Exact for rationals; for irrational
// alpha uses residue evaluation at escalating precision (the x and y
// parts can cancel arbitrarily deep, hence the cap).
long padic_valuation(PadicContext& ctx, const QuadIrr& alpha);

// Digits c_i for v_p(alpha) <= i <= hi; alpha minus the window sum has
// valuation > hi. Requires hi >= v_p(alpha).
DigitWindow padic_digits(PadicContext& ctx, const QuadIrr& alpha, long hi);

// s(alpha) = sum of digits at exponents v..0, or 0 when v > 0.
Rational floor_s(PadicContext& ctx, const QuadIrr& alpha);

// t(alpha) = sum of digits at exponents v..-1, or 0 when v >= 0.
Rational floor_t(PadicContext& ctx, const QuadIrr& alpha);

// alpha = p^v * u with u a unit; returns (v, U) where U = u mod p^K,
// 0 <= U < p^K. The workhorse behind the four operations above.
std::pair<long, mpz_class> unit_residue(PadicContext& ctx, const QuadIrr& alpha,
                                        long K);

}  // namespace pcf
