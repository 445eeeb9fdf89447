#include "pcf/padic.hpp"

#include <utility>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

// Tonelli-Shanks square root of a mod odd prime p; a must be a nonzero
// quadratic residue. Fits in long arithmetic via GMP scalars.
long sqrt_mod_prime(long a, long p) {
  mpz_class ap(a), pp(p);
  if (p % 4 == 3) {
    mpz_class r;
    mpz_class e = (pp + 1) / 4;
    mpz_powm(r.get_mpz_t(), ap.get_mpz_t(), e.get_mpz_t(), pp.get_mpz_t());
    return r.get_si();
  }
  // Write p - 1 = q * 2^s with q odd.
  long s = 0;
  mpz_class q = pp - 1;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  // A generator of the 2-Sylow subgroup from any non-residue.
  mpz_class z(2);
  while (mpz_legendre(z.get_mpz_t(), pp.get_mpz_t()) != -1) ++z;
  mpz_class c, t, r;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
  mpz_powm(t.get_mpz_t(), ap.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
  mpz_class e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), ap.get_mpz_t(), e.get_mpz_t(), pp.get_mpz_t());
  long m = s;
  while (t != 1) {
    mpz_class tt = t;
    long i = 0;
    while (tt != 1) {
      tt = tt * tt % pp;
      ++i;
    }
    mpz_class b = c;
    for (long j = 0; j < m - i - 1; ++j) b = b * b % pp;
    r = r * b % pp;
    c = b * b % pp;
    t = t * c % pp;
    m = i;
  }
  return r.get_si();
}

mpz_class invert_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DomainError("non-invertible residue");
  }
  return r;
}

// num * den^{-1} mod m for a fraction with p-free denominator.
mpz_class fraction_residue(const Rational& q, const mpz_class& m) {
  mpz_class r = q.get_num() * invert_mod(q.get_den(), m) % m;
  if (r < 0) r += m;
  return r;
}

long centered(const mpz_class& u, long p) {
  long c = mpz_class(u % p).get_si();
  if (2 * c > p - 1) c -= p;
  return c;
}

void check_same_field(const PadicContext& ctx, const QuadIrr& alpha) {
  if (alpha.y != 0 && alpha.D != ctx.D()) {
    throw DomainError("element radicand does not match the context");
  }
}

}  // namespace

PadicContext::PadicContext(long p, long D, Branch branch, long max_precision)
    : p_(p), D_(D), max_precision_(max_precision), cache_top_(1) {
  mpz_class pp(p);
  if (p < 3 || p % 2 == 0 ||
      mpz_probab_prime_p(pp.get_mpz_t(), 40) == 0) {
    throw DomainError("p must be an odd prime");
  }
  if (D < 1) throw DomainError("D must be positive");
  if (max_precision < 1) throw DomainError("max_precision must be positive");
  if (D % p == 0) throw RamifiedPrime("p divides D");
  mpz_class dd(D % p);
  if (mpz_legendre(dd.get_mpz_t(), pp.get_mpz_t()) != 1) {
    throw NotAResidue("D is not a quadratic residue mod p");
  }
  long r = sqrt_mod_prime(D % p, p);
  r = std::min(r, p - r);
  branch_digit_ = branch == Branch::Alternate ? p - r : r;
  cache_[1] = branch_digit_;
}

mpz_class PadicContext::pow_p(long k) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(k));
  return r;
}

mpz_class PadicContext::hensel_sqrt(long k) {
  if (k < 1) throw DomainError("precision must be positive");
  if (k > max_precision_) {
    throw PrecisionCapExceeded("hensel precision above the cap");
  }
  long kk = cache_top_;
  mpz_class S = cache_.at(kk);
  // One Newton step doubles the verified precision: from S^2 = D mod p^kk
  // to ((S + D/S)/2)^2 = D mod p^(2kk).
  while (kk < k) {
    mpz_class m = pow_p(2 * kk);
    S = (S + mpz_class(D_) * invert_mod(S, m)) % m * invert_mod(2, m) % m;
    if (S < 0) S += m;
    kk *= 2;
    cache_[kk] = S;
  }
  cache_top_ = std::max(cache_top_, kk);
  return S % pow_p(k);
}

std::pair<long, mpz_class> unit_residue(PadicContext& ctx, const QuadIrr& alpha,
                                        long K) {
  check_same_field(ctx, alpha);
  if (alpha.x == 0 && alpha.y == 0) throw DomainError("unit residue of zero");
  mpz_class p(ctx.p());
  auto scale_down = [&](const Rational& q, long v) {
    // q / p^v, exact: v <= vp(q) by construction.
    Rational s = v >= 0 ? Rational(q / Rational(ctx.pow_p(v)))
                        : Rational(q * Rational(ctx.pow_p(-v)));
    s.canonicalize();
    return s;
  };

  if (alpha.y == 0) {
    long v = vp_rational(alpha.x, p);
    return {v, fraction_residue(scale_down(alpha.x, v), ctx.pow_p(K))};
  }
  if (alpha.x == 0) {
    long v = vp_rational(alpha.y, p);
    mpz_class m = ctx.pow_p(K);
    mpz_class u = fraction_residue(scale_down(alpha.y, v), m) *
                  ctx.hensel_sqrt(K) % m;
    return {v, u};
  }
  long vx = vp_rational(alpha.x, p);
  long vy = vp_rational(alpha.y, p);
  long mu = std::min(vx, vy);
  Rational xs = scale_down(alpha.x, mu);
  Rational ys = scale_down(alpha.y, mu);
  if (vx != vy) {
    // Exactly one term is a unit: no cancellation, K digits suffice.
    mpz_class m = ctx.pow_p(K);
    mpz_class u = (fraction_residue(xs, m) +
                   fraction_residue(ys, m) * ctx.hensel_sqrt(K)) % m;
    return {mu, u};
  }
  // Equal valuations: x + y*sqrt(D) can cancel arbitrarily deep. Evaluate
  // at growing precision until the residue pins the valuation with K
  // digits of the unit to spare.
  long k = std::max(32L, K + 8);
  while (true) {
    if (k > ctx.max_precision()) {
      throw PrecisionCapExceeded("valuation escalation above the cap");
    }
    mpz_class m = ctx.pow_p(k);
    mpz_class R = (fraction_residue(xs, m) +
                   fraction_residue(ys, m) * ctx.hensel_sqrt(k)) % m;
    if (R == 0) {
      k *= 2;
      continue;
    }
    long w = vp_int(R, p);
    if (k - w < K) {
      k = w + K + 8;
      continue;
    }
    mpz_class u = R / ctx.pow_p(w) % ctx.pow_p(K);
    return {mu + w, u};
  }
}

long padic_valuation(PadicContext& ctx, const QuadIrr& alpha) {
  return unit_residue(ctx, alpha, 1).first;
}

DigitWindow padic_digits(PadicContext& ctx, const QuadIrr& alpha, long hi) {
  long v = padic_valuation(ctx, alpha);
  if (hi < v) throw DomainError("digit window ends above the valuation");
  long K = hi - v + 1;
  mpz_class U = unit_residue(ctx, alpha, K).second;
  DigitWindow w;
  w.lo = v;
  w.digits.reserve(K);
  for (long i = 0; i < K; ++i) {
    long c = centered(U, ctx.p());
    w.digits.push_back(c);
    U = (U - c) / ctx.p();
  }
  return w;
}

namespace {

// Shared tail of the two floors: the centered representative of the unit
// mod p^K, scaled back by p^v, is exactly the digit sum over v..v+K-1.
Rational floor_window(PadicContext& ctx, const QuadIrr& alpha, long v, long K) {
  mpz_class U = unit_residue(ctx, alpha, K).second;
  mpz_class m = ctx.pow_p(K);
  if (2 * U > m - 1) U -= m;
  return make_rational(U, ctx.pow_p(-v));
}

}  // namespace

Rational floor_s(PadicContext& ctx, const QuadIrr& alpha) {
  long v = padic_valuation(ctx, alpha);
  if (v > 0) return Rational(0);
  return floor_window(ctx, alpha, v, 1 - v);
}

Rational floor_t(PadicContext& ctx, const QuadIrr& alpha) {
  long v = padic_valuation(ctx, alpha);
  if (v >= 0) return Rational(0);
  return floor_window(ctx, alpha, v, -v);
}

}  // namespace pcf
