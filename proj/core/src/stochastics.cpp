#include "pcf/stochastics.hpp"

#include <cmath>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

void check_odd_prime(long p) {
  mpz_class pp(p);
  if (p < 3 || p % 2 == 0 || mpz_probab_prime_p(pp.get_mpz_t(), 40) == 0) {
    throw DomainError("p must be an odd prime");
  }
}

mpz_class pow_p(long p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Rational valuation_pmf(long p, long k) {
  check_odd_prime(p);
  if (k < 1) throw DomainError("pmf defined for k >= 1");
  return make_rational(p - 1, pow_p(p, k));
}

Rational expected_valuation(long p) {
  check_odd_prime(p);
  return Rational(p, p - 1);
}

Rational expected_abs_conditional(long p, long k) {
  check_odd_prime(p);
  if (k < 0) throw DomainError("conditional expectation defined for k >= 0");
  return make_rational(pow_p(p, 2 * (k + 1)) - 1, 4 * pow_p(p, 2 * k + 1));
}

Rational expected_abs(long p) {
  check_odd_prime(p);
  return Rational(p, 4) * (1 - Rational(1, static_cast<long>(p) * p + p + 1));
}

Rational sampler_abs_expectation(long p) {
  check_odd_prime(p);
  return Rational(p, 4) * (1 + Rational(1, p * (static_cast<long>(p) * p + p + 1)));
}

Rational sampler_abs_conditional(long p, long k) {
  check_odd_prime(p);
  if (k < 1) throw DomainError("sampler conditional defined for k >= 1");
  return make_rational(pow_p(p, 2 * k + 1) + 1, 4 * pow_p(p, 2 * k));
}

QuotientSampler::QuotientSampler(const DigitModel& model)
    : p_(model.p), rng_(model.rng_seed) {
  check_odd_prime(model.p);
}

long QuotientSampler::bounded(long n) {
  // Rejection sampling keeps the draw uniform and the stream identical
  // on every platform, unlike std::uniform_int_distribution.
  auto un = static_cast<std::uint64_t>(n);
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t x;
  do {
    x = rng_();
  } while (x >= limit);
  return static_cast<long>(x % un);
}

Rational QuotientSampler::sample() {
  long half = (p_ - 1) / 2;
  // Geometric valuation: extend with probability 1/p per trial.
  long r = 1;
  while (bounded(p_) == 0) ++r;
  // Leading digit: 1..p-1 mapped onto the nonzero symmetric residues.
  long u = 1 + bounded(p_ - 1);
  long lead = u <= half ? u : u - p_;
  // a = c_{-r} p^{-r} + ... + c_0 with c_{-r} = lead. Horner runs from
  // c_0 down to c_{-r}, so T = a p^r ends on lead and stays a p-unit.
  mpz_class T(0);
  for (long i = 0; i < r; ++i) {
    T = T * p_ + (bounded(p_) - half);
  }
  T = T * p_ + lead;
  return make_rational(T, pow_p(p_, r));
}

Rational sample_partial_quotient(QuotientSampler& sampler) {
  return sampler.sample();
}

MonteCarloEstimate monte_carlo_expected_abs(const DigitModel& model,
                                            long n_samples) {
  if (n_samples < 1000) throw DomainError("need at least 1000 samples");
  QuotientSampler sampler(model);
  double tot = 0.0, tot2 = 0.0;
  for (long i = 0; i < n_samples; ++i) {
    double v = std::abs(sampler.sample().get_d());
    tot += v;
    tot2 += v * v;
  }
  double mean = tot / n_samples;
  double var = tot2 / n_samples - mean * mean;
  return {mean, std::sqrt(var / n_samples), n_samples};
}

}  // namespace pcf
