#pragma once

#include <cstdint>
#include <random>

#include "pcf/rational.hpp"

namespace pcf {

// The digit model: partial-quotient digits drawn i.i.d. uniformly from
// the symmetric residue set of p. All randomness flows from rng_seed.
struct DigitModel {
  long p = 5;
  std::uint64_t rng_seed = 0;
};

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

// P(v_p(a) = -k) = (p-1)/p^k for k >= 1.
Rational valuation_pmf(long p, long k);

// E(-v_p(a)) = p/(p-1).
Rational expected_valuation(long p);

// E(|a| given v_p(a) = -k) under the all-digits-uniform window model:
// (p^(2(k+1)) - 1)/(4 p^(2k+1)); k = 0 is the single-digit case.
Rational expected_abs_conditional(long p, long k);

// Closed form E(|a|) = p/4 * (1 - 1/(p^2 + p + 1)).
Rational expected_abs(long p);

// Exact mean of |a| under the sampler below (leading digit nonzero,
// trailing digits uniform): p/4 * (1 + 1/(p (p^2 + p + 1))). Differs
// from expected_abs(p) by (p+1)/(4 (p^2 + p + 1)); the gap is a model
// discrepancy, not an implementation artifact, and the stochastics
// report prints both so the difference is visible.
Rational sampler_abs_expectation(long p);

// E(|a| given v_p(a) = -k) under the sampler (leading digit nonzero):
// (p^(2k+1) + 1)/(4 p^(2k)), k >= 1. Verifiable by direct enumeration.
Rational sampler_abs_conditional(long p, long k);

// Draws Browkin-style partial quotients: valuation -r with
// P(r = k) = (p-1)/p^k, leading digit uniform nonzero, the remaining r
// digits uniform over the symmetric set.
class QuotientSampler {
 public:
  explicit QuotientSampler(const DigitModel& model);
  Rational sample();
  long p() const { return p_; }

 private:
  long bounded(long n);  // uniform draw from [0, n), rejection sampled

  long p_;
  std::mt19937_64 rng_;
};

Rational sample_partial_quotient(QuotientSampler& sampler);

// Mean and standard error of |a| over n_samples draws; deterministic in
// the model seed. Requires n_samples >= 1000.
MonteCarloEstimate monte_carlo_expected_abs(const DigitModel& model,
                                            long n_samples);

}  // namespace pcf
