#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"

#include "data/oracle_values.hpp"
#include "pcf/errors.hpp"
#include "pcf/rational.hpp"
#include "pcf/stochastics.hpp"

using pcf::DigitModel;
using pcf::Rational;

namespace {

Rational pow_q(long p, long e) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return Rational(m);
}

}  // namespace

TEST_SUITE("stochastics") {

TEST_CASE("valuation pmf and its partial sums") {
  CHECK(pcf::valuation_pmf(5, 1) == pcf::make_rational(4, 5));
  CHECK(pcf::valuation_pmf(5, 2) == pcf::make_rational(4, 25));
  CHECK(pcf::valuation_pmf(3, 2) == pcf::make_rational(2, 9));
  CHECK_THROWS_AS(pcf::valuation_pmf(5, 0), pcf::DomainError);
  CHECK_THROWS_AS(pcf::valuation_pmf(6, 1), pcf::DomainError);

  for (long p : {5L, 13L, 43L}) {
    Rational sum(0);
    for (long k = 1; k <= 8; ++k) {
      sum += pcf::valuation_pmf(p, k);
      CHECK(sum == 1 - Rational(1) / pow_q(p, k));
    }
  }
}

TEST_CASE("expected valuation and its series") {
  CHECK(pcf::expected_valuation(5) == pcf::make_rational(5, 4));
  CHECK(pcf::expected_valuation(3) == pcf::make_rational(3, 2));
  Rational series(0);
  for (long k = 1; k <= 60; ++k) {
    series += Rational(k) * pcf::valuation_pmf(5, k);
  }
  Rational tail = abs(pcf::expected_valuation(5) - series);
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, 30);
  CHECK(tail < pcf::make_rational(1, bound));
}

TEST_CASE("conditional expectations of |a|") {
  CHECK(pcf::expected_abs_conditional(5, 0) == pcf::make_rational(6, 5));
  CHECK(pcf::expected_abs_conditional(5, 1) == pcf::make_rational(156, 125));
  CHECK(pcf::expected_abs_conditional(5, 2) ==
        pcf::make_rational(15624, 12500));
  CHECK_THROWS_AS(pcf::expected_abs_conditional(5, -1), pcf::DomainError);

  CHECK(pcf::sampler_abs_conditional(5, 1) == pcf::make_rational(63, 50));
  CHECK(pcf::sampler_abs_conditional(5, 2) == pcf::make_rational(3126, 2500));
  CHECK_THROWS_AS(pcf::sampler_abs_conditional(5, 0), pcf::DomainError);
}

TEST_CASE("sampler conditional matches direct enumeration") {
  // v = -k draws: leading digit uniform over the nonzero residues, k
  // further digits uniform over all residues.
  for (long k : {1L, 2L}) {
    Rational total(0);
    long count = 0;
    std::vector<long> digits(k + 1, -2);
    while (true) {
      if (digits[0] != 0) {
        Rational a(0);
        for (long i = 0; i <= k; ++i) {
          a += Rational(digits[i]) / pow_q(5, k - i);
        }
        total += abs(a);
        ++count;
      }
      long i = static_cast<long>(digits.size()) - 1;
      while (i >= 0 && digits[i] == 2) digits[i--] = -2;
      if (i < 0) break;
      ++digits[i];
    }
    CHECK(count == 4 * (k == 1 ? 5 : 25));
    CHECK(total / count == pcf::sampler_abs_conditional(5, k));
  }
}

TEST_CASE("closed form versus sampler expectation") {
  CHECK(pcf::expected_abs(5) == pcf::make_rational(75, 62));
  for (long p : {5L, 13L, 43L, 211L}) {
    Rational gap =
        pcf::sampler_abs_expectation(p) - pcf::expected_abs(p);
    CHECK(gap == pcf::make_rational(p + 1, 4 * (p * p + p + 1)));
    CHECK(gap > 0);
  }

  // The total-expectation series of the sampler converges to the sampler
  // mean, not to the closed form, pinning down the model difference.
  for (long p : {5L, 13L}) {
    Rational series(0);
    for (long k = 1; k <= 40; ++k) {
      series += pcf::valuation_pmf(p, k) * pcf::sampler_abs_conditional(p, k);
    }
    Rational diff = abs(pcf::sampler_abs_expectation(p) - series);
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, 20);
    CHECK(diff < pcf::make_rational(1, bound));
    CHECK(abs(pcf::expected_abs(p) - series) >
          pcf::make_rational(1, 100 * p));
  }
}

TEST_CASE("reference digit table of the closed form") {
  for (const auto& row : pcf_tests::k_expected_abs_rows) {
    Rational ea = pcf::expected_abs(row.p);
    CHECK(pcf::decimal_significant(ea, 6) == row.sig6);
    CHECK(pcf::decimal_fixed(ea, 2, pcf::Rounding::HalfAwayFromZero) ==
          row.dec2);
  }
}

TEST_CASE("sampler draws respect the digit model") {
  pcf::QuotientSampler sampler(DigitModel{5, 2718});
  for (int i = 0; i < 4000; ++i) {
    Rational a = sampler.sample();
    CHECK(pcf::vp_rational(a, 5) < 0);
    CHECK(abs(a) < pcf::make_rational(5, 2));
    CHECK(a != 0);
  }

  // Identical seeds give identical streams.
  pcf::QuotientSampler s1(DigitModel{5, 42});
  pcf::QuotientSampler s2(DigitModel{5, 42});
  for (int i = 0; i < 200; ++i) {
    CHECK(pcf::sample_partial_quotient(s1) == pcf::sample_partial_quotient(s2));
  }
}

TEST_CASE("monte carlo estimate is deterministic and unbiased for the sampler") {
  DigitModel model{5, 20260819};
  pcf::MonteCarloEstimate a = pcf::monte_carlo_expected_abs(model, 200000);
  pcf::MonteCarloEstimate b = pcf::monte_carlo_expected_abs(model, 200000);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.samples == 200000);

  double target = pcf::sampler_abs_expectation(5).get_d();
  double z = (a.mean - target) / a.std_error;
  CHECK(std::abs(z) < 4.0);

  DigitModel other{5, 7};
  pcf::MonteCarloEstimate c = pcf::monte_carlo_expected_abs(other, 200000);
  CHECK(c.mean != a.mean);

  CHECK_THROWS_AS(pcf::monte_carlo_expected_abs(model, 10), pcf::DomainError);
}

TEST_CASE("empirical valuation frequency matches the pmf") {
  pcf::QuotientSampler sampler(DigitModel{5, 5150});
  const long n = 100000;
  long ones = 0;
  for (long i = 0; i < n; ++i) {
    if (pcf::vp_rational(sampler.sample(), 5) == -1) ++ones;
  }
  double freq = static_cast<double>(ones) / n;
  double sigma = std::sqrt(0.8 * 0.2 / n);
  CHECK(std::abs(freq - 0.8) < 4.0 * sigma);
}

}  // TEST_SUITE
