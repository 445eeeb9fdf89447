#include <vector>

#include "doctest.h"

#include "pcf/cf.hpp"
#include "pcf/convergents.hpp"
#include "pcf/errors.hpp"
#include "pcf/padic.hpp"
#include "pcf/rational.hpp"

using pcf::ConvergentPair;
using pcf::Rational;

TEST_SUITE("convergents") {

TEST_CASE("seed values of the three-term recursion") {
  std::vector<Rational> pqs = {Rational(2), pcf::make_rational(-3, 5)};
  auto pairs = pcf::convergent_stream(pqs);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].index == 0);
  CHECK(pairs[0].A == 2);
  CHECK(pairs[0].B == 1);
  CHECK(pairs[1].A == pcf::make_rational(-1, 5));
  CHECK(pairs[1].B == pcf::make_rational(-3, 5));

  CHECK(pcf::determinant_check(pairs));
  CHECK(pcf::consecutive_gap(pairs, 0) == pcf::make_rational(5, 3));
  CHECK(pcf::consecutive_gap(pairs, 0) ==
        Rational(1) / (abs(pairs[0].B) * abs(pairs[1].B)));

  CHECK_THROWS_AS(pcf::convergent_stream({}), pcf::DomainError);
  CHECK_THROWS_AS(pcf::determinant_check({pairs[0]}), pcf::DomainError);
  CHECK_THROWS_AS(pcf::consecutive_gap(pairs, 1), pcf::DomainError);
  CHECK_THROWS_AS(pcf::consecutive_gap(pairs, -1), pcf::DomainError);
}

TEST_CASE("zero B_n is reported, not divided by") {
  std::vector<Rational> pqs = {Rational(2), Rational(0)};
  auto pairs = pcf::convergent_stream(pqs);
  CHECK(pairs[1].B == 0);
  CHECK_THROWS_AS(pcf::consecutive_gap(pairs, 0), pcf::ZeroDenominator);
}

TEST_CASE("determinant identity holds on an engine stream") {
  pcf::PadicContext ctx(5, 19);
  pcf::ExpansionResult res =
      pcf::expand(ctx, pcf::make_quadirr(Rational(0), Rational(1), 19),
                  pcf::AlgorithmKind::BrowkinI, 120);
  auto pairs = pcf::convergent_stream(res.partial_quotients);
  CHECK(pcf::determinant_check(pairs));
  for (long n = 0; n + 1 < static_cast<long>(pairs.size()); ++n) {
    if (pairs[n].B == 0 || pairs[n + 1].B == 0) continue;
    CHECK(pcf::consecutive_gap(pairs, n) ==
          Rational(1) / (abs(pairs[n].B) * abs(pairs[n + 1].B)));
  }

  auto broken = pairs;
  broken[5].A += 1;
  CHECK_FALSE(pcf::determinant_check(broken));
}

TEST_CASE("verdict names") {
  CHECK(pcf::to_string(pcf::LimitVerdict::ConvergesToPlusRoot) == "plus");
  CHECK(pcf::to_string(pcf::LimitVerdict::ConvergesToMinusRoot) == "minus");
  CHECK(pcf::to_string(pcf::LimitVerdict::ConvergesElsewhere) == "elsewhere");
  CHECK(pcf::to_string(pcf::LimitVerdict::Undetermined) == "undetermined");
}

TEST_CASE("short streams stay undetermined without an estimate") {
  std::vector<Rational> pqs(10, Rational(1));
  pcf::RealLimitReport rep = pcf::classify_real_limit(pqs, 19);
  CHECK(rep.verdict == pcf::LimitVerdict::Undetermined);
  CHECK(rep.limit_estimate.empty());
  CHECK_FALSE(rep.stabilized_at.has_value());
}

TEST_CASE("constant golden-ratio stream converges elsewhere") {
  // All-ones quotients converge to (1+sqrt(5))/2, far from sqrt(19).
  std::vector<Rational> pqs(120, Rational(1));
  pcf::RealLimitReport rep = pcf::classify_real_limit(pqs, 19);
  CHECK(rep.verdict == pcf::LimitVerdict::ConvergesElsewhere);
  CHECK(rep.limit_estimate.substr(0, 6) == "1.6180");
  CHECK(rep.stabilized_at.has_value());
  CHECK(rep.skipped == 0);
  CHECK_FALSE(rep.gap_trace.empty());
}

}  // TEST_SUITE
