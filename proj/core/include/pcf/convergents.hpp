#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

// A_n/B_n with the standard seeds A_0 = a_0, B_0 = 1, A_1 = a_1 a_0 + 1,
// B_1 = a_1, then X_n = a_n X_{n-1} + X_{n-2}. Kept exact; B_n = 0 is
// possible with signed quotients and is handled at evaluation, not here.
struct ConvergentPair {
  long index = 0;
  Rational A;
  Rational B;
};

std::vector<ConvergentPair> convergent_stream(const std::vector<Rational>& pqs);

// A_n B_{n+1} - A_{n+1} B_n = (-1)^(n+1) at every consecutive index.
bool determinant_check(const std::vector<ConvergentPair>& pairs);

// |A_{n+1}/B_{n+1} - A_n/B_n|; equals 1/(|B_n| |B_{n+1}|) identically.
// Throws ZeroDenominator when either B vanishes.
Rational consecutive_gap(const std::vector<ConvergentPair>& pairs, long n);

enum class LimitVerdict {
  ConvergesToPlusRoot,
  ConvergesToMinusRoot,
  ConvergesElsewhere,
  Undetermined,
};

std::string to_string(LimitVerdict v);

struct ClassifyParams {
  int digits = 12;        // significant digits of window agreement
  int window = 50;        // consecutive convergents that must agree
  Rational root_tolerance = Rational(1, 1000000);
};

struct RealLimitReport {
  LimitVerdict verdict = LimitVerdict::Undetermined;
  std::string limit_estimate;           // 14 significant digits, may be empty
  std::optional<long> stabilized_at;    // index opening the agreeing window
  std::vector<std::pair<long, Rational>> gap_trace;
  long skipped = 0;                     // convergents dropped for B_n = 0
};

// Evaluates the convergents on the real line and compares a stabilized
// value against +-sqrt(D). The window test: the last `window` values with
// nonzero B share a sign and spread at most 10^(1-digits) * |midpoint|.
// The verdict compares the final value v against sqrt(D) by
// (1 -/+ tau)^2 D <= v^2, all in exact arithmetic.
RealLimitReport classify_real_limit(const std::vector<Rational>& pqs, long D,
                                    const ClassifyParams& params = {});

}  // namespace pcf
