#include "pcf/convergents.hpp"

#include "pcf/errors.hpp"

namespace pcf {

std::vector<ConvergentPair> convergent_stream(const std::vector<Rational>& pqs) {
  if (pqs.empty()) throw DomainError("no partial quotients");
  std::vector<ConvergentPair> out;
  out.reserve(pqs.size());
  Rational Am2(1), Am1 = pqs[0];
  Rational Bm2(0), Bm1(1);
  out.push_back({0, Am1, Bm1});
  for (std::size_t i = 1; i < pqs.size(); ++i) {
    Rational A = pqs[i] * Am1 + Am2;
    Rational B = pqs[i] * Bm1 + Bm2;
    out.push_back({static_cast<long>(i), A, B});
    Am2 = std::move(Am1);
    Am1 = std::move(A);
    Bm2 = std::move(Bm1);
    Bm1 = std::move(B);
  }
  return out;
}

bool determinant_check(const std::vector<ConvergentPair>& pairs) {
  if (pairs.size() < 2) throw DomainError("need at least two convergents");
  int sign = -1;  // (-1)^(n+1) at n = 0
  for (std::size_t n = 0; n + 1 < pairs.size(); ++n) {
    Rational det = pairs[n].A * pairs[n + 1].B - pairs[n + 1].A * pairs[n].B;
    if (det != sign) return false;
    sign = -sign;
  }
  return true;
}

Rational consecutive_gap(const std::vector<ConvergentPair>& pairs, long n) {
  if (n < 0 || n + 1 >= static_cast<long>(pairs.size())) {
    throw DomainError("gap index out of range");
  }
  const auto& a = pairs[n];
  const auto& b = pairs[n + 1];
  if (a.B == 0 || b.B == 0) throw ZeroDenominator("gap across a zero B_n");
  return abs(b.A / b.B - a.A / a.B);
}

std::string to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::ConvergesToPlusRoot: return "plus";
    case LimitVerdict::ConvergesToMinusRoot: return "minus";
    case LimitVerdict::ConvergesElsewhere: return "elsewhere";
    case LimitVerdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

mpz_class pow_ten(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// Sparse sample of consecutive gaps for the report: indices 1, 2, 4, ...
// doubling up to the end of the stream.
std::vector<std::pair<long, Rational>> sample_gaps(
    const std::vector<ConvergentPair>& pairs) {
  std::vector<std::pair<long, Rational>> out;
  for (long n = 1; n + 1 < static_cast<long>(pairs.size()); n *= 2) {
    if (pairs[n].B != 0 && pairs[n + 1].B != 0) {
      out.emplace_back(n, consecutive_gap(pairs, n));
    }
  }
  return out;
}

}  // namespace

RealLimitReport classify_real_limit(const std::vector<Rational>& pqs, long D,
                                    const ClassifyParams& params) {
  auto pairs = convergent_stream(pqs);
  RealLimitReport report;
  report.gap_trace = sample_gaps(pairs);

  std::vector<std::pair<long, Rational>> vals;
  vals.reserve(pairs.size());
  for (const auto& pr : pairs) {
    if (pr.B != 0) vals.emplace_back(pr.index, pr.A / pr.B);
  }
  report.skipped = static_cast<long>(pairs.size() - vals.size());
  if (static_cast<long>(vals.size()) < params.window) {
    return report;  // Undetermined, no estimate
  }

  std::size_t start = vals.size() - params.window;
  Rational lo = vals[start].second, hi = vals[start].second;
  for (std::size_t i = start + 1; i < vals.size(); ++i) {
    const Rational& v = vals[i].second;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  const Rational& last = vals.back().second;
  report.limit_estimate = decimal_significant(last, 14);
  if (lo == 0 || hi == 0 || (lo < 0) != (hi < 0)) return report;
  Rational mid = (lo + hi) / 2;
  Rational spread_cap = Rational(1, pow_ten(params.digits - 1)) * abs(mid);
  if (hi - lo > spread_cap) return report;

  report.stabilized_at = vals[start].first;
  const Rational& tau = params.root_tolerance;
  Rational lo_bound = (1 - tau) * (1 - tau) * D;
  Rational hi_bound = (1 + tau) * (1 + tau) * D;
  Rational square = last * last;
  if (last > 0 && lo_bound <= square && square <= hi_bound) {
    report.verdict = LimitVerdict::ConvergesToPlusRoot;
  } else if (last < 0 && lo_bound <= square && square <= hi_bound) {
    report.verdict = LimitVerdict::ConvergesToMinusRoot;
  } else {
    report.verdict = LimitVerdict::ConvergesElsewhere;
  }
  return report;
}

}  // namespace pcf
