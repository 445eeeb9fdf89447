#include "pcf/cf.hpp"

#include <cassert>
#include <unordered_map>

#include "pcf/errors.hpp"

namespace pcf {

std::string algorithm_name(AlgorithmKind alg) {
  switch (alg) {
    case AlgorithmKind::BrowkinI: return "browkin1";
    case AlgorithmKind::BrowkinII: return "browkin2";
    case AlgorithmKind::MR: return "mr";
  }
  return "unknown";
}

std::optional<AlgorithmKind> algorithm_from_name(const std::string& name) {
  if (name == "browkin1") return AlgorithmKind::BrowkinI;
  if (name == "browkin2") return AlgorithmKind::BrowkinII;
  if (name == "mr") return AlgorithmKind::MR;
  return std::nullopt;
}

namespace {

StepResult finish_step(const QuadIrr& alpha, Rational a) {
  if (alpha.y == 0 && alpha.x == a) return {std::move(a), std::nullopt};
  QuadIrr next = qi_sub_inv(alpha, a);
  return {std::move(a), std::move(next)};
}

}  // namespace

StepResult step_browkin1(PadicContext& ctx, const QuadIrr& alpha) {
  return finish_step(alpha, floor_s(ctx, alpha));
}

StepResult step_browkin2(PadicContext& ctx, const QuadIrr& alpha, Parity parity) {
  if (parity == Parity::Even) return finish_step(alpha, floor_s(ctx, alpha));
  Rational tau = floor_t(ctx, alpha);
  Rational a;
  if (alpha.y == 0 && alpha.x == tau) {
    // alpha - tau = 0: the valuation test reads +infinity, not zero.
    assert(tau != 0);  // tau = alpha = 0 is excluded by the step precondition
    a = tau - (tau > 0 ? 1 : -1);
  } else {
    QuadIrr shifted{alpha.x - tau, alpha.y, alpha.D};
    if (padic_valuation(ctx, shifted) == 0) {
      a = tau;
    } else {
      if (tau == 0) {
        throw SignOfZero("browkin2 odd step: t(alpha) = 0 with nonzero valuation");
      }
      a = tau - (tau > 0 ? 1 : -1);
    }
  }
  return finish_step(alpha, std::move(a));
}

StepResult step_mr(PadicContext& ctx, const QuadIrr& alpha, Parity parity) {
  Rational a = parity == Parity::Even ? floor_s(ctx, alpha) : floor_t(ctx, alpha);
  // Odd-step equality alpha = t(alpha) is only possible for rational
  // alpha (t maps into Q); finish_step turns it into termination.
  return finish_step(alpha, std::move(a));
}

namespace {

constexpr std::uint64_t kDigestMod = (1ull << 61) - 1;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t digest_state(const QuadIrr& alpha, int parity) {
  // Residues of the four canonical fraction components mod a Mersenne
  // prime, mixed; collisions are confirmed by exact replay before any
  // period is reported.
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(parity) + 1);
  const mpq_class* qs[2] = {&alpha.x, &alpha.y};
  for (const mpq_class* q : qs) {
    std::uint64_t rn = mpz_fdiv_ui(q->get_num().get_mpz_t(), kDigestMod);
    std::uint64_t rd = mpz_fdiv_ui(q->get_den().get_mpz_t(), kDigestMod);
    std::uint64_t neg = mpz_sgn(q->get_num().get_mpz_t()) < 0 ? 1 : 0;
    h = splitmix64(h ^ rn);
    h = splitmix64(h ^ rd);
    h = splitmix64(h ^ neg);
  }
  return h;
}

StepResult run_step(PadicContext& ctx, const QuadIrr& alpha, AlgorithmKind alg,
                    long n) {
  Parity parity = n % 2 == 0 ? Parity::Even : Parity::Odd;
  switch (alg) {
    case AlgorithmKind::BrowkinI: return step_browkin1(ctx, alpha);
    case AlgorithmKind::BrowkinII: return step_browkin2(ctx, alpha, parity);
    case AlgorithmKind::MR: return step_mr(ctx, alpha, parity);
  }
  throw DomainError("unknown algorithm");
}

// alpha_j from scratch: replay the stored quotients. Only used to confirm
// a digest match, so the quadratic worst case never occurs in practice.
QuadIrr replay_state(const QuadIrr& alpha0,
                     const std::vector<Rational>& quotients, long j) {
  QuadIrr a = alpha0;
  for (long i = 0; i < j; ++i) a = qi_sub_inv(a, quotients[i]);
  return a;
}

}  // namespace

ExpansionResult expand(PadicContext& ctx, const QuadIrr& alpha0,
                       AlgorithmKind alg, long max_steps,
                       const ExpandOptions& options) {
  if (max_steps < 1) throw DomainError("max_steps must be positive");
  if (alpha0.x == 0 && alpha0.y == 0) throw DomainError("expansion of zero");

  ExpansionResult result;
  result.algorithm = alg;
  if (options.retain_complete_quotients) result.complete_quotient_at.emplace();

  bool parity_matters = alg != AlgorithmKind::BrowkinI;
  std::unordered_map<std::uint64_t, std::vector<long>> seen;
  QuadIrr alpha = alpha0;
  long n = 0;
  while (true) {
    int parity = parity_matters ? static_cast<int>(n % 2) : 0;
    std::uint64_t key = digest_state(alpha, parity);
    if (auto it = seen.find(key); it != seen.end()) {
      for (long j : it->second) {
        if (replay_state(alpha0, result.partial_quotients, j) == alpha) {
          result.status = Periodic{j, n - j};
          return result;
        }
      }
      it->second.push_back(n);
    } else {
      seen.emplace(key, std::vector<long>{n});
    }
    if (seen.size() > options.max_state_entries) {
      throw MemoryBudgetExceeded("period-detection map exceeded its entry cap");
    }
    if (n == max_steps) {
      result.status = Truncated{max_steps};
      return result;
    }
    if (result.complete_quotient_at) {
      result.complete_quotient_at->emplace(n, alpha);
    }
    StepResult step = run_step(ctx, alpha, alg, n);
    result.partial_quotients.push_back(std::move(step.a));
    if (!step.next) {
      result.status = Finite{};
      return result;
    }
    alpha = std::move(*step.next);
    ++n;
  }
}

std::vector<Rational> unroll_quotients(const ExpansionResult& result,
                                       long n_terms) {
  const auto& qs = result.partial_quotients;
  if (!result.is_periodic() || static_cast<long>(qs.size()) >= n_terms) {
    auto end = qs.begin() + std::min<long>(n_terms, qs.size());
    return {qs.begin(), end};
  }
  const auto& per = std::get<Periodic>(result.status);
  std::vector<Rational> out(qs.begin(), qs.end());
  out.reserve(n_terms);
  while (static_cast<long>(out.size()) < n_terms) {
    long i = per.preperiod_len +
             (static_cast<long>(out.size()) - per.preperiod_len) % per.period_len;
    out.push_back(out[i]);
  }
  return out;
}

bool pure_periodicity_condition(PadicContext& ctx, const QuadIrr& alpha,
                                AlgorithmKind alg) {
  if (alpha.y == 0) throw DomainError("condition defined for irrational alpha");
  long v = padic_valuation(ctx, alpha);
  long vbar = padic_valuation(ctx, qi_conjugate(alpha));
  if (alg == AlgorithmKind::MR) return v <= 0 && vbar > 0;
  return v < 0 && vbar > 0;
}

std::vector<int> norm_sign_trace(const ExpansionResult& result) {
  if (!result.complete_quotient_at) {
    throw DomainError("norm-sign trace needs retained complete quotients");
  }
  std::vector<int> out;
  out.reserve(result.complete_quotient_at->size());
  for (const auto& [idx, alpha] : *result.complete_quotient_at) {
    Rational n = qi_norm(alpha);
    out.push_back(n == 0 ? 0 : (n > 0 ? 1 : -1));
  }
  return out;
}

}  // namespace pcf
