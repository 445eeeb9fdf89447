#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcf/padic.hpp"
#include "pcf/quadirr.hpp"
#include "pcf/rational.hpp"

namespace pcf {

enum class AlgorithmKind { BrowkinI, BrowkinII, MR };

std::string algorithm_name(AlgorithmKind alg);
std::optional<AlgorithmKind> algorithm_from_name(const std::string& name);

enum class Parity { Even, Odd };

// One iteration: the emitted partial quotient and the next complete
// quotient; `next` is absent exactly when alpha equals its quotient
// (the finite-termination case, only reachable for rational alpha).
struct StepResult {
  Rational a;
  std::optional<QuadIrr> next;
};

// a_n = s(alpha_n).
StepResult step_browkin1(PadicContext& ctx, const QuadIrr& alpha);

// Even steps use s. Odd steps use tau = t(alpha_n): the quotient is tau
// when v_p(alpha_n - tau) = 0, else tau - sign(tau). Exact equality
// alpha = tau counts as nonzero valuation (v_p(0) = +infinity), so it
// falls to the sign correction. Throws SignOfZero when tau = 0 in the
// correction branch.
StepResult step_browkin2(PadicContext& ctx, const QuadIrr& alpha, Parity parity);

// Even steps use s, odd steps use t.
StepResult step_mr(PadicContext& ctx, const QuadIrr& alpha, Parity parity);

struct Finite {
  bool operator==(const Finite&) const = default;
};
struct Periodic {
  long preperiod_len = 0;
  long period_len = 0;
  bool operator==(const Periodic&) const = default;
};
struct Truncated {
  long steps = 0;
  bool operator==(const Truncated&) const = default;
};
using ExpansionStatus = std::variant<Finite, Periodic, Truncated>;

struct ExpansionResult {
  AlgorithmKind algorithm = AlgorithmKind::BrowkinI;
  std::vector<Rational> partial_quotients;
  ExpansionStatus status = Truncated{0};
  // Complete quotients by index, retained on request for diagnostics.
  std::optional<std::map<long, QuadIrr>> complete_quotient_at;

  bool is_finite() const { return std::holds_alternative<Finite>(status); }
  bool is_periodic() const { return std::holds_alternative<Periodic>(status); }
  bool is_truncated() const { return std::holds_alternative<Truncated>(status); }
};

struct ExpandOptions {
  bool retain_complete_quotients = false;
  // Cap on period-detection map entries; a sweep that blows past it is
  // aborted with MemoryBudgetExceeded rather than eating the machine.
  std::size_t max_state_entries = 1u << 22;
};

// Runs the chosen algorithm from alpha_0, watching the complete-quotient
// states alpha_0..alpha_max_steps for an exact revisit. On a revisit at
// index h + k (first match with index h, parity-aware for the
// parity-dependent algorithms) reports Periodic{h, k}, which is minimal.
// Rational termination reports Finite; otherwise Truncated{max_steps}
// with max_steps quotients emitted.
ExpansionResult expand(PadicContext& ctx, const QuadIrr& alpha0,
                       AlgorithmKind alg, long max_steps,
                       const ExpandOptions& options = {});

// Periodically extends the quotient list of a periodic expansion to
// n_terms entries; truncates or returns as many as available otherwise.
std::vector<Rational> unroll_quotients(const ExpansionResult& result,
                                       long n_terms);

// The algebraic pure-periodicity test: v_p(alpha) < 0 and
// v_p(conjugate) > 0 for the Browkin variants, with <= 0 on the first
// part for MR. Requires irrational alpha. Returns the raw condition
// value; whether the expansion is in fact periodic is not consulted.
bool pure_periodicity_condition(PadicContext& ctx, const QuadIrr& alpha,
                                AlgorithmKind alg);

// Signs of qi_norm(alpha_n) per retained index, in index order.
// Requires the expansion to have retained complete quotients.
std::vector<int> norm_sign_trace(const ExpansionResult& result);

}  // namespace pcf
