#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

// Thrown when a value outside an operation's stated domain is passed in
// (k < 1 for the valuation pmf, a perfect square as a radicand, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

// Context construction failures: D is not a quadratic residue mod p, or
// p divides D. Both leave sqrt(D) outside the unit machinery.
struct NotAResidue : std::domain_error {
  using std::domain_error::domain_error;
};

struct RamifiedPrime : std::domain_error {
  using std::domain_error::domain_error;
};

// Valuation escalation passed the configured precision cap. Signals a
// near-rational pathology rather than a recoverable condition.
struct PrecisionCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The odd-step sign rule hit t(alpha) = 0 with v_p(alpha - t(alpha)) != 0.
// Unreachable by the reachable-state analysis; raising keeps an engine bug
// from being papered over by a silent sign choice.
struct SignOfZero : std::logic_error {
  using std::logic_error::logic_error;
};

struct MemoryBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pcf
