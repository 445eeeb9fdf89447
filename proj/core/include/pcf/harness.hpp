#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcf/cf.hpp"
#include "pcf/convergents.hpp"
#include "pcf/padic.hpp"
#include "pcf/rational.hpp"

namespace pcf {

enum class OutputFormat { Csv, Json, Markdown };
enum class RunMode { Single, Table, Stochastics };

std::optional<OutputFormat> format_from_name(const std::string& name);
std::optional<RunMode> mode_from_name(const std::string& name);

struct RunConfig {
  long prime = 5;
  std::vector<long> d_values;                    // explicit radicands
  std::optional<std::pair<long, long>> d_range;  // inclusive, merged in
  AlgorithmKind algorithm = AlgorithmKind::BrowkinI;
  // Convergent index evaluated by the reports. The engine emits
  // max_steps + 1 quotients so A_max_steps exists even for truncated
  // expansions.
  long max_steps = 1000;
  int report_digits = 5;       // fractional digits of printed squared values
  Branch branch = Branch::Default;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 1;
  RunMode mode = RunMode::Single;
  long mc_samples = 1000000;   // stochastics mode sample count

  // All radicands, sorted and deduplicated. Throws DomainError when the
  // mode needs radicands and none were given.
  std::vector<long> radicands() const;
};

// Throws DomainError for inconsistent configs (bad prime, empty D list in
// single/table mode, more than one D in single mode, ...).
void validate(const RunConfig& cfg);

// One sweep line. `status` is "periodic", "truncated", "finite",
// "skipped" or "error"; `detail` carries the skip or error reason.
struct TableRow {
  long D = 0;
  std::string status;
  std::string detail;
  long preperiod = -1;
  long period = -1;
  std::optional<Rational> squared_value;
  std::string limit_verdict;
  std::string limit_estimate;
  std::optional<long> stabilized_at;
};

struct HarnessReport {
  nlohmann::ordered_json data;  // machine-readable content
  std::string rendered;         // the same content in cfg.format
};

// Full diagnostics for one radicand: expansion, period data, convergent
// digit lists at n in {10, 100, 1000, 5000, 10000} up to max_steps,
// squared value, real-limit verdict, pure-periodicity condition and a
// norm-sign trace summary over the first 1000 complete quotients.
HarnessReport run_single(const RunConfig& cfg);

// One row per radicand, skipping perfect squares, multiples of p and
// non-residues with a reason. Rows run in parallel (one context each);
// ordering and output bytes are deterministic.
HarnessReport run_table(const RunConfig& cfg);

// Closed forms of the digit model (pmf, expected valuation, conditional
// and unconditional expected |a|) next to seeded Monte-Carlo estimates,
// plus an optional digit histogram of sqrt(D) when a radicand is given.
HarnessReport run_stochastics(const RunConfig& cfg);

// Dispatch on cfg.mode.
HarnessReport run(const RunConfig& cfg);

}  // namespace pcf
