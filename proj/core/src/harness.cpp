#include "pcf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "pcf/errors.hpp"
#include "pcf/stochastics.hpp"

namespace pcf {

using nlohmann::ordered_json;

std::optional<OutputFormat> format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "markdown") return OutputFormat::Markdown;
  return std::nullopt;
}

std::optional<RunMode> mode_from_name(const std::string& name) {
  if (name == "single") return RunMode::Single;
  if (name == "table") return RunMode::Table;
  if (name == "stochastics") return RunMode::Stochastics;
  return std::nullopt;
}

namespace {

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Markdown: return "markdown";
  }
  return "csv";
}

std::string mode_name(RunMode m) {
  switch (m) {
    case RunMode::Single: return "single";
    case RunMode::Table: return "table";
    case RunMode::Stochastics: return "stochastics";
  }
  return "single";
}

bool is_odd_prime(long p) {
  mpz_class pp(p);
  return p >= 3 && p % 2 == 1 && mpz_probab_prime_p(pp.get_mpz_t(), 40) != 0;
}

ordered_json config_echo(const RunConfig& cfg) {
  ordered_json j;
  j["prime"] = cfg.prime;
  j["d"] = cfg.radicands();
  j["algorithm"] = algorithm_name(cfg.algorithm);
  j["max_steps"] = cfg.max_steps;
  j["report_digits"] = cfg.report_digits;
  j["branch"] = cfg.branch == Branch::Alternate ? "alternate" : "default";
  j["format"] = format_name(cfg.format);
  j["seed"] = cfg.seed;
  j["mode"] = mode_name(cfg.mode);
  if (cfg.mode == RunMode::Stochastics) j["mc_samples"] = cfg.mc_samples;
  return j;
}

ordered_json rational_json(const Rational& q) {
  return ordered_json{{"num", q.get_num().get_str()},
                      {"den", q.get_den().get_str()}};
}

// Skip reason for sweep radicands the digit machinery cannot take.
std::optional<std::string> skip_reason(long D, long p) {
  if (D < 1) return "non-positive";
  mpz_class d(D);
  if (mpz_perfect_square_p(d.get_mpz_t())) return "perfect-square";
  if (D % p == 0) return "ramified";
  mpz_class dd(D % p), pp(p);
  if (mpz_legendre(dd.get_mpz_t(), pp.get_mpz_t()) != 1) return "non-residue";
  return std::nullopt;
}

TableRow compute_row(const RunConfig& cfg, long D) {
  TableRow row;
  row.D = D;
  if (auto reason = skip_reason(D, cfg.prime)) {
    row.status = "skipped";
    row.detail = *reason;
    return row;
  }
  try {
    PadicContext ctx(cfg.prime, D, cfg.branch);
    QuadIrr alpha0 = make_quadirr(Rational(0), Rational(1), D);
    ExpansionResult res = expand(ctx, alpha0, cfg.algorithm, cfg.max_steps + 1);
    if (res.is_periodic()) {
      const auto& per = std::get<Periodic>(res.status);
      row.status = "periodic";
      row.preperiod = per.preperiod_len;
      row.period = per.period_len;
    } else {
      row.status = res.is_finite() ? "finite" : "truncated";
    }
    std::vector<Rational> pqs = unroll_quotients(res, cfg.max_steps + 1);
    auto pairs = convergent_stream(pqs);
    long n = std::min<long>(cfg.max_steps, static_cast<long>(pairs.size()) - 1);
    while (n >= 0 && pairs[n].B == 0) --n;  // cancellations are rare but legal
    if (n >= 0) {
      Rational v = pairs[n].A / pairs[n].B;
      row.squared_value = v * v;
    }
    RealLimitReport limit = classify_real_limit(pqs, D);
    row.limit_verdict = to_string(limit.verdict);
    row.limit_estimate = limit.limit_estimate;
    row.stabilized_at = limit.stabilized_at;
  } catch (const std::exception& e) {
    row.status = "error";
    row.detail = e.what();
  }
  return row;
}

ordered_json row_json(const TableRow& row, int report_digits) {
  ordered_json j;
  j["D"] = row.D;
  j["status"] = row.status;
  if (!row.detail.empty()) j["detail"] = row.detail;
  if (row.preperiod >= 0) {
    j["preperiod"] = row.preperiod;
    j["period"] = row.period;
  }
  if (row.squared_value) {
    j["squared_value"] = decimal_fixed(*row.squared_value, report_digits,
                                       Rounding::HalfAwayFromZero);
    j["squared_value_exact"] = rational_json(*row.squared_value);
  }
  if (!row.limit_verdict.empty()) {
    j["limit_verdict"] = row.limit_verdict;
    j["limit_estimate"] = row.limit_estimate;
    if (row.stabilized_at) j["stabilized_at"] = *row.stabilized_at;
  }
  return j;
}

std::string csv_table(const std::vector<TableRow>& rows, int report_digits) {
  std::ostringstream out;
  out << "D,status,preperiod,period,squared_value,limit_verdict,limit_estimate\n";
  for (const auto& row : rows) {
    out << row.D << ',';
    out << (row.detail.empty() ? row.status : row.status + "(" + row.detail + ")");
    out << ',';
    if (row.preperiod >= 0) out << row.preperiod;
    out << ',';
    if (row.period >= 0) out << row.period;
    out << ',';
    if (row.squared_value) {
      out << decimal_fixed(*row.squared_value, report_digits,
                           Rounding::HalfAwayFromZero);
    }
    out << ',' << row.limit_verdict << ',' << row.limit_estimate << '\n';
  }
  return out.str();
}

std::string markdown_table(const std::vector<TableRow>& rows,
                           int report_digits) {
  auto value_of = [&](const TableRow& row) {
    return row.squared_value
               ? decimal_fixed(*row.squared_value, report_digits,
                               Rounding::HalfAwayFromZero)
               : std::string();
  };
  std::ostringstream out;
  out << "## Periodic\n\n| D | squared value | preperiod | period | limit |\n"
      << "|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    if (row.status != "periodic") continue;
    out << "| " << row.D << " | " << value_of(row) << " | " << row.preperiod
        << " | " << row.period << " | " << row.limit_verdict << " |\n";
  }
  out << "\n## Non-periodic\n\n| D | squared value | limit |\n|---|---|---|\n";
  for (const auto& row : rows) {
    if (row.status != "truncated") continue;
    out << "| " << row.D << " | " << value_of(row) << " | " << row.limit_verdict
        << " |\n";
  }
  bool other = std::any_of(rows.begin(), rows.end(), [](const TableRow& r) {
    return r.status != "periodic" && r.status != "truncated";
  });
  if (other) {
    out << "\n## Other\n\n| D | status | detail |\n|---|---|---|\n";
    for (const auto& row : rows) {
      if (row.status == "periodic" || row.status == "truncated") continue;
      out << "| " << row.D << " | " << row.status << " | " << row.detail
          << " |\n";
    }
  }
  return out.str();
}

std::string render_json(const ordered_json& data) { return data.dump(1) + "\n"; }

// Flat key,value CSV for the non-tabular modes; numeric content matches
// the JSON byte for byte.
void flatten_csv(const ordered_json& j, const std::string& prefix,
                 std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten_csv(v, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten_csv(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ',' << (j.is_string() ? j.get<std::string>() : j.dump())
        << '\n';
  }
}

std::string csv_flat(const ordered_json& data) {
  std::ostringstream out;
  out << "key,value\n";
  flatten_csv(data, "", out);
  return out.str();
}

}  // namespace

std::vector<long> RunConfig::radicands() const {
  std::set<long> ds(d_values.begin(), d_values.end());
  if (d_range) {
    if (d_range->first > d_range->second) {
      throw DomainError("empty --d-range");
    }
    for (long d = d_range->first; d <= d_range->second; ++d) ds.insert(d);
  }
  return {ds.begin(), ds.end()};
}

void validate(const RunConfig& cfg) {
  if (!is_odd_prime(cfg.prime)) throw DomainError("prime must be an odd prime");
  if (cfg.max_steps < 1) throw DomainError("max-steps must be positive");
  if (cfg.report_digits < 1 || cfg.report_digits > 40) {
    throw DomainError("digits must be in 1..40");
  }
  std::size_t nd = cfg.radicands().size();
  if (cfg.mode == RunMode::Single && nd != 1) {
    throw DomainError("single mode takes exactly one D");
  }
  if (cfg.mode == RunMode::Table && nd == 0) {
    throw DomainError("table mode needs at least one D or a range");
  }
  if (cfg.mode == RunMode::Stochastics && cfg.mc_samples < 1000) {
    throw DomainError("stochastics mode needs at least 1000 samples");
  }
}

HarnessReport run_single(const RunConfig& cfg) {
  validate(cfg);
  long D = cfg.radicands().front();
  PadicContext ctx(cfg.prime, D, cfg.branch);
  QuadIrr alpha0 = make_quadirr(Rational(0), Rational(1), D);
  ExpansionResult res = expand(ctx, alpha0, cfg.algorithm, cfg.max_steps + 1);

  ordered_json j;
  j["config"] = config_echo(cfg);
  ordered_json status;
  if (res.is_periodic()) {
    const auto& per = std::get<Periodic>(res.status);
    status["kind"] = "periodic";
    status["preperiod"] = per.preperiod_len;
    status["period"] = per.period_len;
  } else if (res.is_finite()) {
    status["kind"] = "finite";
  } else {
    status["kind"] = "truncated";
    status["steps"] = std::get<Truncated>(res.status).steps;
  }
  j["status"] = status;
  j["quotients_emitted"] = res.partial_quotients.size();
  constexpr std::size_t kPrintCap = 48;
  ordered_json quots = ordered_json::array();
  for (std::size_t i = 0;
       i < std::min(kPrintCap, res.partial_quotients.size()); ++i) {
    quots.push_back(res.partial_quotients[i].get_str());
  }
  j["partial_quotients"] = quots;

  std::vector<Rational> pqs = unroll_quotients(res, cfg.max_steps + 1);
  auto pairs = convergent_stream(pqs);
  ordered_json conv = ordered_json::array();
  for (long n : {10L, 100L, 1000L, 5000L, 10000L}) {
    if (n > cfg.max_steps || n >= static_cast<long>(pairs.size())) continue;
    if (pairs[n].B == 0) continue;
    Rational v = pairs[n].A / pairs[n].B;
    conv.push_back(ordered_json{
        {"n", n},
        {"decimal", decimal_fixed(v, 14, Rounding::HalfAwayFromZero)},
        {"exact", rational_json(v)}});
  }
  j["convergents"] = conv;
  long n = std::min<long>(cfg.max_steps, static_cast<long>(pairs.size()) - 1);
  while (n >= 0 && pairs[n].B == 0) --n;
  if (n >= 0) {
    Rational v = pairs[n].A / pairs[n].B;
    j["squared_value"] = ordered_json{
        {"n", n},
        {"decimal", decimal_fixed(v * v, cfg.report_digits,
                                  Rounding::HalfAwayFromZero)},
        {"exact", rational_json(v * v)}};
  }
  RealLimitReport limit = classify_real_limit(pqs, D);
  ordered_json lim;
  lim["verdict"] = to_string(limit.verdict);
  lim["estimate"] = limit.limit_estimate;
  if (limit.stabilized_at) lim["stabilized_at"] = *limit.stabilized_at;
  lim["skipped"] = limit.skipped;
  j["limit"] = lim;
  j["pure_periodicity_condition"] =
      pure_periodicity_condition(ctx, alpha0, cfg.algorithm);

  // Norm-sign trace over the first 1000 complete quotients; rerun with
  // retention instead of holding every state of a long expansion.
  ExpandOptions opts;
  opts.retain_complete_quotients = true;
  ExpansionResult traced =
      expand(ctx, alpha0, cfg.algorithm, std::min<long>(cfg.max_steps, 1000),
             opts);
  std::vector<int> trace = norm_sign_trace(traced);
  ordered_json tr;
  tr["length"] = trace.size();
  tr["negative"] = std::count(trace.begin(), trace.end(), -1);
  tr["zero"] = std::count(trace.begin(), trace.end(), 0);
  tr["positive"] = std::count(trace.begin(), trace.end(), 1);
  ordered_json first = ordered_json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(32, trace.size()); ++i) {
    first.push_back(trace[i]);
  }
  tr["first"] = first;
  j["norm_sign_trace"] = tr;

  HarnessReport report{j, {}};
  switch (cfg.format) {
    case OutputFormat::Json: report.rendered = render_json(j); break;
    case OutputFormat::Csv: report.rendered = csv_flat(j); break;
    case OutputFormat::Markdown: {
      std::ostringstream md;
      md << "# " << algorithm_name(cfg.algorithm) << " expansion of sqrt(" << D
         << ") in Q_" << cfg.prime << "\n\n";
      md << "- status: " << status["kind"].get<std::string>();
      if (res.is_periodic()) {
        md << " (preperiod " << status["preperiod"].get<long>() << ", period "
           << status["period"].get<long>() << ")";
      }
      md << "\n- pure periodicity condition: "
         << (j["pure_periodicity_condition"].get<bool>() ? "true" : "false")
         << "\n- limit verdict: " << lim["verdict"].get<std::string>();
      if (!limit.limit_estimate.empty()) {
        md << " (estimate " << limit.limit_estimate << ")";
      }
      md << "\n\n| n | A_n/B_n |\n|---|---|\n";
      for (const auto& c : conv) {
        md << "| " << c["n"].get<long>() << " | "
           << c["decimal"].get<std::string>() << " |\n";
      }
      report.rendered = md.str();
      break;
    }
  }
  return report;
}

HarnessReport run_table(const RunConfig& cfg) {
  validate(cfg);
  std::vector<long> ds = cfg.radicands();
  std::vector<TableRow> rows(ds.size());
  std::atomic<std::size_t> next{0};
  unsigned nt = std::max(1u, std::thread::hardware_concurrency());
  nt = std::min<unsigned>(nt, ds.size());
  std::vector<std::thread> workers;
  workers.reserve(nt);
  for (unsigned t = 0; t < nt; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < ds.size();
           i = next.fetch_add(1)) {
        rows[i] = compute_row(cfg, ds[i]);
      }
    });
  }
  for (auto& w : workers) w.join();

  ordered_json j;
  j["config"] = config_echo(cfg);
  ordered_json jr = ordered_json::array();
  for (const auto& row : rows) jr.push_back(row_json(row, cfg.report_digits));
  j["rows"] = jr;

  HarnessReport report{j, {}};
  switch (cfg.format) {
    case OutputFormat::Json: report.rendered = render_json(j); break;
    case OutputFormat::Csv:
      report.rendered = csv_table(rows, cfg.report_digits);
      break;
    case OutputFormat::Markdown:
      report.rendered = markdown_table(rows, cfg.report_digits);
      break;
  }
  return report;
}

HarnessReport run_stochastics(const RunConfig& cfg) {
  validate(cfg);
  long p = cfg.prime;
  ordered_json j;
  j["config"] = config_echo(cfg);

  ordered_json pmf = ordered_json::array();
  for (long k = 1; k <= 8; ++k) {
    Rational q = valuation_pmf(p, k);
    pmf.push_back(ordered_json{{"k", k},
                               {"exact", q.get_str()},
                               {"decimal", decimal_significant(q, 6)}});
  }
  ordered_json closed;
  closed["valuation_pmf"] = pmf;
  Rational ev = expected_valuation(p);
  closed["expected_valuation"] = ordered_json{
      {"exact", ev.get_str()}, {"decimal", decimal_significant(ev, 6)}};
  ordered_json cond = ordered_json::array();
  for (long k = 0; k <= 4; ++k) {
    Rational q = expected_abs_conditional(p, k);
    cond.push_back(ordered_json{{"k", k},
                                {"exact", q.get_str()},
                                {"decimal", decimal_significant(q, 6)}});
  }
  closed["expected_abs_conditional"] = cond;
  Rational ea = expected_abs(p);
  closed["expected_abs"] = ordered_json{
      {"exact", ea.get_str()}, {"decimal", decimal_significant(ea, 6)}};
  Rational sa = sampler_abs_expectation(p);
  closed["sampler_abs_expectation"] = ordered_json{
      {"exact", sa.get_str()}, {"decimal", decimal_significant(sa, 6)}};
  j["closed_forms"] = closed;

  DigitModel model{p, cfg.seed};
  MonteCarloEstimate est = monte_carlo_expected_abs(model, cfg.mc_samples);
  ordered_json mc;
  mc["samples"] = est.samples;
  mc["seed"] = cfg.seed;
  mc["mean"] = est.mean;
  mc["std_error"] = est.std_error;
  mc["z_vs_expected_abs"] = (est.mean - ea.get_d()) / est.std_error;
  mc["z_vs_sampler_expectation"] = (est.mean - sa.get_d()) / est.std_error;
  // Valuation frequencies from an identical draw stream (same seed).
  QuotientSampler sampler(model);
  std::vector<long> counts(5, 0);
  for (long i = 0; i < cfg.mc_samples; ++i) {
    long v = -vp_rational(sampler.sample(), p);
    if (v >= 1 && v <= 4) ++counts[v];
  }
  ordered_json freq = ordered_json::array();
  for (long k = 1; k <= 4; ++k) {
    freq.push_back(ordered_json{
        {"k", k},
        {"frequency", static_cast<double>(counts[k]) / cfg.mc_samples},
        {"pmf", valuation_pmf(p, k).get_d()}});
  }
  mc["valuation_frequency"] = freq;
  j["monte_carlo"] = mc;

  std::vector<long> ds = cfg.radicands();
  if (!ds.empty()) {
    long D = ds.front();
    if (!skip_reason(D, p)) {
      PadicContext ctx(p, D, cfg.branch);
      QuadIrr root = make_quadirr(Rational(0), Rational(1), D);
      DigitWindow w = padic_digits(ctx, root, 9999);
      ordered_json hist;
      hist["D"] = D;
      hist["digits"] = w.digits.size();
      ordered_json hc = ordered_json::object();
      for (long c = -(p - 1) / 2; c <= (p - 1) / 2; ++c) {
        hc[std::to_string(c)] = std::count(w.digits.begin(), w.digits.end(), c);
      }
      hist["counts"] = hc;
      j["digit_histogram"] = hist;
    }
  }

  HarnessReport report{j, {}};
  switch (cfg.format) {
    case OutputFormat::Json: report.rendered = render_json(j); break;
    case OutputFormat::Csv: report.rendered = csv_flat(j); break;
    case OutputFormat::Markdown: {
      std::ostringstream md;
      md << "# Digit model, p = " << p << "\n\n";
      md << "- E(-v_p) = " << ev.get_str() << " = "
         << decimal_significant(ev, 6) << "\n";
      md << "- E(|a|) closed form = " << decimal_significant(ea, 6) << "\n";
      md << "- E(|a|) of the sampler model = " << decimal_significant(sa, 6)
         << "\n";
      md << "- Monte-Carlo mean (" << est.samples << " samples, seed "
         << cfg.seed << ") = " << est.mean << " +- " << est.std_error << "\n";
      md << "\n| k | P(v = -k) | sampled |\n|---|---|---|\n";
      for (const auto& f : freq) {
        md << "| " << f["k"].get<long>() << " | " << f["pmf"].get<double>()
           << " | " << f["frequency"].get<double>() << " |\n";
      }
      report.rendered = md.str();
      break;
    }
  }
  return report;
}

HarnessReport run(const RunConfig& cfg) {
  switch (cfg.mode) {
    case RunMode::Single: return run_single(cfg);
    case RunMode::Table: return run_table(cfg);
    case RunMode::Stochastics: return run_stochastics(cfg);
  }
  throw DomainError("unknown mode");
}

}  // namespace pcf
