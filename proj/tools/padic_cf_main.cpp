// Command line front end for the p-adic continued fraction harness.
//
// Exit codes: 0 on success, 2 for configuration or usage errors, 3 when
// single mode hits an arithmetic error (non-residue radicand, ramified
// prime, precision cap, sign-of-zero and friends).

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pcf/errors.hpp"
#include "pcf/harness.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"p-adic continued fraction expansions of quadratic irrationals"};
  app.get_formatter()->column_width(34);

  long prime = 5;
  std::vector<long> d_values;
  std::string d_range;
  std::string alg = "browkin1";
  long max_steps = 1000;
  int digits = 5;
  std::string branch = "default";
  std::string format = "csv";
  unsigned long long seed = 1;
  std::string mode = "single";
  long samples = 1000000;
  std::string out_path;

  app.add_option("--prime", prime, "Odd prime p")->capture_default_str();
  app.add_option("--d", d_values, "Radicand D (repeatable)");
  app.add_option("--d-range", d_range, "Inclusive radicand range LO:HI");
  app.add_option("--alg", alg, "Expansion algorithm")
      ->check(CLI::IsMember({"browkin1", "browkin2", "mr"}))
      ->capture_default_str();
  app.add_option("--max-steps", max_steps,
                 "Highest convergent index to evaluate")
      ->capture_default_str();
  app.add_option("--digits", digits, "Reported digits for squared values")
      ->capture_default_str();
  app.add_option("--branch", branch, "Square root branch mod p")
      ->check(CLI::IsMember({"default", "alternate"}))
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "markdown"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--mode", mode, "Run mode")
      ->check(CLI::IsMember({"single", "table", "stochastics"}))
      ->capture_default_str();
  app.add_option("--samples", samples, "Monte Carlo sample count")
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  pcf::RunConfig cfg;
  try {
    cfg.prime = prime;
    cfg.d_values = d_values;
    if (!d_range.empty()) {
      auto colon = d_range.find(':');
      if (colon == std::string::npos) {
        throw pcf::DomainError("--d-range expects LO:HI");
      }
      cfg.d_range = std::make_pair(std::stol(d_range.substr(0, colon)),
                                   std::stol(d_range.substr(colon + 1)));
    }
    cfg.algorithm = pcf::algorithm_from_name(alg).value();
    cfg.max_steps = max_steps;
    cfg.report_digits = digits;
    cfg.branch = branch == "alternate" ? pcf::Branch::Alternate
                                       : pcf::Branch::Default;
    cfg.format = pcf::format_from_name(format).value();
    cfg.seed = seed;
    cfg.mode = pcf::mode_from_name(mode).value();
    cfg.mc_samples = samples;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  pcf::HarnessReport report;
  try {
    report = pcf::run(cfg);
  } catch (const pcf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cfg.mode == pcf::RunMode::Single ? 3 : 2;
  }

  if (out_path.empty()) {
    std::cout << report.rendered;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  out << report.rendered;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
