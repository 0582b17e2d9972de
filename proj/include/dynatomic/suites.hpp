#pragma once

// Named verification suites behind `dynatomic verify`.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynatomic/serialize.hpp"
#include "dynatomic/verdict.hpp"

namespace dynatomic {

/// Unset ranges fall back to per-suite defaults, smaller under `quick`.
struct SuiteOptions {
  std::vector<unsigned> d;  // empty: {2} quick, {2, 3} otherwise
  std::optional<unsigned> n_max;
  std::optional<unsigned> k_max;
  std::optional<unsigned> m_max;
  bool quick = false;
  std::string golden;  // empty: the bundled golden file
};

/// integrality, monicness, morton-vivaldi, newton, equalities,
/// leading-terms, tables, all. "all" runs the first six; the golden table
/// diff is its own suite.
const std::vector<std::string>& suite_names();

struct TimedVerdicts {
  std::string label;
  std::vector<Verdict> verdicts;
  double seconds = 0;
};

/// Runs the jobs of one suite in parallel; the result order is fixed by the
/// suite, not by scheduling. Throws std::invalid_argument for an unknown
/// name, and lets GuardrailViolation and NotInSubring through.
std::vector<TimedVerdicts> run_suite(const std::string& name, const SuiteOptions& opt);

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Verdict> verdicts;
  std::vector<std::string> artifacts;
  std::vector<std::pair<std::string, double>> timings;  // seconds per item

  bool pass() const { return all_pass(verdicts); }
  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

}  // namespace dynatomic
