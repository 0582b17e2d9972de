#pragma once

// Rows of the four multiplier tables and their golden comparison.

#include <optional>
#include <string>
#include <vector>

#include "dynatomic/dynamics.hpp"
#include "dynatomic/polynomial.hpp"
#include "dynatomic/serialize.hpp"
#include "dynatomic/verdict.hpp"

namespace dynatomic {

/// One computed row. Unicritical, linearterm and shifted rows are the
/// rescaled multiplier polynomial in (C, x); quadcrit rows are
/// Res_x(delta_m, cyc_n) in c, the order the table prints.
struct TableEntry {
  Family family = Family::unicritical(2);
  unsigned m = 1;
  std::optional<unsigned> n;
  BiPoly value{'x'};
  bool univariate = false;  // quadcrit: value is constant in x
  std::string column;       // deg_z Phi*_m, or the leading coefficient

  Json json() const;
};

/// Throws NotInSubring or GuardrailViolation from the underlying steps.
TableEntry compute_entry(const Family& fam, unsigned m, std::optional<unsigned> n = std::nullopt);

struct GoldenRow {
  std::string family;
  unsigned d = 0;
  std::optional<unsigned> n;
  unsigned m = 0;
  std::string column;
  std::string expression;
  std::size_t line = 0;
};

/// Tab separated: family d n m deg_z_or_lc expression; '#' starts a comment.
std::vector<GoldenRow> load_golden(const std::string& path);

/// Canonical JSON of the computed row against the parsed golden expression,
/// byte for byte. Quadcrit rows must also match the leading-coefficient
/// column, and a "Too long" expression is checked through that column only.
/// A differing deg_z column is reported in the witness.
Verdict compare_golden(const GoldenRow& row);

std::string default_golden_path();

}  // namespace dynatomic
