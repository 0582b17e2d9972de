#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dynatomic {

/// Outcome of one symbolic check. `residual` is "0" when an identity holds
/// exactly; otherwise it carries the exact difference or the offending
/// value, so a failure can be reproduced from the record alone.
struct Verdict {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::string residual;
  std::string witness;

  Verdict& param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Verdict& param(std::string key, long long value) {
    return param(std::move(key), std::to_string(value));
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline Verdict make_verdict(std::string claim) {
  Verdict v;
  v.claim = std::move(claim);
  return v;
}

/// Pass if every verdict passes (vacuously true for an empty list).
inline bool all_pass(const std::vector<Verdict>& vs) {
  for (const auto& v : vs)
    if (!v.pass) return false;
  return true;
}

}  // namespace dynatomic
