// dynatomic: tables, verification suites and the rational parabolic search.
//
// Exit codes: 0 success, 1 a verdict failed, 2 an integrality claim failed
// (NotInSubring), 3 a degree guardrail was hit.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "dynatomic/errors.hpp"
#include "dynatomic/parabolic.hpp"
#include "dynatomic/parallel.hpp"
#include "dynatomic/serialize.hpp"
#include "dynatomic/suites.hpp"
#include "dynatomic/tables.hpp"

using namespace dynatomic;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kNotInSubring = 2;
constexpr int kGuardrail = 3;

std::string join(const std::vector<unsigned>& xs) {
  std::string s;
  for (unsigned x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << text;
}

struct TableArgs {
  std::string family;
  std::string d = "2";
  std::string m = "1";
  std::string n;
  std::string format = "json";
  std::string out;
};

int cmd_table(const TableArgs& a) {
  const FamilyKind kind = parse_family(a.family);
  const auto ds = parse_range(a.d);
  const auto ms = parse_range(a.m);
  std::vector<std::optional<unsigned>> ns = {std::nullopt};
  if (kind == FamilyKind::quad_crit) {
    if (a.n.empty()) throw ParseError("quadcrit tables need --n");
    ns.clear();
    for (unsigned n : parse_range(a.n)) ns.emplace_back(n);
  } else if (!a.n.empty()) {
    throw ParseError("--n applies to quadcrit only");
  }

  struct Key {
    unsigned d, m;
    std::optional<unsigned> n;
  };
  std::vector<Key> keys;
  for (unsigned d : ds)
    for (auto n : ns)
      for (unsigned m : ms) keys.push_back({d, m, n});
  // Guardrails first, so a bad range fails before any work starts.
  for (const auto& k : keys) check_guardrail(Family(kind, k.d), k.m);

  std::vector<TableEntry> rows(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) { rows[i] = compute_entry(Family(kind, keys[i].d), keys[i].m, keys[i].n); });

  std::ostringstream os;
  if (a.format == "csv") {
    os << csv_header() << '\n';
    for (const auto& e : rows) {
      const std::string n = e.n ? std::to_string(*e.n) : "-";
      for (const auto& line : csv_rows(std::string(family_name(kind)), e.family.d(), e.m, n, e.value)) os << line << '\n';
    }
  } else {
    Json j = Json::array();
    for (const auto& e : rows) j.push_back(e.json());
    os << canonical_dump(j) << '\n';
  }
  emit(os.str(), a.out);
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::string d;
  std::optional<unsigned> n_max, k_max, m_max;
  bool quick = false;
  std::string golden;
  std::string format = "text";
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions opt;
  if (!a.d.empty()) opt.d = parse_range(a.d);
  opt.n_max = a.n_max;
  opt.k_max = a.k_max;
  opt.m_max = a.m_max;
  opt.quick = a.quick;
  opt.golden = a.golden;

  const auto t0 = std::chrono::steady_clock::now();
  const auto groups = run_suite(a.suite, opt);
  Report r;
  r.command = "verify";
  r.parameters = {{"suite", a.suite}, {"quick", a.quick ? "true" : "false"}};
  if (!a.d.empty()) r.parameters.emplace_back("d", join(opt.d));
  if (a.n_max) r.parameters.emplace_back("n_max", std::to_string(*a.n_max));
  if (a.k_max) r.parameters.emplace_back("k_max", std::to_string(*a.k_max));
  if (a.m_max) r.parameters.emplace_back("m_max", std::to_string(*a.m_max));
  for (const auto& g : groups) {
    r.verdicts.insert(r.verdicts.end(), g.verdicts.begin(), g.verdicts.end());
    r.timings.emplace_back(g.label, g.seconds);
  }
  r.timings.emplace_back("total", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  if (!a.out.empty()) r.artifacts.push_back(a.out);

  std::ostringstream os;
  if (a.format == "json") {
    os << canonical_dump(to_json(r)) << '\n';
  } else {
    std::size_t failed = 0;
    for (const auto& v : r.verdicts) {
      os << (v.pass ? "PASS " : "FAIL ") << v.claim;
      for (const auto& [k, val] : v.params) os << ' ' << k << '=' << val;
      if (!v.witness.empty()) os << "  [" << v.witness << ']';
      if (!v.pass) {
        ++failed;
        os << "\n     residual: " << v.residual;
      }
      os << '\n';
    }
    os << r.verdicts.size() - failed << '/' << r.verdicts.size() << " verdicts pass\n";
  }
  emit(os.str(), a.out);
  return r.pass() ? 0 : kVerifyFailed;
}

struct ParabolicArgs {
  unsigned d = 2;
  unsigned m_max = 6;
  unsigned j_max = 12;
  bool logistic = false;
  std::string format = "text";
  std::string out;
};

Json candidate_json(const Candidate& c) {
  Json j = {{"gamma", c.gamma.get_str()}, {"d", c.d}, {"status", status_name(c.status)},
            {"period", c.period}, {"multiplier_order", c.multiplier_order},
            {"multiplicity", c.multiplicity}, {"witness", c.witness}, {"note", c.note}};
  j["specialized"] = to_json(c.specialized);
  j["root_interval"] = c.root_interval ? Json{c.root_interval->first.get_str(), c.root_interval->second.get_str()}
                                       : Json(nullptr);
  return j;
}

std::string candidate_line(const Candidate& c) {
  std::ostringstream os;
  os << c.gamma.get_str() << '\t' << status_name(c.status);
  if (c.period) os << "\tm=" << c.period;
  if (c.multiplier_order) os << "\tj=" << c.multiplier_order;
  if (!c.witness.empty()) os << '\t' << c.witness;
  if (!c.note.empty()) os << "\t(" << c.note << ')';
  return os.str();
}

int cmd_parabolic(const ParabolicArgs& a) {
  if (a.d < 2) throw ParseError("parabolic needs --d >= 2");
  ClassifyOptions opt;
  opt.m_max = a.m_max;
  opt.j_max = a.j_max;
  std::ostringstream os;
  if (a.logistic) {
    if (a.d != 2) throw ParseError("--logistic applies to d = 2");
    std::vector<LogisticCase> cases(5);
    parallel_for(cases.size(), [&](std::size_t i) { cases[i] = logistic_bridge(Rational(static_cast<long>(i)), opt); });
    if (a.format == "json") {
      Json j = Json::array();
      for (const auto& lc : cases)
        j.push_back({{"a", lc.a.get_str()}, {"c", lc.c.get_str()}, {"parabolic", lc.parabolic},
                     {"rule", lc.rule}, {"candidate", candidate_json(lc.candidate)}});
      os << canonical_dump(j) << '\n';
    } else {
      for (const auto& lc : cases)
        os << "a=" << lc.a.get_str() << "\tc=" << lc.c.get_str() << '\t'
           << (lc.parabolic ? "parabolic" : "not parabolic") << '\t' << lc.rule << '\n';
    }
  } else {
    const auto cands = classify_all(a.d, opt);
    if (a.format == "json") {
      Json j = Json::array();
      for (const auto& c : cands) j.push_back(candidate_json(c));
      os << canonical_dump(j) << '\n';
    } else {
      for (const auto& c : cands) os << candidate_line(c) << '\n';
      os << cands.size() << " candidates\n";
    }
  }
  emit(os.str(), a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynatomic and multiplier polynomials over Z[c]"};
  app.require_subcommand(1);
  unsigned jobs_n = std::max(1U, std::thread::hardware_concurrency());
  bool large = false;
  app.add_option("--jobs", jobs_n, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", large, "lift the degree guardrail");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "delta_m, Psi and Delta_{n,m} tables");
  table->add_option("--family", ta.family, "unicritical, linearterm, shifted or quadcrit")->required();
  table->add_option("--d", ta.d, "degree parameter, e.g. 2 or 2,3");
  table->add_option("--m", ta.m, "periods, e.g. 1..3");
  table->add_option("--n", ta.n, "cyclotomic indices for quadcrit, e.g. 1..3");
  table->add_option("--format", ta.format)->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--out", ta.out, "output file");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", va.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--d", va.d, "degrees, e.g. 2,3");
  verify->add_option("--n-max", va.n_max);
  verify->add_option("--k-max", va.k_max);
  verify->add_option("--m-max", va.m_max);
  verify->add_flag("--quick", va.quick, "small ranges");
  verify->add_option("--golden", va.golden, "golden table file")->check(CLI::ExistingFile);
  verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", va.out, "output file");

  ParabolicArgs pa;
  auto* parabolic = app.add_subcommand("parabolic", "classify rational parameters");
  parabolic->add_option("--d", pa.d);
  parabolic->add_option("--m-max", pa.m_max);
  parabolic->add_option("--j-max", pa.j_max);
  parabolic->add_flag("--logistic", pa.logistic, "a z (1 - z) for a = 0..4");
  parabolic->add_option("--format", pa.format)->check(CLI::IsMember({"text", "json"}));
  parabolic->add_option("--out", pa.out, "output file");

  CLI11_PARSE(app, argc, argv);
  set_jobs(jobs_n);
  set_allow_large(large);
  try {
    if (*table) return cmd_table(ta);
    if (*verify) return cmd_verify(va);
    return cmd_parabolic(pa);
  } catch (const NotInSubring& e) {
    std::cerr << "not in subring: " << e.what() << '\n';
    return kNotInSubring;
  } catch (const GuardrailViolation& e) {
    std::cerr << "guardrail: " << e.what() << '\n';
    return kGuardrail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
