#include "dynatomic/tables.hpp"

#include <fstream>
#include <sstream>

#include "dynatomic/invariants.hpp"
#include "dynatomic/numtheory.hpp"

#ifndef DYNATOMIC_GOLDEN_DIR
#define DYNATOMIC_GOLDEN_DIR "golden"
#endif

namespace dynatomic {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, '\t')) out.push_back(cur);
  return out;
}

unsigned parse_unsigned(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw ParseError("golden line " + std::to_string(line) + ": bad number " + s);
  }
}

}  // namespace

Json TableEntry::json() const {
  Json j = {{"family", std::string(family_name(family.kind()))}, {"d", family.d()}, {"m", m},
            {"column", column}};
  j["n"] = n ? Json(*n) : Json(nullptr);
  j["value"] = univariate ? to_json(value.coefficient(0)) : to_json(value);
  return j;
}

TableEntry compute_entry(const Family& fam, unsigned m, std::optional<unsigned> n) {
  TableEntry e;
  e.family = fam;
  e.m = m;
  e.n = n;
  const BiPoly delta = multiplier_poly(fam, m).delta;
  if (fam.kind() == FamilyKind::quad_crit) {
    if (!n) throw std::invalid_argument("quadcrit rows need a cyclotomic index n");
    IntPoly v = resultant_with_monic(cyclotomic(*n), delta);
    // Res_x(delta, cyc_n) = (-1)^(deg delta * phi(n)) Res_x(cyc_n, delta)
    if ((*delta.degree() * euler_phi(*n)) % 2 == 1) v = -v;
    e.column = v.is_zero() ? "0" : v.leading().get_str();
    e.value = BiPoly::constant(v, 'x');
    e.univariate = true;
    return e;
  }
  e.value = rescale_extract(delta, fam, m).psi;
  e.column = moebius_degree(fam.degree(), m).get_str();
  return e;
}

std::vector<GoldenRow> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open golden file " + path);
  std::vector<GoldenRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_tabs(line);
    if (f.size() != 6) throw ParseError("golden line " + std::to_string(lineno) + ": expected 6 fields");
    GoldenRow r;
    r.family = f[0];
    r.d = parse_unsigned(f[1], lineno);
    if (f[2] != "-") r.n = parse_unsigned(f[2], lineno);
    r.m = parse_unsigned(f[3], lineno);
    r.column = f[4];
    r.expression = f[5];
    r.line = lineno;
    rows.push_back(std::move(r));
  }
  return rows;
}

Verdict compare_golden(const GoldenRow& row) {
  const FamilyKind kind = parse_family(row.family);
  const Family fam = Family(kind, row.d);
  const TableEntry e = compute_entry(fam, row.m, row.n);
  Verdict v = make_verdict("golden-table");
  v.param("family", row.family).param("d", row.d).param("m", row.m);
  if (row.n) v.param("n", *row.n);
  if (e.univariate) {
    const BiPoly lc = parse_tex(row.column, 'c');
    const std::string want_lc = lc.is_zero() ? "0" : lc.coefficient(0).coefficient(0).get_str();
    const bool lc_ok = lc.size() == 1 && lc.coefficient(0).size() == 1 && want_lc == e.column;
    if (row.expression == "Too long") {
      v.pass = lc_ok;
      v.residual = lc_ok ? "0" : "leading coefficient " + e.column + " vs " + want_lc;
      v.witness = "leading coefficient " + e.column + ", degree " +
                  std::to_string(*e.value.coefficient(0).degree());
      return v;
    }
    const BiPoly want = parse_tex(row.expression, 'c');
    const std::string a = canonical_dump(to_json(e.value.coefficient(0)));
    const std::string b = canonical_dump(to_json(want.size() <= 1 ? want.coefficient(0).with_var('c') : IntPoly('c')));
    const bool body_ok = want.size() <= 1 && a == b;
    v.pass = lc_ok && body_ok;
    v.residual = v.pass ? "0" : (body_ok ? "leading coefficient " + e.column + " vs " + want_lc
                                         : "computed " + to_string(e.value.coefficient(0)));
    v.witness = "leading coefficient " + e.column;
    return v;
  }
  const BiPoly want = parse_tex(row.expression, 'C');
  const std::string a = canonical_dump(to_json(e.value));
  const std::string b = canonical_dump(to_json(want));
  v.pass = a == b;
  v.residual = v.pass ? "0" : "computed " + to_string(e.value);
  v.witness = "deg_z Phi*_m = " + e.column;
  if (!v.pass && !want.is_zero()) {
    BiPoly power = want;
    for (unsigned k = 2; k <= 3; ++k) {
      power = power * want;
      if (power == e.value) {
        v.witness += "; computed row is the printed expression to the power " + std::to_string(k);
        break;
      }
    }
  }
  if (row.column != e.column) v.witness += "; printed column " + row.column + " disagrees";
  return v;
}

std::string default_golden_path() { return std::string(DYNATOMIC_GOLDEN_DIR) + "/multiplier_tables.tsv"; }

}  // namespace dynatomic
