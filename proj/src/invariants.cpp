#include "dynatomic/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dynatomic/numtheory.hpp"
#include "dynatomic/parallel.hpp"
#include "dynatomic/resultant.hpp"

namespace dynatomic {

namespace {

IntPoly cpoly(std::initializer_list<long> cs) { return int_poly(cs, 'c'); }
IntPoly c_one() { return cpoly({1}); }

BiPoly z_poly() { return BiPoly::monomial(c_one(), 1, 'z'); }
BiPoly x_poly() { return BiPoly::monomial(c_one(), 1, 'x'); }

BiPoly c_monomial(const Integer& coef, std::size_t e, char var) {
  return BiPoly::constant(IntPoly::monomial(coef, e, 'c'), var);
}

unsigned small(const Integer& v) {
  if (sgn(v) < 0 || !v.fits_uint_p()) throw std::overflow_error("value out of range");
  return static_cast<unsigned>(v.get_ui());
}

unsigned upow(unsigned b, unsigned e) {
  return small(pow(Integer(b), e));
}

int sign_of_parity(unsigned long e) { return e % 2 == 0 ? 1 : -1; }

std::string sign_str(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "none"); }

/// Leading c-term of p as a polynomial in x: (degree, coefficient of
/// c^degree collected over x).
std::pair<std::size_t, IntPoly> c_leading(const BiPoly& p) {
  const std::size_t deg = inner_degree(p).value_or(0);
  std::vector<Integer> lead(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) lead[i] = p[i].coefficient(deg);
  return {deg, IntPoly(std::move(lead), p.var())};
}

BiPoly evaluate_x(const BiPoly& p, const Integer& x) {
  IntPoly acc('c');
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * IntPoly::constant(x, 'c') + p[i];
  return BiPoly::constant(acc, 'x');
}

/// The family ft(z) = z^(d+1) - c z^d + c as a map.
const BiPoly& shifted_map(unsigned d) {
  static thread_local std::map<unsigned, BiPoly> maps;
  auto it = maps.find(d);
  if (it == maps.end()) it = maps.emplace(d, Family::shifted(d).map()).first;
  return it->second;
}

/// ft^i(z) for i = 0..count-1.
std::vector<BiPoly> shifted_orbit(unsigned d, unsigned count) {
  std::vector<BiPoly> out;
  BiPoly it = z_poly();
  for (unsigned i = 0; i < count; ++i) {
    out.push_back(it);
    if (i + 1 < count) it = compose(shifted_map(d), it);
  }
  return out;
}

BiPoly product_orbit(const std::vector<BiPoly>& orbit, unsigned count) {
  BiPoly acc = BiPoly::constant(c_one(), 'z');
  for (unsigned i = 0; i < count; ++i) acc *= orbit[i];
  return acc;
}

BiPoly cleared_calf(unsigned d, const std::vector<BiPoly>& orbit, unsigned m) {
  const BiPoly dc = c_monomial(Integer(d), 1, 'z');
  BiPoly acc = BiPoly::constant(c_one(), 'z');
  for (unsigned i = 0; i < m; ++i) acc *= orbit[i].scale(cpoly({static_cast<long>(d + 1)})) - dc;
  return acc;
}

Integer integer_cyclotomic_value(std::uint64_t n, const Integer& x) {
  return evaluate(cyclotomic(n), x);
}

}  // namespace

IntPoly resultant_with_monic(const IntPoly& p, const BiPoly& delta) {
  BiPoly lifted = lift_constant_coefficients(p.with_var('x'), 'c');
  return resultant_multiplication(lifted, delta.with_var('x'));
}

DeltaInvariant delta_nm(const Family& fam, unsigned n, unsigned m) {
  if (m == 0 || n % m != 0) throw std::invalid_argument("delta_nm needs m | n");
  DeltaInvariant r;
  r.n = n;
  r.m = m;
  if (m < n) {
    r.value = resultant_with_monic(cyclotomic(n / m), multiplier_poly(fam, m).delta);
    return r;
  }
  r.diagonal = true;
  IntPoly at_one = evaluate_x(multiplier_poly(fam, n).delta, Integer(1)).coefficient(0);
  IntPoly proper = c_one();
  for (auto k : divisors(n))
    if (k != n) proper *= delta_nm(fam, n, static_cast<unsigned>(k)).value;
  r.value = exact_div(at_one, proper);
  return r;
}

Rescaled rescale_extract(const BiPoly& p, const Integer& kappa, unsigned stride,
                         const Integer& prefactor) {
  if (stride == 0) throw std::invalid_argument("stride must be positive");
  std::vector<IntPoly> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const IntPoly& coef = p[i];
    std::vector<Integer> t_coeffs;
    for (std::size_t j = 0; j < coef.size(); ++j) {
      Integer a = coef[j] * prefactor;
      if (sgn(a) == 0) continue;
      const std::string where = "coefficient of c^" + std::to_string(j) + " x^" + std::to_string(i);
      if (j % stride != 0) throw NotInSubring(where + " has exponent off the stride " + std::to_string(stride));
      const std::size_t e = j / stride;
      const Integer scale = pow(kappa, static_cast<unsigned long>(e));
      if (a % scale != 0)
        throw NotInSubring(where + " is not divisible by " + kappa.get_str() + "^" + std::to_string(e));
      if (t_coeffs.size() <= e) t_coeffs.resize(e + 1);
      t_coeffs[e] = a / scale;
    }
    out.emplace_back(std::move(t_coeffs), 'C');
  }
  Rescaled r;
  r.psi = BiPoly(std::move(out), p.var());
  r.t_degree = inner_degree(r.psi).value_or(0);
  std::vector<Integer> lead(r.psi.size());
  for (std::size_t i = 0; i < r.psi.size(); ++i) lead[i] = r.psi[i].coefficient(r.t_degree);
  r.t_leading = IntPoly(std::move(lead), p.var());
  if (r.t_leading.size() == 1 && abs(r.t_leading[0]) == 1) r.monic_sign = sgn(r.t_leading[0]);
  return r;
}

Rescaled rescale_extract(const IntPoly& p, const Integer& kappa, unsigned stride,
                         const Integer& prefactor) {
  return rescale_extract(BiPoly::constant(p.with_var('c'), 'x'), kappa, stride, prefactor);
}

Rescaled rescale_extract(const BiPoly& delta, const Family& fam, unsigned m) {
  auto rs = fam.rescale();
  if (!rs) throw NotInSubring(fam.label() + " has no rescaled integral form");
  const Integer prefactor = pow(Integer(fam.d()), fam.prefactor_exponent(m));
  return rescale_extract(delta, rs->kappa, rs->stride, prefactor);
}

Verdict delta_monic_check(const Family& fam, unsigned m) {
  Verdict v = make_verdict(std::string(family_name(fam.kind())) + "-integrality");
  v.param("d", fam.d()).param("m", m);
  const MultiplierResult mr = multiplier_poly(fam, m);
  Rescaled r;
  try {
    r = rescale_extract(mr.delta, fam, m);
  } catch (const NotInSubring& e) {
    v.pass = false;
    v.residual = e.what();
    return v;
  }
  v.witness = "deg_t " + std::to_string(r.t_degree) + ", leading sign " + sign_str(r.monic_sign);
  if (r.monic_sign == 0) {
    v.pass = false;
    v.residual = "t-leading coefficient " + to_string(r.t_leading);
    return v;
  }
  if (fam.kind() == FamilyKind::unicritical) {
    const unsigned long dm = small(moebius_degree(fam.d(), m));
    const int expected = sign_of_parity(dm / m + dm * (fam.d() - 1));
    v.pass = r.monic_sign == expected;
    v.residual = v.pass ? "0" : "sign " + sign_str(r.monic_sign) + " != " + sign_str(expected);
  } else {
    v.pass = true;
    v.residual = "0";
  }
  return v;
}

Verdict psi_monic_check(const Family& fam, unsigned n, unsigned m) {
  Verdict v = make_verdict("silverman-monic");
  v.param("d", fam.d()).param("n", n).param("m", m);
  if (fam.kind() != FamilyKind::unicritical) throw std::invalid_argument("unicritical family only");
  const DeltaInvariant delta = delta_nm(fam, n, m);
  Rescaled r;
  try {
    r = rescale_extract(delta.value, fam.rescale()->kappa, fam.d() - 1);
  } catch (const NotInSubring& e) {
    v.residual = e.what();
    return v;
  }
  const unsigned long dm = small(moebius_degree(fam.d(), m));
  const unsigned long base = dm / m + dm * (fam.d() - 1);
  const int stated = sign_of_parity(euler_phi(n) * base);
  const int derived = sign_of_parity(euler_phi(n / m) * base);
  v.pass = r.monic_sign != 0 && r.monic_sign == derived;
  v.residual = v.pass ? "0" : "leading t-coefficient " + to_string(r.t_leading);
  v.witness = "observed " + sign_str(r.monic_sign) + "; exponent with phi(n/m) gives " +
              sign_str(derived) + ", with phi(n) gives " + sign_str(stated) +
              (stated == r.monic_sign ? "" : " (phi(n) form disagrees)");
  return v;
}

Verdict morton_vivaldi_check(const Family& fam, unsigned n, unsigned m) {
  Verdict v = make_verdict("morton-vivaldi");
  v.param("family", std::string(family_name(fam.kind()))).param("d", fam.d()).param("n", n).param("m", m);
  if (m == 0 || m >= n || n % m != 0) throw std::invalid_argument("need m | n and m < n");
  const DynatomicResult pn = dynatomic_polynomial(fam, n);
  const DynatomicResult pm = dynatomic_polynomial(fam, m);
  // Res(A, B) = (-1)^(deg A deg B) Res(B, A), and B = Phi*_m is monic
  IntPoly lhs = resultant_multiplication(pm.phi_star, pn.phi_star);
  if ((pn.degree_z * pm.degree_z) % 2 == 1) lhs = -lhs;
  const IntPoly rhs = pow(delta_nm(fam, n, m).value, m);
  if (lhs == rhs) {
    v.pass = true;
    v.witness = "sign +1";
  } else if (lhs == -rhs) {
    v.pass = true;
    v.witness = "sign -1";
  } else {
    v.pass = false;
    v.witness = "no sign matches";
  }
  v.residual = v.pass ? "0" : to_string(lhs - rhs);
  return v;
}

Verdict delta_degree_check(unsigned n) {
  Verdict v = make_verdict("morton-vivaldi-degree");
  v.param("d", 2).param("n", n);
  const Family fam = Family::unicritical(2);
  std::vector<std::string> bad;
  long proper_total = 0;
  std::string seen;
  for (auto k : divisors(n)) {
    const unsigned m = static_cast<unsigned>(k);
    const DeltaInvariant delta = delta_nm(fam, n, m);
    const long got = static_cast<long>(delta.value.degree().value_or(0));
    const long dm = static_cast<long>(small(moebius_degree(2, m)));
    long want;
    if (m < n) {
      want = static_cast<long>(euler_phi(n / m)) * dm / 2;
      proper_total += want;
    } else {
      want = dm / 2 - proper_total;
    }
    seen += (seen.empty() ? "" : ", ") + std::to_string(m) + ":" + std::to_string(got);
    if (got != want)
      bad.push_back("m=" + std::to_string(m) + " degree " + std::to_string(got) + " != " +
                    std::to_string(want));
  }
  v.pass = bad.empty();
  v.residual = v.pass ? "0" : bad.front();
  v.witness = "deg_c by m: " + seen;
  return v;
}

std::vector<DeltaInvariant> degree_one_deltas(unsigned n_max) {
  const Family fam = Family::unicritical(2);
  std::vector<DeltaInvariant> out;
  for (unsigned n = 1; n <= n_max; ++n)
    for (auto k : divisors(n)) {
      DeltaInvariant delta = delta_nm(fam, n, static_cast<unsigned>(k));
      if (delta.value.degree() == std::optional<std::size_t>(1)) out.push_back(std::move(delta));
    }
  return out;
}

AuxPolys aux_polys(unsigned d, unsigned k, unsigned m) {
  if (d == 0 || k == 0 || m == 0) throw std::invalid_argument("aux polynomials need d, k, m >= 1");
  AuxPolys a;
  a.d = d;
  a.k = k;
  a.m = m;
  const std::vector<BiPoly> orbit = shifted_orbit(d, std::max(k, m));
  a.F_k = product_orbit(orbit, k) - BiPoly::constant(c_one(), 'z');
  a.P_m = cleared_calf(d, orbit, m);
  a.R_km = charpoly_resultant_interp(a.F_k, a.P_m);
  return a;
}

std::vector<Verdict> aux_nonunicritical(unsigned d, unsigned k, unsigned m) {
  const AuxPolys a = aux_polys(d, k, m);
  std::vector<Verdict> out;
  auto base = [&](std::string claim) {
    Verdict v = make_verdict(std::move(claim));
    v.param("d", d).param("k", k).param("m", m);
    return v;
  };

  {
    Verdict v = base("ft-permutes-zeros");
    const BiPoly rem = rem_monic(compose(a.F_k, shifted_map(d)), a.F_k);
    v.pass = rem.is_zero();
    v.residual = v.pass ? "0" : to_string(rem);
    v.witness = "F_k(ft(z)) mod F_k";
    out.push_back(std::move(v));
  }
  {
    Verdict v = base("aux-degree");
    const std::size_t want = (upow(d + 1, k - 1) - 1) / d;
    const std::size_t got = inner_degree(a.F_k).value_or(0);
    v.pass = got == want;
    v.residual = v.pass ? "0" : std::to_string(got) + " != " + std::to_string(want);
    v.witness = "deg_c F_k = " + std::to_string(got) + ", deg_z F_k = " + std::to_string(*a.F_k.degree());
    out.push_back(std::move(v));
  }
  {
    Verdict v = base("linearterm-resultant-integrality");
    const unsigned e = m * (upow(d + 1, k - 1) - 1) / d;
    try {
      const Rescaled r = rescale_extract(a.R_km, Integer(d), 1, pow(Integer(d), e));
      v.pass = r.monic_sign != 0;
      v.residual = v.pass ? "0" : "leading dc-coefficient " + to_string(r.t_leading);
      v.witness = "d^" + std::to_string(e) + " R in Z[dc, x], deg_t " + std::to_string(r.t_degree);
    } catch (const NotInSubring& ex) {
      v.residual = ex.what();
    }
    out.push_back(std::move(v));
  }
  const auto [deg, lead] = c_leading(a.R_km);
  const unsigned want_deg = m * (upow(d + 1, k) - 1) / d;
  const Integer want_mag = pow(Integer(d), static_cast<unsigned long>(m) * upow(d + 1, k - 1));
  const bool constant_lead = lead.size() == 1;
  {
    Verdict v = base("linearterm-leading-term");
    v.pass = deg == want_deg && constant_lead && abs(lead[0]) == want_mag;
    v.residual = v.pass ? "0" : "c^" + std::to_string(deg) + " coefficient " + to_string(lead);
    v.witness = "LT_c = " + (constant_lead ? lead[0].get_str() : to_string(lead)) + " c^" + std::to_string(deg);
    out.push_back(std::move(v));
  }
  {
    Verdict v = base("linearterm-leading-sign");
    const unsigned long e = ((m + 1) * (upow(d + 1, k) - 1) + m * (upow(d + 1, k - 1) - 1)) / d;
    const int stated = sign_of_parity(e);
    const int observed = constant_lead ? sgn(lead[0]) : 0;
    v.pass = observed == stated;
    v.residual = v.pass ? "0" : "observed " + sign_str(observed) + ", stated " + sign_str(stated);
    v.witness = "sign exponent " + std::to_string(e);
    out.push_back(std::move(v));
  }
  return out;
}

Verdict resultant_factorization_check(unsigned d, unsigned k, unsigned m) {
  Verdict v = make_verdict("linearterm-resultant-factorization");
  v.param("d", d).param("k", k).param("m", m);
  const Family fam = Family::linear_term(d);
  const BiPoly fk = iterate(fam, k) - z_poly();
  const BiPoly lhs = charpoly_resultant_interp(fk, multiplier_derivative(fam, m));
  const AuxPolys a = aux_polys(d, k, m);
  const BiPoly rhs = (x_poly() - c_monomial(Integer(1), m, 'x')) * pow(a.R_km, d);
  v.pass = lhs == rhs;
  v.residual = v.pass ? "0" : to_string(lhs - rhs);
  v.witness = "R_{k,m} = " + to_string(a.R_km);
  return v;
}

Verdict global_delta_identity(unsigned d, unsigned m) {
  Verdict v = make_verdict("linearterm-delta-identity");
  v.param("d", d).param("m", m);
  const BiPoly delta = multiplier_poly(Family::linear_term(d), m).delta;
  BiPoly num = BiPoly::constant(c_one(), 'x'), den = num;
  for (auto k : divisors(m)) {
    const int mu = mobius(m / k);
    if (mu == 0) continue;
    const BiPoly r = aux_polys(d, static_cast<unsigned>(k), m).R_km;
    (mu > 0 ? num : den) *= r;
  }
  BiPoly rhs = pow(exact_div(num, den), d);
  if (m == 1) rhs *= x_poly() - c_monomial(Integer(1), 1, 'x');
  const BiPoly lhs = pow(delta, m);
  v.pass = lhs == rhs;
  v.residual = v.pass ? "0" : to_string(lhs - rhs);
  return v;
}

Verdict calf_degree_check(unsigned d, unsigned k, unsigned m) {
  Verdict v = make_verdict("calf-resultant-degree");
  v.param("d", d).param("k", k).param("m", m);
  const std::vector<BiPoly> orbit = shifted_orbit(d, std::max(k, m));
  const BiPoly F = product_orbit(orbit, k) - BiPoly::constant(c_one(), 'z');
  const std::size_t n_f = *F.degree();
  // deg_y of the resultant is at most m deg F, so the c-leading coefficient,
  // a nonzero polynomial in (x, y), survives at one of m deg F + 1 values
  const std::size_t nodes = m * n_f + 1;
  std::vector<std::size_t> degs(nodes);
  parallel_for(nodes, [&](std::size_t i) {
    BiPoly calf = BiPoly::constant(c_one(), 'z');
    const BiPoly y = BiPoly::constant(IntPoly::constant(Integer(static_cast<unsigned long>(i)), 'c'), 'z');
    for (unsigned j = 0; j < m; ++j) calf *= y + orbit[j];
    degs[i] = inner_degree(charpoly_resultant_interp(F, calf)).value_or(0);
  });
  const std::size_t got = *std::max_element(degs.begin(), degs.end());
  const std::size_t want = m * (upow(d + 1, k - 1) - 1) / d;
  v.pass = got == want;
  v.residual = v.pass ? "0" : std::to_string(got) + " != " + std::to_string(want);
  v.witness = "max deg_c over y = 0.." + std::to_string(nodes - 1) + " is " + std::to_string(got);
  return v;
}

std::vector<Verdict> aux_shifted(unsigned d, unsigned k, unsigned m) {
  std::vector<Verdict> out;
  auto base = [&](std::string claim) {
    Verdict v = make_verdict(std::move(claim));
    v.param("d", d).param("k", k).param("m", m);
    return v;
  };
  const std::vector<BiPoly> orbit = shifted_orbit(d, std::max(k, m));
  const BiPoly prod_k = product_orbit(orbit, k);
  const BiPoly H = pow(prod_k, d) - BiPoly::constant(c_one(), 'z');
  const BiPoly g = pow(prod_k, d - 1) * cleared_calf(d, orbit, m);
  const BiPoly R = charpoly_resultant_interp(H, g);
  const unsigned e = m * (upow(d + 1, k - 1) - 1);
  {
    Verdict v = base("shifted-resultant-integrality");
    try {
      rescale_extract(R, Integer(d), 1, pow(Integer(d), e));
      v.pass = true;
      v.residual = "0";
      v.witness = "d^" + std::to_string(e) + " Rt in Z[dc, x]";
    } catch (const NotInSubring& ex) {
      v.residual = ex.what();
    }
    out.push_back(std::move(v));
  }
  const auto [deg, lead] = c_leading(R);
  const bool constant_lead = lead.size() == 1;
  const std::string lt = (constant_lead ? lead[0].get_str() : to_string(lead)) + " c^" + std::to_string(deg);
  {
    Verdict v = base("shifted-resultant-degree");
    const std::size_t want = m * (upow(d + 1, k) - 1);
    v.pass = deg == want;
    v.residual = v.pass ? "0" : std::to_string(deg) + " != " + std::to_string(want);
    v.witness = "LT_c = " + lt;
    out.push_back(std::move(v));
  }
  {
    // the statement has d^(m d (d+1)^(k-1)); the closing line of its proof
    // drops the factor m, so both are reported
    Verdict v = base("shifted-leading-coefficient");
    const unsigned stated = m * d * upow(d + 1, k - 1);
    const unsigned proof_form = d * upow(d + 1, k - 1);
    v.pass = constant_lead && abs(lead[0]) == pow(Integer(d), stated);
    v.residual = v.pass ? "0" : "LT_c = " + lt;
    v.witness = "LT_c = " + lt + "; |LC| = d^" + std::to_string(stated) +
                (stated == proof_form ? "" : " (the exponent d(d+1)^(k-1) does not match)");
    out.push_back(std::move(v));
  }
  if (k == 1) {
    // The derivative of ft^m carries (F_m + 1)^(d-1); on Z(H_k) this is
    // ((F_k + 1)^(d-1))^(m/k), which differs from the (F_k + 1)^(d-1) used in
    // Rt_{k,m} unless m/k = 1 mod d. The identity is checked with the F_m
    // factor, and the Rt form is reported alongside.
    Verdict v = base("shifted-delta-identity");
    const BiPoly delta = multiplier_poly(Family::shifted(d), m).delta;
    const BiPoly calf = cleared_calf(d, orbit, m);
    const BiPoly deriv_factor = pow(product_orbit(orbit, m), d - 1) * calf;
    auto assemble = [&](bool literal) -> std::optional<BiPoly> {
      BiPoly num = BiPoly::constant(c_one(), 'x'), den = num;
      for (auto kk : divisors(m)) {
        const int mu = mobius(m / kk);
        if (mu == 0) continue;
        const BiPoly prod = product_orbit(orbit, static_cast<unsigned>(kk));
        const BiPoly Hk = pow(prod, d) - BiPoly::constant(c_one(), 'z');
        const BiPoly gk = literal ? pow(prod, d - 1) * calf : deriv_factor;
        (mu > 0 ? num : den) *= charpoly_resultant_interp(Hk, gk);
      }
      BiPoly rhs;
      try {
        rhs = exact_div(num, den);
      } catch (const DivisionNotExact&) {
        return std::nullopt;
      }
      if (m == 1) rhs *= x_poly() - c_monomial(Integer(1), static_cast<std::size_t>(d), 'x');
      return rhs;
    };
    const BiPoly lhs = pow(delta, m);
    const auto rhs = assemble(false);
    const auto literal = assemble(true);
    v.pass = rhs && lhs == *rhs;
    v.residual = v.pass ? "0" : (rhs ? to_string(lhs - *rhs) : "quotient not exact");
    v.witness = std::string("with (F_m + 1)^(d-1); the (F_k + 1)^(d-1) form ") +
                (literal && *literal == lhs ? "also holds" : "fails");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> quadcrit_delta1(unsigned d, const std::vector<unsigned>& ns) {
  std::vector<Verdict> out;
  const Family fam = Family::quad_crit(d);
  const BiPoly delta = multiplier_poly(fam, 1).delta;
  {
    Verdict v = make_verdict("quadcrit-delta1");
    v.param("d", d);
    const BiPoly shift = x_poly() - BiPoly::constant(cpoly({static_cast<long>(d + 2)}), 'x');
    const BiPoly tail = c_monomial(pow(Integer(-static_cast<long>(d)), d), d + 1, 'x') *
                        (x_poly() - BiPoly::constant(cpoly({2}), 'x'));
    const BiPoly closed = x_poly() * (pow(shift, d + 1) + tail);
    v.pass = closed == delta;
    v.residual = v.pass ? "0" : to_string(delta - closed);
    v.witness = "delta_1 = " + to_string(delta);
    out.push_back(std::move(v));
  }
  for (unsigned n : ns) {
    Verdict v = make_verdict("quadcrit-leading-term");
    v.param("d", d).param("n", n);
    const IntPoly value = resultant_with_monic(cyclotomic(n), delta);
    const std::uint64_t phi = euler_phi(n);
    const Integer cyc2 = integer_cyclotomic_value(n, Integer(2));
    const Integer want = pow(Integer(d), static_cast<unsigned long>(d) * phi) * cyc2;
    const std::size_t want_deg = (d + 1) * phi;
    const std::size_t deg = value.degree().value_or(0);
    v.pass = deg == want_deg && abs(value.leading()) == want;
    v.residual = v.pass ? "0" : "LT_c = " + value.leading().get_str() + " c^" + std::to_string(deg);
    v.witness = "LT_c = " + value.leading().get_str() + " c^" + std::to_string(deg) +
                ", cyc_n(2) = " + cyc2.get_str();
    out.push_back(std::move(v));
  }
  return out;
}

Verdict iterate_product_check(const BiPoly& map, unsigned l, unsigned n) {
  Verdict v = make_verdict("dynatomic-iterate-product");
  v.param("l", l).param("n", n);
  if (std::gcd(l, n) != 1) throw std::invalid_argument("l and n must be coprime");
  BiPoly lhs = BiPoly::constant(c_one(), map.var());
  for (auto e : divisors(l)) lhs *= dynatomic_polynomial(map, static_cast<unsigned>(e) * n).phi_star;
  const BiPoly rhs = dynatomic_polynomial(iterate(map, l), n).phi_star;
  v.pass = lhs == rhs;
  v.residual = v.pass ? "0" : to_string(lhs - rhs);
  v.witness = "deg_z " + std::to_string(rhs.degree().value_or(0));
  return v;
}

Verdict dynatomic_equality_check(const BiPoly& map, unsigned k, unsigned m) {
  Verdict v = make_verdict("dynatomic-equality");
  v.param("k", k).param("m", m);
  if (k == 0 || m % k != 0) throw std::invalid_argument("need k | m");
  if (k == m) {
    v.pass = true;
    v.residual = "0";
    v.witness = "k = m: trivially true";
    return v;
  }
  unsigned mt = 1, rest = m;
  for (unsigned p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    if (k % p == 0) mt *= pk;
  }
  const unsigned mp = m / mt;
  v.param("k_part", mt).param("prime_to_k_part", mp);

  const Verdict first = iterate_product_check(map, mt, mp);
  const BiPoly phik = dynatomic_polynomial(map, k).phi_star;
  const BiPoly lambda = rem_monic(multiplier_derivative(map, k), phik);
  BiPoly lam_pow = rem_monic(one_like(lambda), phik);
  for (unsigned i = 0; i < mt / k; ++i) lam_pow = rem_monic(lam_pow * lambda, phik);

  if (mp > 1) {
    const BiPoly lhs = rem_monic(dynatomic_polynomial(iterate(map, mt), mp).phi_star, phik);
    const BiPoly cyc = lift_constant_coefficients(cyclotomic(mp), 'c').with_var(map.var());
    const BiPoly rhs = compose_mod(cyc, lam_pow, phik);
    v.pass = first.pass && lhs == rhs;
    v.residual = !first.pass ? first.residual : (v.pass ? "0" : to_string(lhs - rhs));
    v.witness = "value mod Phi*_k = " + to_string(lhs);
    return v;
  }
  // mp = 1: Phi*_{f^mt,1} = f^mt - z vanishes on Z(Phi*_k), while
  // cyc_1(lambda^(mt/k)) = lambda^(mt/k) - 1 does not. The limit in the
  // argument gives (f^mt)'(z0) - 1 for the value instead.
  const BiPoly one = BiPoly::constant(c_one(), map.var());
  const BiPoly literal_lhs = rem_monic(iterate(map, mt) - BiPoly::monomial(c_one(), 1, map.var()), phik);
  const BiPoly literal_rhs = rem_monic(lam_pow - one, phik);
  const BiPoly limit_lhs = rem_monic(multiplier_derivative(map, mt) - one, phik);
  v.pass = first.pass && limit_lhs == literal_rhs;
  v.residual = !first.pass ? first.residual : (v.pass ? "0" : to_string(limit_lhs - literal_rhs));
  v.witness = "m' = 1: literal value " + to_string(literal_lhs) + " vs cyc_1(lambda^" +
              std::to_string(mt / k) + ") = " + to_string(literal_rhs) +
              (literal_lhs == literal_rhs ? "" : " (literal form fails)") +
              "; limit form (f^" + std::to_string(mt) + ")' - 1 agrees";
  if (!v.pass) v.witness = "m' = 1: limit form (f^m~)' - 1 = lambda^(m~/k) - 1 fails";
  return v;
}

std::vector<Verdict> bang_check(unsigned n_max) {
  std::vector<Verdict> out;
  for (unsigned n = 2; n <= n_max; ++n) {
    if (n == 6) continue;  // cyc_6(2) = 3, the exception
    const Integer value = evaluate(cyclotomic(n), Integer(2));
    Verdict v = make_verdict("bang-primitive-divisor");
    v.param("n", n);
    Integer rest = value;
    std::string found;
    auto note = [&](const Integer& q) {
      if (q % n == 1 && found.empty()) found = q.get_str();
    };
    for (Integer q = 2; q * q <= rest; ++q) {
      if (rest % q != 0) continue;
      while (rest % q == 0) rest /= q;
      note(q);
    }
    if (rest > 1) note(rest);
    v.pass = !found.empty();
    v.residual = v.pass ? "0" : "no prime factor = 1 mod n";
    v.witness = "cyc_" + std::to_string(n) + "(2) = " + value.get_str() +
                (v.pass ? ", " + found + " mod " + std::to_string(n) + " = 1" : "");
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace dynatomic
