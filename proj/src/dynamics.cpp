#include "dynatomic/dynamics.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "dynatomic/interpolate.hpp"
#include "dynatomic/modular.hpp"
#include "dynatomic/numtheory.hpp"
#include "dynatomic/parallel.hpp"
#include "dynatomic/resultant.hpp"

namespace dynatomic {

namespace {

IntPoly cpoly(std::initializer_list<long> cs) { return int_poly(cs, 'c'); }

BiPoly z_poly() { return BiPoly::monomial(cpoly({1}), 1, 'z'); }

std::atomic<bool> g_allow_large{false};

unsigned to_unsigned(const Integer& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) throw std::overflow_error("value out of range");
  return static_cast<unsigned>(v.get_ui());
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::unicritical: return "unicritical";
    case FamilyKind::linear_term: return "linearterm";
    case FamilyKind::shifted: return "shifted";
    case FamilyKind::quad_crit: return "quadcrit";
  }
  return "?";
}

FamilyKind parse_family(std::string_view name) {
  for (auto k : {FamilyKind::unicritical, FamilyKind::linear_term, FamilyKind::shifted,
                 FamilyKind::quad_crit})
    if (family_name(k) == name) return k;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

Family::Family(FamilyKind kind, unsigned d) : kind_(kind), d_(d) {
  const unsigned min_d = kind == FamilyKind::unicritical ? 2 : 1;
  if (d < min_d) throw std::invalid_argument("degree parameter too small for family");
  const BiPoly c_const = BiPoly::constant(cpoly({0, 1}), 'z');
  switch (kind) {
    case FamilyKind::unicritical:
      map_ = BiPoly::monomial(cpoly({1}), d, 'z') + c_const;
      break;
    case FamilyKind::linear_term:
      map_ = BiPoly::monomial(cpoly({1}), d + 1, 'z') + BiPoly::monomial(cpoly({0, 1}), 1, 'z');
      break;
    case FamilyKind::shifted: {
      BiPoly expanded = BiPoly::monomial(cpoly({1}), d + 1, 'z') -
                        BiPoly::monomial(cpoly({0, 1}), d, 'z') + c_const;
      BiPoly factored = (z_poly() - c_const) * BiPoly::monomial(cpoly({1}), d, 'z') + c_const;
      if (!(expanded == factored)) throw std::logic_error("shifted family spellings differ");
      map_ = factored;
      break;
    }
    case FamilyKind::quad_crit:
      map_ = BiPoly::monomial(cpoly({1}), d + 2, 'z') + BiPoly::monomial(cpoly({0, 1}), 2, 'z');
      break;
  }
}

unsigned Family::degree() const { return static_cast<unsigned>(*map_.degree()); }

std::string Family::label() const {
  return std::string(family_name(kind_)) + " d=" + std::to_string(d_);
}

std::optional<Family::Rescale> Family::rescale() const {
  const Integer dd(d_);
  switch (kind_) {
    case FamilyKind::unicritical: return Rescale{pow(dd, d_), d_ - 1};
    case FamilyKind::linear_term: return Rescale{dd, 1};
    case FamilyKind::shifted: return Rescale{pow(dd, d_), d_};
    case FamilyKind::quad_crit: return std::nullopt;
  }
  return std::nullopt;
}

unsigned Family::prefactor_exponent(unsigned m) const {
  switch (kind_) {
    case FamilyKind::unicritical:
    case FamilyKind::quad_crit:
      return 0;
    case FamilyKind::linear_term:
      return to_unsigned(moebius_degree(d_ + 1, m) / (d_ + 1));
    case FamilyKind::shifted:
      return (m == 1 ? d_ - 1 : 0) + to_unsigned(moebius_degree(d_ + 1, m) / (d_ + 1));
  }
  return 0;
}

std::size_t Family::delta_degree_estimate(unsigned m) const {
  const std::size_t dm = to_unsigned(moebius_degree(degree(), m));
  switch (kind_) {
    case FamilyKind::unicritical: return (d_ - 1) * dm / d_;
    case FamilyKind::linear_term: return dm;
    case FamilyKind::shifted: return dm + (m == 1 ? d_ - 1 : 0);
    case FamilyKind::quad_crit: return (dm * (d_ + 1) + d_ - 1) / d_;
  }
  return dm;
}

void set_allow_large(bool allow) { g_allow_large = allow; }
bool allow_large() { return g_allow_large; }

void check_guardrail(const Family& fam, unsigned n) {
  if (allow_large()) return;
  Integer dn = moebius_degree(fam.degree(), n);
  if (dn > static_cast<unsigned long>(kDefaultMaxDynatomicDegree))
    throw GuardrailViolation(fam.label() + " period " + std::to_string(n) +
                             ": dynatomic degree " + dn.get_str() + " exceeds " +
                             std::to_string(kDefaultMaxDynatomicDegree) +
                             " (pass --allow-large to override)");
}

BiPoly iterate(const BiPoly& map, unsigned k) {
  BiPoly acc = BiPoly::monomial(map.one_coefficient(), 1, map.var());
  for (unsigned i = 0; i < k; ++i) acc = compose(map, acc);
  return acc;
}

BiPoly iterate(const Family& fam, unsigned k) { return iterate(fam.map(), k); }

DynatomicResult dynatomic_polynomial(const BiPoly& map, unsigned n) {
  if (n == 0) throw std::invalid_argument("period must be positive");
  const BiPoly z = BiPoly::monomial(map.one_coefficient(), 1, map.var());
  BiPoly num = one_like(z), den = one_like(z);
  BiPoly it = z;
  unsigned done = 0;
  for (auto k : divisors(n)) {
    while (done < k) {
      it = compose(map, it);
      ++done;
    }
    int mu = mobius(n / k);
    if (mu > 0) num *= it - z;
    if (mu < 0) den *= it - z;
  }
  DynatomicResult r;
  r.n = n;
  r.phi_star = exact_div(num, den);
  r.degree_z = *r.phi_star.degree();
  return r;
}

DynatomicResult dynatomic_polynomial(const Family& fam, unsigned n) {
  check_guardrail(fam, n);
  return dynatomic_polynomial(fam.map(), n);
}

BiPoly multiplier_derivative(const BiPoly& map, unsigned m) {
  const BiPoly fp = derivative(map);
  BiPoly it = BiPoly::monomial(map.one_coefficient(), 1, map.var());
  BiPoly acc = one_like(it);
  for (unsigned i = 0; i < m; ++i) {
    acc *= compose(fp, it);
    if (i + 1 < m) it = compose(map, it);
  }
  return acc;
}

BiPoly multiplier_derivative(const Family& fam, unsigned m) {
  return multiplier_derivative(fam.map(), m);
}

namespace {

template <class R>
Polynomial<R> powmod(Polynomial<R> base, unsigned e, const Polynomial<R>& mod) {
  Polynomial<R> acc = rem_monic(one_like(base), mod);
  base = rem_monic(base, mod);
  while (e != 0) {
    if (e & 1U) acc = rem_monic(acc * base, mod);
    e >>= 1U;
    if (e != 0) base = rem_monic(base * base, mod);
  }
  return acc;
}

/// (f^m)' reduced modulo F = f^k - z for k | m. On roots of F the orbit
/// has period dividing k, so the chain-rule product over m steps is the
/// (m/k)-th power of the product over k steps.
template <class R>
Polynomial<R> multiplier_mod(const Polynomial<R>& f, const Polynomial<R>& fk_minus_z,
                             unsigned k, unsigned m) {
  const Polynomial<R> fp = derivative(f);
  Polynomial<R> y = rem_monic(Polynomial<R>::monomial(f.one_coefficient(), 1, f.var()),
                              fk_minus_z);
  Polynomial<R> w = rem_monic(one_like(y), fk_minus_z);
  for (unsigned i = 0; i < k; ++i) {
    w = rem_monic(w * compose_mod(fp, y, fk_minus_z), fk_minus_z);
    if (i + 1 < k) y = compose_mod(f, y, fk_minus_z);
  }
  return powmod(w, m / k, fk_minus_z);
}

IntPoly node_delta(const IntPoly& f, unsigned m) {
  const IntPoly z = IntPoly::monomial(Integer(1), 1, f.var());
  const IntPoly fp = derivative(f);
  IntPoly num = IntPoly::constant(Integer(1), 'x');
  IntPoly den = num;
  IntPoly it = z;
  unsigned done = 0;
  for (auto k : divisors(m)) {
    while (done < k) {
      it = compose(f, it);
      ++done;
    }
    const int mu = mobius(m / k);
    if (mu == 0) continue;
    const IntPoly fk = it - z;
    const IntPoly w = multiplier_mod(f, fk, k, m);
    // every eigenvalue is prod f'(orbit point) with orbit points roots of fk
    const Integer step = abs_value_bound(fp, root_modulus_bound(fk));
    const Integer eigen = pow(step, m);
    IntPoly res = charpoly_resultant_modular(fk, w, eigen);
    if (mu > 0)
      num *= res;
    else
      den *= res;
  }
  return nth_root(exact_div(num, den), m);
}

using CacheKey = std::tuple<int, unsigned, unsigned>;

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}
std::map<CacheKey, MultiplierResult>& cache() {
  static std::map<CacheKey, MultiplierResult> c;
  return c;
}

}  // namespace

IntPoly multiplier_poly_at(const Family& fam, unsigned m, const Integer& c) {
  check_guardrail(fam, m);
  return node_delta(specialize(fam.map(), c), m);
}

MultiplierResult multiplier_poly(const Family& fam, unsigned m) {
  if (m == 0) throw std::invalid_argument("period must be positive");
  check_guardrail(fam, m);
  const CacheKey key{static_cast<int>(fam.kind()), fam.d(), m};
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache().find(key); it != cache().end()) return it->second;
  }

  std::vector<IntPoly> values;
  auto extend = [&](std::size_t count) {
    const std::size_t start = values.size();
    if (count <= start) return;
    values.resize(count);
    parallel_for(count - start, [&](std::size_t i) {
      const std::size_t node = start + i;
      values[node] = node_delta(specialize(fam.map(), Integer(static_cast<unsigned long>(node))), m);
    });
  };

  std::size_t bound = fam.delta_degree_estimate(m);
  constexpr std::size_t kExtraChecks = 2;
  for (;;) {
    extend(bound + 1 + kExtraChecks);
    BiPoly delta = interpolate_consecutive(std::span<const IntPoly>(values.data(), bound + 1), 'c', 'x');
    bool ok = true;
    for (std::size_t j = bound + 1; j < bound + 1 + kExtraChecks && ok; ++j)
      ok = specialize(delta, Integer(static_cast<unsigned long>(j))) == values[j];
    if (ok) {
      MultiplierResult r;
      r.m = m;
      r.delta = std::move(delta);
      r.prefactor_exponent = fam.prefactor_exponent(m);
      r.prefactor = pow(Integer(fam.d()), r.prefactor_exponent);
      r.nodes = values.size();
      std::lock_guard lock(cache_mutex());
      return cache().emplace(key, r).first->second;
    }
    bound = 2 * bound + 1;
    if (bound > 1U << 14) throw BoundTooSmall("interpolation bound did not stabilize");
  }
}

BiPoly multiplier_poly_symbolic(const Family& fam, unsigned m) {
  check_guardrail(fam, m);
  const BiPoly& f = fam.map();
  const BiPoly z = z_poly();
  BiPoly num = BiPoly::constant(cpoly({1}), 'x');
  BiPoly den = num;
  BiPoly it = z;
  unsigned done = 0;
  for (auto k : divisors(m)) {
    while (done < k) {
      it = compose(f, it);
      ++done;
    }
    const int mu = mobius(m / k);
    if (mu == 0) continue;
    const BiPoly fk = it - z;
    BiPoly res = charpoly_resultant(fk, multiplier_mod(f, fk, k, m), 'x');
    if (mu > 0)
      num *= res;
    else
      den *= res;
  }
  return nth_root(exact_div(num, den), m);
}

Verdict conjugacy_check(unsigned d, unsigned k) {
  Verdict v = make_verdict("conjugacy");
  v.param("d", d).param("k", k);
  const Family f = Family::linear_term(d);
  const Family ft = Family::shifted(d);
  const BiPoly tau_d = BiPoly::monomial(cpoly({1}), d, 'z') + BiPoly::constant(cpoly({0, 1}), 'z');

  std::vector<std::string> failures;
  BiPoly diff = compose(tau_d, f.map()) - compose(ft.map(), tau_d);
  if (!diff.is_zero()) failures.push_back("square: " + to_string(diff));

  const BiPoly z = z_poly();
  const IntPoly dc = cpoly({0, static_cast<long>(d)});
  for (unsigned m = 1; m <= k; ++m) {
    BiPoly prod = BiPoly::constant(cpoly({1}), 'z');
    BiPoly cleared_prod = prod;
    // calF_m(y, z) = prod_{i<m} (y + ft^i(z)), a polynomial in y over Z[c][z]
    TriPoly calF = TriPoly::constant(prod, 'y');
    BiPoly fi = z;
    for (unsigned i = 0; i < m; ++i) {
      prod *= fi;
      cleared_prod *= fi.scale(cpoly({static_cast<long>(d + 1)})) - BiPoly::constant(dc, 'z');
      calF *= TriPoly({fi, BiPoly::constant(cpoly({1}), 'z')}, 'y');
      fi = compose(ft.map(), fi);
    }
    BiPoly fm = iterate(f, m);
    BiPoly want = z * compose(prod, tau_d);
    if (!(fm == want)) failures.push_back("iterate m=" + std::to_string(m) + ": " + to_string(fm - want));

    // (d+1)^m calF_m(-dc/(d+1), z) = sum_j (-dc)^j (d+1)^(m-j) [y^j] calF_m
    BiPoly cleared('z');
    for (std::size_t j = 0; j < calF.size(); ++j) {
      IntPoly scale = pow(cpoly({0, -static_cast<long>(d)}), static_cast<unsigned>(j));
      scale = scale.scale(pow(Integer(d + 1), static_cast<unsigned long>(m - j)));
      cleared += calF[j].scale(scale);
    }
    if (!(cleared == cleared_prod))
      failures.push_back("clearing m=" + std::to_string(m) + ": " + to_string(cleared - cleared_prod));
    BiPoly deriv = multiplier_derivative(f, m);
    BiPoly rhs = compose(cleared, tau_d);
    if (!(deriv == rhs))
      failures.push_back("derivative m=" + std::to_string(m) + ": " + to_string(deriv - rhs));
    if (!(deriv == derivative(fm)))
      failures.push_back("chain rule m=" + std::to_string(m));
  }
  v.pass = failures.empty();
  v.residual = v.pass ? "0" : failures.front();
  v.witness = std::to_string(failures.size()) + " failing identities";
  return v;
}

}  // namespace dynatomic
