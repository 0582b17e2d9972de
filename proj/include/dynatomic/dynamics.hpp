#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dynatomic/polynomial.hpp"
#include "dynatomic/verdict.hpp"

namespace dynatomic {

enum class FamilyKind {
  unicritical,  // z^d + c
  linear_term,  // z^(d+1) + c z
  shifted,      // (z - c) z^d + c
  quad_crit,    // z^(d+2) + c z^2
};

std::string_view family_name(FamilyKind kind);
/// Accepts "unicritical", "linearterm", "shifted", "quadcrit".
FamilyKind parse_family(std::string_view name);

/// One of the four one-parameter families, with its map as a polynomial in
/// z over Z[c].
class Family {
 public:
  Family(FamilyKind kind, unsigned d);

  static Family unicritical(unsigned d) { return {FamilyKind::unicritical, d}; }
  static Family linear_term(unsigned d) { return {FamilyKind::linear_term, d}; }
  static Family shifted(unsigned d) { return {FamilyKind::shifted, d}; }
  static Family quad_crit(unsigned d) { return {FamilyKind::quad_crit, d}; }

  FamilyKind kind() const { return kind_; }
  unsigned d() const { return d_; }
  const BiPoly& map() const { return map_; }
  /// deg_z of the map: d, d+1, d+1 or d+2.
  unsigned degree() const;
  std::string label() const;

  /// The integrality claims rewrite delta_m in t = kappa * c^stride.
  struct Rescale {
    Integer kappa;
    unsigned stride;
  };
  /// nullopt for quad_crit, which has no such claim.
  std::optional<Rescale> rescale() const;

  /// Exponent e such that d^e delta_m lies in Z[t, x]: 0 for unicritical,
  /// d_m/(d+1) for linear_term, (d-1)[m=1] + d_m/(d+1) for shifted.
  unsigned prefactor_exponent(unsigned m) const;

  /// Upper estimate for deg_c delta_m used to seed interpolation.
  std::size_t delta_degree_estimate(unsigned m) const;

 private:
  FamilyKind kind_;
  unsigned d_;
  BiPoly map_;
};

/// Degree guardrail on deg_z of the period-n dynatomic polynomial.
inline constexpr std::size_t kDefaultMaxDynatomicDegree = 64;
void set_allow_large(bool allow);
bool allow_large();
/// Throws GuardrailViolation if d_n exceeds the limit and large runs are off.
void check_guardrail(const Family& fam, unsigned n);

/// i-fold composition; the 0-th iterate is z.
BiPoly iterate(const BiPoly& map, unsigned k);
BiPoly iterate(const Family& fam, unsigned k);

struct DynatomicResult {
  unsigned n = 0;
  BiPoly phi_star;
  std::size_t degree_z = 0;
};

/// prod_{k | n} (f^k(z) - z)^mu(n/k): numerator and denominator products
/// are formed separately and divided once.
DynatomicResult dynatomic_polynomial(const BiPoly& map, unsigned n);
DynatomicResult dynatomic_polynomial(const Family& fam, unsigned n);

/// (f^m)'(z) as the chain-rule product prod_{i<m} f'(f^i(z)).
BiPoly multiplier_derivative(const BiPoly& map, unsigned m);
BiPoly multiplier_derivative(const Family& fam, unsigned m);

struct MultiplierResult {
  unsigned m = 0;
  BiPoly delta;                  // monic in x, coefficients in Z[c]
  unsigned prefactor_exponent = 0;  // d^e * delta is the integral rescaled form
  Integer prefactor = 1;            // d^e
  std::size_t nodes = 0;            // interpolation nodes used
};

/// delta_m with delta_m^m = prod_{k | m} Res_z(f^k - z, x - (f^m)')^mu(m/k).
/// Each integer node c = 0, 1, ... is handled exactly in Z[x] (Moebius
/// quotient, then m-th root); the x-coefficients are interpolated in c and
/// re-checked at two further nodes, doubling the degree bound on mismatch.
/// Results are cached per (family, d, m).
MultiplierResult multiplier_poly(const Family& fam, unsigned m);

/// The same polynomial through symbolic resultants over Z[c][x]; slow, used
/// as a cross-check on small cases.
BiPoly multiplier_poly_symbolic(const Family& fam, unsigned m);

/// delta_m specialized at one integer c, computed directly at that node.
IntPoly multiplier_poly_at(const Family& fam, unsigned m, const Integer& c);

/// Symbolic checks of the conjugacy z^d + c between z^(d+1) + cz and
/// z^(d+1) - cz^d + c up to iterate k: the commuting square, the product
/// formula for f^k, and the product formula for (f^k)'.
Verdict conjugacy_check(unsigned d, unsigned k);

}  // namespace dynatomic
