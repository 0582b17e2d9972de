#pragma once

#include <cstddef>
#include <vector>

#include "dynatomic/dynamics.hpp"
#include "dynatomic/polynomial.hpp"
#include "dynatomic/verdict.hpp"

namespace dynatomic {

/// Res_x(p, delta) over Z[c] for p monic in Z[x], as the determinant of
/// multiplication by delta modulo p.
IntPoly resultant_with_monic(const IntPoly& p, const BiPoly& delta);

struct DeltaInvariant {
  unsigned n = 0;
  unsigned m = 0;
  IntPoly value;
  bool diagonal = false;
};

/// Delta_{n,m} = Res_x(cyc_{n/m}, delta_m) for m < n; for m = n the value is
/// delta_n(1) divided exactly by the product of the proper invariants.
DeltaInvariant delta_nm(const Family& fam, unsigned n, unsigned m);

/// Result of rewriting p as an integer polynomial in t = kappa c^stride.
struct Rescaled {
  BiPoly psi;           // main variable x, coefficients in t (tagged 'C')
  std::size_t t_degree = 0;
  IntPoly t_leading;    // coefficient of the top power of t, a polynomial in x
  int monic_sign = 0;   // +1 or -1 when t_leading is that constant, else 0
};

/// Checks that prefactor * p has only c-exponents divisible by `stride` and
/// that the coefficient of c^(stride i) is divisible by kappa^i, then returns
/// the quotient polynomial in t. Throws NotInSubring otherwise.
Rescaled rescale_extract(const BiPoly& p, const Integer& kappa, unsigned stride,
                         const Integer& prefactor = Integer(1));
Rescaled rescale_extract(const IntPoly& p, const Integer& kappa, unsigned stride,
                         const Integer& prefactor = Integer(1));
/// The family's own rescaling of delta_m: t = d^d c^(d-1), dc or (dc)^d with
/// the matching power-of-d prefactor.
Rescaled rescale_extract(const BiPoly& delta, const Family& fam, unsigned m);

/// Integrality of delta_m in the family's subring and monicness in t; for
/// unicritical maps the sign (-1)^(d_m/m + d_m(d-1)) is checked as stated.
Verdict delta_monic_check(const Family& fam, unsigned m);

/// Unicritical: Delta_{n,m} = Psi(d^d c^(d-1)) with Psi integral and monic
/// up to sign. The sign is compared with both phi(n) and phi(n/m) in the
/// exponent; the verdict records which one matches.
Verdict psi_monic_check(const Family& fam, unsigned n, unsigned m);

/// Res_z(Phi*_n, Phi*_m) = +-Delta_{n,m}^m, recording the observed sign.
Verdict morton_vivaldi_check(const Family& fam, unsigned n, unsigned m);

/// Degree formulas deg_c Delta_{n,m} = phi(n/m) d_m / 2 and the diagonal
/// degree d_n/2 - sum over proper m, for z^2 + c.
Verdict delta_degree_check(unsigned n);

/// Delta_{n,m} of degree one in c for z^2 + c with n <= n_max.
std::vector<DeltaInvariant> degree_one_deltas(unsigned n_max);

/// Auxiliary polynomials for z^(d+1) + cz and its conjugate
/// ft(z) = z^(d+1) - c z^d + c.
struct AuxPolys {
  unsigned d = 0, k = 0, m = 0;
  BiPoly F_k;   // prod_{i<k} ft^i(z) - 1
  BiPoly P_m;   // prod_{i<m} ((d+1) ft^i(z) - dc) = (d+1)^m calF_m(-dc/(d+1), z)
  BiPoly R_km;  // Res_z(F_k, x - P_m)
};
AuxPolys aux_polys(unsigned d, unsigned k, unsigned m);

/// Permutation of Z(F_k) by ft, deg_c F_k, integrality and monicness of
/// d^(m((d+1)^(k-1)-1)/d) R_{k,m} in dc, and its c-leading term (the sign
/// exponent is reported, and mismatches are failures of that verdict only).
std::vector<Verdict> aux_nonunicritical(unsigned d, unsigned k, unsigned m);

/// Res_z(f^k - z, x - (f^m)') = (x - c^m) R_{k,m}^d for f = z^(d+1) + cz.
Verdict resultant_factorization_check(unsigned d, unsigned k, unsigned m);

/// delta_m^m = (x - c^m)^[m=1] (prod_{k|m} R_{k,m}^mu(m/k))^d.
Verdict global_delta_identity(unsigned d, unsigned m);

/// deg_c Res_z(F_k, x - calF_m(y, z)) = m((d+1)^(k-1) - 1)/d, with y a
/// further indeterminate.
Verdict calf_degree_check(unsigned d, unsigned k, unsigned m);

/// The shifted-family analogues with H_k = (F_k + 1)^d - 1 and
/// Rt_{k,m} = Res_z(H_k, x - (F_k + 1)^(d-1) P_m): integrality after
/// d^(m((d+1)^(k-1)-1)), the leading coefficient in c, deg_c, and
/// deltat_m^m = (x - c^(md))^[m=1] prod Rt^mu.
std::vector<Verdict> aux_shifted(unsigned d, unsigned k, unsigned m);

/// delta_1 of z^(d+2) + cz^2 against x((x-(d+2))^(d+1) + c(-cd)^d(x-2)),
/// then the c-leading term of Delta_{n,1} = Res(cyc_n, delta_1) for each n.
std::vector<Verdict> quadcrit_delta1(unsigned d, const std::vector<unsigned>& ns);

/// cyc_n(2) has a prime factor q = 1 mod n for 2 <= n <= n_max, n != 6, so
/// the leading coefficients above are not +-1 (Bang).
std::vector<Verdict> bang_check(unsigned n_max);

/// prod_{e|l} Phi*_{f,en} = Phi*_{f^l,n} for coprime l, n.
Verdict iterate_product_check(const BiPoly& map, unsigned l, unsigned n);

/// For k | m, with mt the k-part of m and mp = m/mt, checks modulo Phi*_k
/// that prod_{e|mt} Phi*_{f,e mp} = Phi*_{f^mt, mp} = cyc_mp(lambda^(mt/k)),
/// lambda being the chain-rule multiplier reduced mod Phi*_k. When mp = 1
/// the left side vanishes identically; the limit form (f^mt)' - 1 =
/// lambda^(mt/k) - 1 is checked instead and the defect is recorded.
Verdict dynatomic_equality_check(const BiPoly& map, unsigned k, unsigned m);

}  // namespace dynatomic
