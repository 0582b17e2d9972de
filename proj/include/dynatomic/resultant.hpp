#pragma once

// Resultants over the coefficient rings used here.
//
//   resultant_sylvester   fraction-free elimination on the Sylvester matrix
//                         over any exact ring; this is the reference path.
//   interp_resultant      specialize c at consecutive integers, take integer
//                         (or Z[x]) Sylvester determinants, interpolate.
//   charpoly_resultant    Res_z(F, x - G) for monic F as det(x - M_G) with
//                         M_G the multiplication-by-G matrix modulo F.
//
// Convention: Res(F, G) = lc(F)^deg G * prod_{F(a)=0} G(a).

#include <cstddef>
#include <utility>
#include <vector>

#include "dynatomic/polynomial.hpp"

namespace dynatomic {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Determinant by Bareiss elimination with row swaps. `one` supplies the
/// multiplicative identity (it carries nested variable tags for polynomial
/// rings) and is returned for the empty matrix.
template <class R>
R bareiss_determinant(Matrix<R> a, const R& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  R prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t i = k + 1;
      while (i < n && is_zero(a[i][k])) ++i;
      if (i == n) return one - one;
      std::swap(a[i], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = a[i][j] * a[k][k];
        t -= a[i][k] * a[k][j];
        a[i][j] = exact_div(t, prev);
      }
    }
    prev = a[k][k];
  }
  R det = a[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

/// Sylvester matrix of two coefficient vectors (index = exponent) taken at
/// the given formal degrees; leading entries may be zero. Keeping formal
/// degrees makes the determinant commute with specialization.
template <class R>
Matrix<R> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g,
                           const R& zero) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  Matrix<R> s(size, std::vector<R>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g[n - j];
  return s;
}

template <class R>
std::vector<R> coefficient_vector(const Polynomial<R>& p) {
  return {p.coefficients().begin(), p.coefficients().end()};
}

template <class R>
R resultant_sylvester(const Polynomial<R>& f, const Polynomial<R>& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with zero polynomial");
  const R one = f.one_coefficient();
  const R zero = f.zero_like();
  return bareiss_determinant(
      sylvester_matrix(coefficient_vector(f), coefficient_vector(g), zero), one);
}

/// Matrix of multiplication by g on R[z]/(f), f monic, in the basis
/// 1, z, ..., z^{N-1}; column j holds z^j g mod f.
template <class R>
Matrix<R> multiplication_matrix(const Polynomial<R>& f, const Polynomial<R>& g) {
  if (f.is_zero() || !(f.leading() == f.one_coefficient()))
    throw Error("multiplication matrix needs a monic modulus");
  const std::size_t n = f.size() - 1;
  const R zero = f.zero_like();
  Matrix<R> m(n, std::vector<R>(n, zero));
  Polynomial<R> col = rem_monic(g, f);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coefficient(i);
    if (j + 1 < n) col = rem_monic(col.shift(1), f);
  }
  return m;
}

/// Res(f, g) for monic f as det of multiplication by g modulo f.
template <class R>
R resultant_multiplication(const Polynomial<R>& f, const Polynomial<R>& g) {
  if (g.is_zero()) throw ZeroPolynomial("resultant with zero polynomial");
  return bareiss_determinant(multiplication_matrix(f, g), f.one_coefficient());
}

/// Res_z(f, x - g) = det(x I - M_g) computed symbolically over R[x].
template <class R>
Polynomial<R> charpoly_resultant(const Polynomial<R>& f, const Polynomial<R>& g,
                                 char xvar = 'x') {
  Matrix<R> m = multiplication_matrix(f, g);
  const std::size_t n = m.size();
  const R one = f.one_coefficient();
  Matrix<Polynomial<R>> a(n, std::vector<Polynomial<R>>(n, Polynomial<R>(xvar)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Polynomial<R>::constant(-m[i][j], xvar);
      if (i == j) a[i][j] += Polynomial<R>::monomial(one, 1, xvar);
    }
  return bareiss_determinant(std::move(a), Polynomial<R>::constant(one, xvar));
}

/// Embed g(z) over Z[c] as a polynomial over Z[c][x] constant in x.
TriPoly lift_to_x(const BiPoly& g);

/// The polynomial x - g(z) in Z[c][x][z].
TriPoly x_minus(const BiPoly& g);

/// Res_z(f, x - g) by Sylvester elimination over Z[c][x]; the reference
/// path for the two faster ones.
BiPoly resultant_x_minus_sylvester(const BiPoly& f, const BiPoly& g);

/// Evaluation-interpolation resultant. Values at c = 0..bound_c are
/// interpolated, and the result is re-checked at c = bound_c + 1; a
/// mismatch raises BoundTooSmall.
IntPoly interp_resultant(const BiPoly& f, const BiPoly& g, std::size_t bound_c);
BiPoly interp_resultant(const TriPoly& f, const TriPoly& g, std::size_t bound_c);

/// Res_z(f, x - g) for f monic in z over Z[c]. Each node c = 0..B goes
/// through the modular characteristic polynomial; B = deg g * deg_c f +
/// deg f * deg_c g bounds the c-degree via the Sylvester matrix, so the
/// interpolant is exact without a degree guess.
BiPoly charpoly_resultant_interp(const BiPoly& f, const BiPoly& g, char xvar = 'x');

}  // namespace dynatomic
