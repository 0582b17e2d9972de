#pragma once

// Dense univariate polynomials over an exact ring.
//
// Polynomial<R> is instantiated recursively: Polynomial<Integer> is Z[c]
// (or Z[x], Z[z] after specialization), Polynomial<Polynomial<Integer>> is
// Z[c][x] or Z[c][z], and one more level gives Z[c][x][z]. The coefficient
// ring only has to provide the free functions declared below for Integer
// (is_zero, exact_div, exact_div_integer, one_like, from_integer).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dynatomic/errors.hpp"

namespace dynatomic {

using Integer = mpz_class;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw DivisionNotExact("integer division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw DivisionNotExact("integer " + a.get_str() + " not divisible by " +
                           b.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer exact_div_integer(const Integer& a, const Integer& n) {
  return exact_div(a, n);
}

inline Integer one_like(const Integer&) { return Integer(1); }
inline Integer from_integer(const Integer& n, const Integer&) { return n; }
inline Integer scale_integer(const Integer& a, const Integer& n) {
  return a * n;
}

template <class R>
class Polynomial;
template <class R>
bool is_zero(const Polynomial<R>& p);
template <class R>
Polynomial<R> one_like(const Polynomial<R>& p);

template <class R>
class Polynomial {
 public:
  using coefficient_type = R;

  Polynomial() = default;
  explicit Polynomial(char var) : var_(var) {}
  Polynomial(std::vector<R> coeffs, char var = 'x')
      : coeffs_(std::move(coeffs)), var_(var) {
    normalize();
  }
  Polynomial(std::initializer_list<R> coeffs, char var = 'x')
      : coeffs_(coeffs), var_(var) {
    normalize();
  }

  static Polynomial constant(R value, char var = 'x') {
    return Polynomial(std::vector<R>{std::move(value)}, var);
  }
  static Polynomial monomial(R value, std::size_t exponent, char var = 'x') {
    std::vector<R> c(exponent + 1);
    c[exponent] = std::move(value);
    return Polynomial(std::move(c), var);
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  /// Number of stored coefficients; 0 for the zero polynomial.
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of var^i, zero past the degree.
  R coefficient(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return zero_like();
  }
  const R& operator[](std::size_t i) const { return coeffs_[i]; }
  const R& leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of zero");
    return coeffs_.back();
  }
  std::span<const R> coefficients() const { return coeffs_; }

  char var() const { return var_; }
  Polynomial with_var(char var) const {
    Polynomial p = *this;
    p.var_ = var;
    return p;
  }

  /// A zero of the coefficient ring carrying the same nested variable tags.
  R zero_like() const {
    if constexpr (std::is_same_v<R, Integer>) {
      return Integer(0);
    } else {
      if (!coeffs_.empty()) return R(coeffs_[0].var());
      return R();
    }
  }
  R one_coefficient() const {
    if (!coeffs_.empty()) return one_like(coeffs_[0]);
    return one_like(R());
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
      coeffs_.resize(o.coeffs_.size(), o.zero_like());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
      coeffs_.resize(o.coeffs_.size(), o.zero_like());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.var_);
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_like());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero_coeff(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out), a.var_);
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiply every coefficient by a ring element.
  Polynomial scale(const R& s) const {
    std::vector<R> out = coeffs_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out), var_);
  }
  /// Multiply by var^k.
  Polynomial shift(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<R> out(k, zero_like());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out), var_);
  }

 private:
  static bool is_zero_coeff(const R& r) { return dynatomic::is_zero(r); }
  void normalize() {
    while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  char var_ = 'x';
};

using IntPoly = Polynomial<Integer>;
using BiPoly = Polynomial<IntPoly>;
using TriPoly = Polynomial<BiPoly>;

template <class R>
bool is_zero(const Polynomial<R>& p) {
  return p.is_zero();
}

template <class R>
Polynomial<R> one_like(const Polynomial<R>& p) {
  return Polynomial<R>::constant(p.one_coefficient(), p.var());
}

template <class R>
Polynomial<R> from_integer(const Integer& n, const Polynomial<R>& like) {
  if (sgn(n) == 0) return Polynomial<R>(like.var());
  return Polynomial<R>::constant(from_integer(n, like.one_coefficient()),
                                 like.var());
}

template <class R>
Polynomial<R> scale_integer(const Polynomial<R>& p, const Integer& n) {
  std::vector<R> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : out) c = scale_integer(c, n);
  return Polynomial<R>(std::move(out), p.var());
}

/// Coefficientwise exact division by an integer.
template <class R>
Polynomial<R> exact_div_integer(const Polynomial<R>& p, const Integer& n) {
  std::vector<R> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(exact_div_integer(c, n));
  return Polynomial<R>(std::move(out), p.var());
}

/// Quotient q with a = b*q, raising DivisionNotExact if b does not divide a.
template <class R>
Polynomial<R> exact_div(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw DivisionNotExact("polynomial division by zero");
  if (a.is_zero()) return Polynomial<R>(a.var());
  if (a.size() < b.size())
    throw DivisionNotExact("dividend degree below divisor degree");
  std::vector<R> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t db = b.size() - 1;
  std::vector<R> q(a.size() - db, a.zero_like());
  const R& lc = b.leading();
  for (std::size_t i = q.size(); i-- > 0;) {
    R& top = rem[i + db];
    if (is_zero(top)) continue;
    q[i] = exact_div(top, lc);
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q[i] * b[j];
  }
  for (const auto& r : rem)
    if (!is_zero(r)) throw DivisionNotExact("nonzero remainder in exact division");
  return Polynomial<R>(std::move(q), a.var());
}

/// Remainder of a modulo a monic b.
template <class R>
Polynomial<R> rem_monic(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw ZeroPolynomial("reduction modulo zero");
  if (a.size() < b.size()) return a;
  std::vector<R> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t db = b.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (is_zero(rem[i])) continue;
    R t = rem[i];
    for (std::size_t j = 0; j < db; ++j) rem[i - db + j] -= t * b[j];
    rem[i] = a.zero_like();
  }
  rem.resize(db, a.zero_like());
  return Polynomial<R>(std::move(rem), a.var());
}

template <class R>
Polynomial<R> pow(const Polynomial<R>& p, unsigned e) {
  Polynomial<R> result = one_like(p);
  Polynomial<R> base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

inline Integer pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// p(v) by Horner's rule, v in the coefficient ring.
template <class R>
R evaluate(const Polynomial<R>& p, const R& v) {
  R acc = p.zero_like();
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= v;
    acc += p[i];
  }
  return acc;
}

/// outer(inner), both over the same coefficient ring.
template <class R>
Polynomial<R> compose(const Polynomial<R>& outer, const Polynomial<R>& inner) {
  Polynomial<R> acc(inner.var());
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc *= inner;
    acc += Polynomial<R>::constant(outer[i], inner.var());
  }
  return acc;
}

/// outer(inner) mod modulus (monic), reducing after every Horner step.
template <class R>
Polynomial<R> compose_mod(const Polynomial<R>& outer, const Polynomial<R>& inner,
                          const Polynomial<R>& modulus) {
  Polynomial<R> acc(inner.var());
  for (std::size_t i = outer.size(); i-- > 0;) {
    acc = rem_monic(acc * inner, modulus);
    acc += Polynomial<R>::constant(outer[i], inner.var());
  }
  return rem_monic(acc, modulus);
}

template <class R>
Polynomial<R> derivative(const Polynomial<R>& p) {
  if (p.size() <= 1) return Polynomial<R>(p.var());
  std::vector<R> out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i)
    out.push_back(scale_integer(p[i], Integer(static_cast<unsigned long>(i))));
  return Polynomial<R>(std::move(out), p.var());
}

/// Polynomial<S> -> Polynomial<T> by applying fn to every coefficient.
template <class S, class Fn>
auto map_coefficients(const Polynomial<S>& p, Fn&& fn, char var)
    -> Polynomial<std::invoke_result_t<Fn, const S&>> {
  using T = std::invoke_result_t<Fn, const S&>;
  std::vector<T> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(fn(c));
  return Polynomial<T>(std::move(out), var);
}

/// Substitute an integer for c in every coefficient.
template <class R>
auto specialize(const Polynomial<R>& p, const Integer& c) {
  if constexpr (std::is_same_v<R, Integer>) {
    return evaluate(p, c);
  } else {
    return map_coefficients(
        p, [&](const R& coef) { return specialize(coef, c); }, p.var());
  }
}

/// Lift a polynomial over R to one over Polynomial<R> with constant
/// coefficients (e.g. cyc_n in Z[x] seen inside Z[c][x]).
template <class R>
Polynomial<Polynomial<R>> lift_constant_coefficients(const Polynomial<R>& p,
                                                     char inner_var) {
  return map_coefficients(
      p, [&](const R& coef) { return Polynomial<R>::constant(coef, inner_var); },
      p.var());
}

/// The unique monic r with r^n == p. p must be monic of degree divisible by
/// n. Coefficients are matched from the top down, then r^n is re-expanded.
template <class R>
Polynomial<R> nth_root(const Polynomial<R>& p, unsigned n) {
  if (n == 0) throw NotPerfectPower("zeroth root requested");
  if (p.is_zero()) throw NotPerfectPower("root of zero polynomial");
  if (n == 1) return p;
  const R one = p.one_coefficient();
  if (!(p.leading() == one)) throw NotPerfectPower("polynomial is not monic");
  const std::size_t deg = p.size() - 1;
  if (deg % n != 0) throw NotPerfectPower("degree not divisible by root index");
  const std::size_t k = deg / n;
  const Integer n_int(static_cast<unsigned long>(n));

  std::vector<R> r(k + 1, p.zero_like());
  r[k] = one;
  // pw[e] = coefficients of (partial r)^e restricted to the top terms; a
  // full re-expansion per step keeps the code obvious and is cheap at
  // these degrees.
  for (std::size_t j = 1; j <= k; ++j) {
    Polynomial<R> partial(r, p.var());
    Polynomial<R> powered = pow(partial, n);
    R target = p.coefficient(deg - j) - powered.coefficient(deg - j);
    try {
      r[k - j] = exact_div_integer(target, n_int);
    } catch (const DivisionNotExact&) {
      throw NotPerfectPower("coefficient not divisible by root index");
    }
  }
  Polynomial<R> root(std::move(r), p.var());
  if (!(pow(root, n) == p)) throw NotPerfectPower("re-expansion check failed");
  return root;
}

/// deg_c of a BiPoly (max over coefficients), nullopt for zero.
template <class R>
std::optional<std::size_t> inner_degree(const Polynomial<Polynomial<R>>& p) {
  std::optional<std::size_t> best;
  for (const auto& c : p.coefficients()) {
    auto d = c.degree();
    if (d && (!best || *d > *best)) best = d;
  }
  return best;
}

/// Content-free helpers for integer polynomials.
Integer content(const IntPoly& p);
std::string to_string(const IntPoly& p);
std::string to_string(const BiPoly& p);

/// Convenience constructors.
inline IntPoly int_poly(std::initializer_list<long> coeffs, char var = 'c') {
  std::vector<Integer> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v), var);
}

}  // namespace dynatomic
