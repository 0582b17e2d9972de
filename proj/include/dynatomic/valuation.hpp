#pragma once

// Newton polygons over Q((1/c)) with v = -deg_c.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dynatomic/dynamics.hpp"
#include "dynatomic/polynomial.hpp"
#include "dynatomic/verdict.hpp"

namespace dynatomic {

using Rational = mpq_class;

struct PolygonPoint {
  std::size_t exponent = 0;
  /// v of the coefficient; nullopt stands for v(0) = +infinity.
  std::optional<long> valuation;
};

struct PolygonVertex {
  std::size_t x = 0;
  long y = 0;
  friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct Segment {
  /// nullopt is the slope -infinity segment of a zero constant block.
  std::optional<Rational> slope;
  std::size_t length = 0;
};

struct NewtonPolygon {
  std::vector<PolygonPoint> points;   // one per exponent 0..deg
  std::vector<PolygonVertex> vertices;  // finite part of the lower hull
  std::vector<Segment> segments;        // -infinity block first, if any

  std::size_t order_at_zero() const;
  std::vector<Rational> finite_slopes() const;
  /// True if the finite part is one segment of the given slope.
  bool single_slope(const Rational& slope) const;
};

/// Lower convex hull of (i, -deg_c p_i) by a monotone chain with exact
/// integer orientation tests. Collinear interior points are dropped, so the
/// slopes strictly increase. Throws ZeroPolynomial.
NewtonPolygon newton_polygon(const BiPoly& p);

std::string to_string(const NewtonPolygon& np);

/// Slope lemmas. Unicritical: f^k and f^k - z have one segment of slope 1/d
/// from (0, -d^(k-1)) to (d^k, 0); Res_z(f^k - z, x - (f^m)') and delta_m
/// have one segment of slope m(d-1)/d. z^(d+1) + cz and (z-c)z^d + c: the
/// polygons of ft^k and F_k have slopes at most 1, and G_k(x) =
/// Res_z(F_k, x - (d+1)z + dc) has the single slope 1.
std::vector<Verdict> slope_lemma_suite(const Family& fam, unsigned k_max, unsigned m_max);

/// G_k(x) = (d+1)^deg F_k * F_k((x + dc)/(d+1)), expanded exactly.
BiPoly g_polynomial(unsigned d, unsigned k);

struct LabeledPolygon {
  std::string label;
  unsigned d = 0;
  unsigned n = 0;
  NewtonPolygon polygon;
};

/// Polygons of f^n for f = z^(d+1) + cz and ft = z^(d+1) - c z^d + c,
/// n <= n_max, with structural checks: f^n has a -infinity block of length
/// one and finite slopes at most 1/d; ft^n has slopes at most 1; both end
/// at ((d+1)^n, 0).
std::vector<LabeledPolygon> iterate_polygons(unsigned d, unsigned n_max);
std::vector<Verdict> iterate_polygon_checks(unsigned d, unsigned n_max);

}  // namespace dynatomic
