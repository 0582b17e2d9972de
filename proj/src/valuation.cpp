#include "dynatomic/valuation.hpp"

#include <sstream>
#include <stdexcept>

#include "dynatomic/numtheory.hpp"
#include "dynatomic/resultant.hpp"

namespace dynatomic {

std::size_t NewtonPolygon::order_at_zero() const {
  if (!segments.empty() && !segments.front().slope) return segments.front().length;
  return 0;
}

std::vector<Rational> NewtonPolygon::finite_slopes() const {
  std::vector<Rational> out;
  for (const auto& s : segments)
    if (s.slope) out.push_back(*s.slope);
  return out;
}

bool NewtonPolygon::single_slope(const Rational& slope) const {
  const auto slopes = finite_slopes();
  return slopes.size() == 1 && slopes.front() == slope;
}

NewtonPolygon newton_polygon(const BiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("Newton polygon of zero");
  NewtonPolygon np;
  std::vector<PolygonVertex> finite;
  for (std::size_t i = 0; i < p.size(); ++i) {
    PolygonPoint pt;
    pt.exponent = i;
    if (!p[i].is_zero()) {
      pt.valuation = -static_cast<long>(*p[i].degree());
      finite.push_back({i, *pt.valuation});
    }
    np.points.push_back(pt);
  }
  auto cross = [](const PolygonVertex& o, const PolygonVertex& a, const PolygonVertex& b) {
    const long ax = static_cast<long>(a.x) - static_cast<long>(o.x);
    const long bx = static_cast<long>(b.x) - static_cast<long>(o.x);
    return ax * (b.y - o.y) - (a.y - o.y) * bx;
  };
  for (const auto& pt : finite) {
    while (np.vertices.size() >= 2 &&
           cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), pt) <= 0)
      np.vertices.pop_back();
    np.vertices.push_back(pt);
  }
  if (finite.front().x > 0) np.segments.push_back({std::nullopt, finite.front().x});
  for (std::size_t i = 1; i < np.vertices.size(); ++i) {
    const auto& a = np.vertices[i - 1];
    const auto& b = np.vertices[i];
    Rational slope(b.y - a.y, static_cast<long>(b.x - a.x));
    slope.canonicalize();
    np.segments.push_back({slope, b.x - a.x});
  }
  return np;
}

std::string to_string(const NewtonPolygon& np) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& v : np.vertices) os << " (" << v.x << "," << v.y << ")";
  os << "; slopes";
  for (const auto& s : np.segments)
    os << " " << (s.slope ? s.slope->get_str() : std::string("-inf")) << "x" << s.length;
  return os.str();
}

namespace {

IntPoly c_one() { return IntPoly::constant(Integer(1), 'c'); }

Verdict polygon_verdict(std::string claim, const NewtonPolygon& np, bool pass) {
  Verdict v = make_verdict(std::move(claim));
  v.pass = pass;
  v.residual = pass ? "0" : to_string(np);
  v.witness = to_string(np);
  return v;
}

bool single_segment(const NewtonPolygon& np, const Rational& slope, PolygonVertex from,
                    PolygonVertex to) {
  return np.order_at_zero() == 0 && np.single_slope(slope) && np.vertices.size() == 2 &&
         np.vertices.front() == from && np.vertices.back() == to;
}

bool slopes_at_most(const NewtonPolygon& np, const Rational& bound) {
  for (const auto& s : np.finite_slopes())
    if (s > bound) return false;
  return true;
}

long ipow(long b, unsigned e) {
  long r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

/// ft^i for i < count.
std::vector<BiPoly> shifted_iterates(unsigned d, unsigned count) {
  const BiPoly ft = Family::shifted(d).map();
  std::vector<BiPoly> out{BiPoly::monomial(c_one(), 1, 'z')};
  while (out.size() < count) out.push_back(compose(ft, out.back()));
  return out;
}

BiPoly f_poly(const std::vector<BiPoly>& orbit, unsigned k) {
  BiPoly acc = BiPoly::constant(c_one(), 'z');
  for (unsigned i = 0; i < k; ++i) acc *= orbit[i];
  return acc - BiPoly::constant(c_one(), 'z');
}

std::vector<Verdict> unicritical_suite(const Family& fam, unsigned k_max, unsigned m_max) {
  std::vector<Verdict> out;
  const long d = fam.d();
  const Rational inv_d(1, d);
  BiPoly it = BiPoly::monomial(c_one(), 1, 'z');
  for (unsigned k = 1; k <= k_max; ++k) {
    it = compose(fam.map(), it);
    const PolygonVertex from{0, -ipow(d, k - 1)}, to{static_cast<std::size_t>(ipow(d, k)), 0};
    const NewtonPolygon a = newton_polygon(it);
    out.push_back(polygon_verdict("newton-iterate", a, single_segment(a, inv_d, from, to)));
    out.back().param("d", d).param("k", k);
    const NewtonPolygon b = newton_polygon(it - BiPoly::monomial(c_one(), 1, 'z'));
    out.push_back(polygon_verdict("newton-iterate-minus-z", b, single_segment(b, inv_d, from, to)));
    out.back().param("d", d).param("k", k);
  }
  // resultants over x for the sizes where the symbolic path stays cheap
  for (unsigned k = 1; k <= k_max && ipow(d, k) <= 16; ++k) {
    const BiPoly fk = iterate(fam, k) - BiPoly::monomial(c_one(), 1, 'z');
    for (unsigned m = 1; m <= m_max && ipow(d, m) <= 16; ++m) {
      const BiPoly r = charpoly_resultant_interp(fk, multiplier_derivative(fam, m));
      Rational slope(static_cast<long>(m) * (d - 1), d);
      slope.canonicalize();
      const PolygonVertex from{0, -static_cast<long>(m) * (d - 1) * ipow(d, k - 1)};
      const PolygonVertex to{static_cast<std::size_t>(ipow(d, k)), 0};
      const NewtonPolygon np = newton_polygon(r);
      out.push_back(polygon_verdict("newton-resultant", np, single_segment(np, slope, from, to)));
      out.back().param("d", d).param("k", k).param("m", m);
    }
  }
  for (unsigned m = 1; m <= m_max; ++m) {
    const BiPoly delta = multiplier_poly(fam, m).delta;
    const long dm = static_cast<long>(moebius_degree(static_cast<std::uint64_t>(d), m).get_si());
    Rational slope(static_cast<long>(m) * (d - 1), d);
    slope.canonicalize();
    const PolygonVertex from{0, -(d - 1) * dm / d}, to{static_cast<std::size_t>(dm / m), 0};
    const NewtonPolygon np = newton_polygon(delta);
    // the lemma's endpoints (0, -m(d-1)d_m/d) and (d_m, 0) are those of delta_m^m
    const NewtonPolygon npm = newton_polygon(pow(delta, m));
    const bool power_ok = single_segment(npm, slope, {0, -static_cast<long>(m) * (d - 1) * dm / d},
                                         {static_cast<std::size_t>(dm), 0});
    out.push_back(polygon_verdict("newton-delta", np, single_segment(np, slope, from, to) && power_ok));
    out.back().param("d", d).param("m", m);
  }
  return out;
}

std::vector<Verdict> conjugate_suite(const Family& fam, unsigned k_max) {
  std::vector<Verdict> out;
  const unsigned d = fam.d();
  const std::vector<BiPoly> orbit = shifted_iterates(d, k_max + 1);
  const Rational one(1);
  for (unsigned k = 1; k <= k_max; ++k) {
    const NewtonPolygon a = newton_polygon(orbit[k]);
    out.push_back(polygon_verdict("newton-ft-iterate", a, slopes_at_most(a, one)));
    out.back().param("d", d).param("k", k);
    const BiPoly F = f_poly(orbit, k);
    const NewtonPolygon b = newton_polygon(F);
    out.push_back(polygon_verdict("newton-F", b, slopes_at_most(b, one)));
    out.back().param("d", d).param("k", k);

    const BiPoly g = g_polynomial(d, k);
    const long n = static_cast<long>(*F.degree());
    const NewtonPolygon np = newton_polygon(g);
    bool pass = single_segment(np, one, {0, -n}, {static_cast<std::size_t>(n), 0});
    if (n <= 13) {
      // the expansion against the resultant it stands for
      const BiPoly gt({IntPoly({Integer(0), Integer(-static_cast<long>(d))}, 'c'),
                       IntPoly::constant(Integer(d + 1), 'c')},
                      'z');
      pass = pass && charpoly_resultant_interp(F, gt) == g;
    }
    out.push_back(polygon_verdict("newton-G", np, pass));
    out.back().param("d", d).param("k", k);
  }
  return out;
}

}  // namespace

BiPoly g_polynomial(unsigned d, unsigned k) {
  const std::vector<BiPoly> orbit = shifted_iterates(d, k);
  const BiPoly F = f_poly(orbit, k);
  const std::size_t n = *F.degree();
  const BiPoly lin({IntPoly({Integer(0), Integer(d)}, 'c'), c_one()}, 'x');
  BiPoly acc('x');
  for (std::size_t j = n + 1; j-- > 0;) {
    const IntPoly coef = F[j].scale(pow(Integer(d + 1), static_cast<unsigned long>(n - j)));
    acc = acc * lin + BiPoly::constant(coef, 'x');
  }
  return acc;
}

std::vector<Verdict> slope_lemma_suite(const Family& fam, unsigned k_max, unsigned m_max) {
  switch (fam.kind()) {
    case FamilyKind::unicritical: return unicritical_suite(fam, k_max, m_max);
    case FamilyKind::linear_term:
    case FamilyKind::shifted: return conjugate_suite(fam, k_max);
    case FamilyKind::quad_crit: return {};
  }
  return {};
}

std::vector<LabeledPolygon> iterate_polygons(unsigned d, unsigned n_max) {
  std::vector<LabeledPolygon> out;
  const Family lin = Family::linear_term(d);
  const std::vector<BiPoly> orbit = shifted_iterates(d, n_max + 1);
  BiPoly it = BiPoly::monomial(c_one(), 1, 'z');
  for (unsigned n = 1; n <= n_max; ++n) {
    it = compose(lin.map(), it);
    out.push_back({"linearterm", d, n, newton_polygon(it)});
    out.push_back({"shifted", d, n, newton_polygon(orbit[n])});
  }
  return out;
}

std::vector<Verdict> iterate_polygon_checks(unsigned d, unsigned n_max) {
  std::vector<Verdict> out;
  for (const auto& lp : iterate_polygons(d, n_max)) {
    const NewtonPolygon& np = lp.polygon;
    const std::size_t top = static_cast<std::size_t>(ipow(d + 1, lp.n));
    bool pass = !np.vertices.empty() && np.vertices.back() == PolygonVertex{top, 0};
    if (lp.label == "linearterm")
      pass = pass && np.order_at_zero() == 1 && slopes_at_most(np, Rational(1, d));
    else
      pass = pass && np.order_at_zero() == 0 && slopes_at_most(np, Rational(1));
    out.push_back(polygon_verdict("newton-iterate-shape", np, pass));
    out.back().param("family", lp.label).param("d", d).param("n", lp.n);
  }
  return out;
}

}  // namespace dynatomic
