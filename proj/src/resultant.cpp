#include "dynatomic/resultant.hpp"

#include <vector>

#include "dynatomic/interpolate.hpp"
#include "dynatomic/modular.hpp"
#include "dynatomic/parallel.hpp"

namespace dynatomic {

TriPoly lift_to_x(const BiPoly& g) {
  return map_coefficients(
      g, [](const IntPoly& c) { return BiPoly::constant(c, 'x'); }, g.var());
}

TriPoly x_minus(const BiPoly& g) {
  BiPoly x = BiPoly::monomial(IntPoly::constant(Integer(1), 'c'), 1, 'x');
  return TriPoly::constant(x, g.var()) - lift_to_x(g);
}

BiPoly resultant_x_minus_sylvester(const BiPoly& f, const BiPoly& g) {
  return resultant_sylvester(lift_to_x(f), x_minus(g));
}

namespace {

template <class Outer>
auto formal_specialization(const Outer& p, std::size_t degree, const Integer& c) {
  using Value = decltype(specialize(p.coefficient(0), c));
  std::vector<Value> out;
  out.reserve(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) out.push_back(specialize(p.coefficient(i), c));
  return out;
}

template <class Outer, class Value>
Value node_resultant(const Outer& f, const Outer& g, const Integer& c,
                     const Value& one, const Value& zero) {
  auto fv = formal_specialization(f, *f.degree(), c);
  auto gv = formal_specialization(g, *g.degree(), c);
  return bareiss_determinant(sylvester_matrix(fv, gv, zero), one);
}

}  // namespace

IntPoly interp_resultant(const BiPoly& f, const BiPoly& g, std::size_t bound_c) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with zero polynomial");
  std::vector<Integer> values;
  values.reserve(bound_c + 1);
  for (std::size_t i = 0; i <= bound_c; ++i)
    values.push_back(node_resultant(f, g, Integer(static_cast<unsigned long>(i)),
                                    Integer(1), Integer(0)));
  IntPoly r = interpolate_consecutive(values, 'c');
  const Integer check_node(static_cast<unsigned long>(bound_c + 1));
  if (evaluate(r, check_node) != node_resultant(f, g, check_node, Integer(1), Integer(0)))
    throw BoundTooSmall("c-degree bound " + std::to_string(bound_c) + " too small");
  return r;
}

BiPoly interp_resultant(const TriPoly& f, const TriPoly& g, std::size_t bound_c) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with zero polynomial");
  const IntPoly one = IntPoly::constant(Integer(1), 'x');
  const IntPoly zero('x');
  std::vector<IntPoly> values;
  values.reserve(bound_c + 1);
  for (std::size_t i = 0; i <= bound_c; ++i)
    values.push_back(
        node_resultant(f, g, Integer(static_cast<unsigned long>(i)), one, zero));
  BiPoly r = interpolate_consecutive(values, 'c', 'x');
  const Integer check_node(static_cast<unsigned long>(bound_c + 1));
  if (specialize(r, check_node) != node_resultant(f, g, check_node, one, zero))
    throw BoundTooSmall("c-degree bound " + std::to_string(bound_c) + " too small");
  return r;
}

BiPoly charpoly_resultant_interp(const BiPoly& f, const BiPoly& g, char xvar) {
  if (f.is_zero() || !(f.leading() == f.one_coefficient()))
    throw Error("charpoly resultant needs a monic modulus");
  const std::size_t n_f = *f.degree();
  const std::size_t n_g = g.degree().value_or(0);
  const std::size_t bound =
      n_g * inner_degree(f).value_or(0) + n_f * inner_degree(g).value_or(0);
  std::vector<IntPoly> values(bound + 1);
  parallel_for(bound + 1, [&](std::size_t i) {
    const Integer c(static_cast<unsigned long>(i));
    values[i] = charpoly_resultant_modular(specialize(f, c), specialize(g, c)).with_var(xvar);
  });
  return interpolate_consecutive(std::span<const IntPoly>(values), 'c', xvar);
}

}  // namespace dynatomic
