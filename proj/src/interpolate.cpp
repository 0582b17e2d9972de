#include "dynatomic/interpolate.hpp"

#include <vector>

namespace dynatomic {

IntPoly interpolate_consecutive(std::span<const Integer> values, char var) {
  if (values.empty()) return IntPoly(var);
  const std::size_t b = values.size() - 1;
  std::vector<Integer> diff(values.begin(), values.end());
  for (std::size_t k = 1; k <= b; ++k)
    for (std::size_t i = b; i >= k; --i) diff[i] -= diff[i - 1];

  // sum_k diff[k] * (b!/k!) * c(c-1)...(c-k+1)
  std::vector<Integer> scale(b + 1);
  scale[b] = 1;
  for (std::size_t k = b; k-- > 0;) scale[k] = scale[k + 1] * static_cast<unsigned long>(k + 1);
  const Integer b_factorial = scale[0];

  IntPoly falling = IntPoly::constant(Integer(1), var);
  IntPoly acc(var);
  for (std::size_t k = 0; k <= b; ++k) {
    if (sgn(diff[k]) != 0) acc += falling.scale(diff[k] * scale[k]);
    if (k < b)
      falling *= IntPoly({Integer(-static_cast<long>(k)), Integer(1)}, var);
  }
  return exact_div_integer(acc, b_factorial);
}

BiPoly interpolate_consecutive(std::span<const IntPoly> values, char cvar,
                               char xvar) {
  std::size_t width = 0;
  for (const auto& v : values) width = std::max(width, v.size());
  std::vector<IntPoly> coeffs;
  coeffs.reserve(width);
  std::vector<Integer> column(values.size());
  for (std::size_t e = 0; e < width; ++e) {
    for (std::size_t i = 0; i < values.size(); ++i) column[i] = values[i].coefficient(e);
    coeffs.push_back(interpolate_consecutive(column, cvar));
  }
  return BiPoly(std::move(coeffs), xvar);
}

}  // namespace dynatomic
