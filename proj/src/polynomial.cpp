#include "dynatomic/polynomial.hpp"

#include <sstream>

namespace dynatomic {

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) g = gcd(g, c);
  return g;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Integer& coef,
                 const std::string& monomial) {
  if (sgn(coef) == 0) return;
  Integer mag = abs(coef);
  if (first) {
    if (sgn(coef) < 0) os << "-";
  } else {
    os << (sgn(coef) < 0 ? " - " : " + ");
  }
  first = false;
  if (monomial.empty()) {
    os << mag.get_str();
  } else {
    if (mag != 1) os << mag.get_str() << "*";
    os << monomial;
  }
}

std::string power(char var, std::size_t e) {
  if (e == 0) return "";
  std::string s(1, var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) append_term(os, first, p[i], power(p.var(), i));
  return os.str();
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const IntPoly& c = p[i];
    for (std::size_t j = c.size(); j-- > 0;) {
      std::string mono = power(c.var(), j);
      std::string xpart = power(p.var(), i);
      if (!mono.empty() && !xpart.empty()) mono += "*";
      append_term(os, first, c[j], mono + xpart);
    }
  }
  return os.str();
}

}  // namespace dynatomic
