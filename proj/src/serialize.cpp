#include "dynatomic/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace dynatomic {

namespace {

char inner_var_of(const BiPoly& p) {
  for (const auto& c : p.coefficients())
    if (!c.is_zero()) return c.var();
  return 'c';
}

struct Term {
  std::size_t e_in, e_out;
  Integer coef;
};

std::vector<Term> terms_of(const BiPoly& p) {
  std::vector<Term> out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const IntPoly& c = p[i];
    for (std::size_t j = c.size(); j-- > 0;)
      if (c[j] != 0) out.push_back({j, i, c[j]});
  }
  return out;  // already (e_out desc, e_in desc)
}

std::string var_name(const Json& j, std::size_t i) {
  const std::string s = j.at("var").at(i).get<std::string>();
  if (s.size() != 1) throw ParseError("variable names are single letters: " + s);
  return s;
}

Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("bad integer: " + s);
  return z;
}

class TexParser {
 public:
  TexParser(const std::string& s, char inner) : s_(s), inner_(inner) {}

  BiPoly run() {
    BiPoly v = expr();
    ws();
    if (pos_ != s_.size()) fail("trailing input");
    // zero padding created by products carries the default tag; retag it all
    std::vector<IntPoly> cs;
    for (const auto& c : v.coefficients()) cs.push_back(c.with_var(inner_));
    return BiPoly(std::move(cs), 'x');
  }

 private:
  const std::string& s_;
  char inner_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void ws() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_.compare(pos_, 2, "\\,") == 0 || s_.compare(pos_, 2, "\\ ") == 0) {
        pos_ += 2;
      } else {
        break;
      }
    }
  }
  bool eat(const char* tok) {
    ws();
    const std::size_t n = std::char_traits<char>::length(tok);
    if (s_.compare(pos_, n, tok) != 0) return false;
    pos_ += n;
    return true;
  }
  bool at_factor() {
    ws();
    if (pos_ >= s_.size()) return false;
    const char ch = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || std::isalpha(static_cast<unsigned char>(ch)) ||
           ch == '(' || s_.compare(pos_, 6, "\\left(") == 0;
  }

  BiPoly constant(const Integer& n) const {
    return BiPoly::constant(IntPoly::constant(n, inner_), 'x');
  }

  BiPoly expr() {
    BiPoly acc = constant(Integer(0));
    bool first = true;
    for (;;) {
      int sign = 1;
      if (eat("+")) {
      } else if (eat("-")) {
        sign = -1;
      } else if (!first) {
        break;
      }
      BiPoly t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = factor();
    for (;;) {
      if (eat("\\cdot") || eat("\\times") || eat("*")) {
        acc = acc * factor();
      } else if (at_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly factor() {
    BiPoly base = primary();
    if (!eat("^")) return base;
    std::string digits;
    if (eat("{")) {
      ws();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      if (!eat("}")) fail("expected }");
    } else {
      ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    }
    if (digits.empty()) fail("expected exponent");
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  BiPoly primary() {
    ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat("\\left(")) {
      BiPoly v = expr();
      if (!eat("\\right)")) fail("expected \\right)");
      return v;
    }
    if (eat("(")) {
      BiPoly v = expr();
      if (!eat(")")) fail("expected )");
      return v;
    }
    const char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
      return constant(parse_integer(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      ++pos_;
      const IntPoly one = IntPoly::constant(Integer(1), inner_);
      if (ch == 'x') return BiPoly::monomial(one, 1, 'x');
      if (ch != inner_) fail(std::string("unexpected variable ") + ch);
      return BiPoly::constant(IntPoly::monomial(Integer(1), 1, inner_), 'x');
    }
    fail("unexpected character");
  }
};

}  // namespace

Json to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& t : terms_of(p))
    terms.push_back({{"exps", {t.e_in, t.e_out}}, {"coef", t.coef.get_str()}});
  return {{"var", {std::string(1, inner_var_of(p)), std::string(1, p.var())}}, {"terms", terms}};
}

Json to_json(const IntPoly& p) {
  Json terms = Json::array();
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) terms.push_back({{"exps", {i}}, {"coef", p[i].get_str()}});
  return {{"var", {std::string(1, p.var())}}, {"terms", terms}};
}

BiPoly bipoly_from_json(const Json& j) {
  try {
    const std::size_t nvar = j.at("var").size();
    if (nvar != 1 && nvar != 2) throw ParseError("expected one or two variables");
    const char inner = var_name(j, 0)[0];
    const char outer = nvar == 2 ? var_name(j, 1)[0] : 'x';
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> ts;
    std::size_t top = 0;
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at("exps");
      if (e.size() != nvar) throw ParseError("exponent arity does not match var");
      const std::size_t ei = e.at(0).get<std::size_t>();
      const std::size_t eo = nvar == 2 ? e.at(1).get<std::size_t>() : 0;
      ts.emplace_back(ei, eo, parse_integer(t.at("coef").get<std::string>()));
      top = std::max(top, eo);
    }
    std::vector<std::vector<Integer>> rows(ts.empty() ? 0 : top + 1);
    for (auto& [ei, eo, c] : ts) {
      auto& row = rows[eo];
      if (row.size() <= ei) row.resize(ei + 1, Integer(0));
      row[ei] += c;
    }
    std::vector<IntPoly> cs;
    for (auto& row : rows) cs.emplace_back(std::move(row), inner);
    return BiPoly(std::move(cs), outer);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

IntPoly intpoly_from_json(const Json& j) {
  const BiPoly b = bipoly_from_json(j);
  if (b.size() > 1) throw ParseError("expected a univariate polynomial");
  return b.is_zero() ? IntPoly(j.at("var").at(0).get<std::string>()[0]) : b[0];
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string csv_header() { return "family,d,m,n,e_c,e_x,coef"; }

std::vector<std::string> csv_rows(const std::string& family, unsigned d, unsigned m,
                                  const std::string& n, const BiPoly& p) {
  std::vector<std::string> out;
  const std::string head = family + "," + std::to_string(d) + "," + std::to_string(m) + "," + n + ",";
  for (const auto& t : terms_of(p))
    out.push_back(head + std::to_string(t.e_in) + "," + std::to_string(t.e_out) + "," + t.coef.get_str());
  return out;
}

BiPoly parse_tex(const std::string& text, char inner_var) { return TexParser(text, inner_var).run(); }

Json to_json(const Verdict& v) {
  Json params = Json::array();
  for (const auto& [k, val] : v.params) params.push_back({k, val});
  return {{"claim", v.claim}, {"params", params}, {"pass", v.pass}, {"residual", v.residual},
          {"witness", v.witness}};
}

Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v = make_verdict(j.at("claim").get<std::string>());
    for (const auto& p : j.at("params")) v.param(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    v.pass = j.at("pass").get<bool>();
    v.residual = j.at("residual").get<std::string>();
    v.witness = j.at("witness").get<std::string>();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed verdict JSON: ") + e.what());
  }
}

Json to_json(const NewtonPolygon& np) {
  Json vertices = Json::array();
  for (const auto& v : np.vertices) vertices.push_back({v.x, v.y});
  Json segments = Json::array();
  for (const auto& s : np.segments)
    segments.push_back({{"slope", s.slope ? s.slope->get_str() : std::string("-inf")}, {"length", s.length}});
  return {{"vertices", vertices}, {"segments", segments}};
}

std::vector<unsigned> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
      throw ParseError("bad range \"" + text + "\"");
    return static_cast<unsigned>(std::stoul(s));
  };
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    const std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
    } else {
      const unsigned lo = number(item.substr(0, dots));
      const unsigned hi = number(item.substr(dots + 2));
      if (lo > hi) throw ParseError("empty range \"" + item + "\"");
      for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dynatomic
