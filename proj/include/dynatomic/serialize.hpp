#pragma once

// Canonical JSON and CSV encodings, and a reader for the TeX-style
// expressions of the golden tables.

#include <string>
#include <vector>

#include <json.hpp>

#include "dynatomic/polynomial.hpp"
#include "dynatomic/valuation.hpp"
#include "dynatomic/verdict.hpp"

namespace dynatomic {

using Json = nlohmann::json;

/// {"var": [inner, outer], "terms": [{"exps": [e_inner, e_outer], "coef": "..."}]}
/// with terms sorted by (e_outer desc, e_inner desc). Zero is an empty term list.
Json to_json(const BiPoly& p);
/// Univariate form: {"var": [v], "terms": [{"exps": [e], "coef": "..."}]}.
Json to_json(const IntPoly& p);
/// Accepts both forms; a univariate polynomial comes back with outer degree 0
/// and outer variable 'x'. Throws ParseError on malformed input.
BiPoly bipoly_from_json(const Json& j);
IntPoly intpoly_from_json(const Json& j);

/// Compact dump; nlohmann keeps object keys sorted, so the text is canonical.
std::string canonical_dump(const Json& j);

/// "family,d,m,n,e_c,e_x,coef" rows, one per nonzero term in canonical order.
std::string csv_header();
std::vector<std::string> csv_rows(const std::string& family, unsigned d, unsigned m,
                                  const std::string& n, const BiPoly& p);

/// TeX-ish polynomial expressions: integers, the letter x as the outer
/// variable and any other single letter as the coefficient variable,
/// implicit products, \cdot, ^{k} and ^k, ( ) and \left( \right).
BiPoly parse_tex(const std::string& text, char inner_var);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const NewtonPolygon& np);

/// "3", "1..4", "2,3" or mixtures such as "1..3,6"; ascending, no repeats.
/// Throws ParseError.
std::vector<unsigned> parse_range(const std::string& text);

}  // namespace dynatomic
