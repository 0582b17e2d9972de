#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dynatomic/serialize.hpp"
#include "dynatomic/tables.hpp"
#include "test_support.hpp"

using namespace dynatomic;
using dynatomic::testing::bi;

TEST_CASE("polynomial JSON layout") {
  // C + x^2 - 2x with C tagged as the coefficient variable
  const BiPoly p({int_poly({0, 1}, 'C'), int_poly({-2}, 'C'), int_poly({1}, 'C')}, 'x');
  CHECK(canonical_dump(to_json(p)) ==
        R"({"terms":[{"coef":"1","exps":[0,2]},{"coef":"-2","exps":[0,1]},{"coef":"1","exps":[1,0]}],"var":["C","x"]})");
  CHECK(canonical_dump(to_json(int_poly({-27, 0, 0, -4}))) ==
        R"({"terms":[{"coef":"-4","exps":[3]},{"coef":"-27","exps":[0]}],"var":["c"]})");
  CHECK(canonical_dump(to_json(BiPoly('x'))) == R"({"terms":[],"var":["c","x"]})");
}

TEST_CASE("property: JSON round trip is byte identical") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    BiPoly p = dynatomic::testing::random_bipoly(rng, t % 6, t % 5, 1000000, 'x');
    if (t % 7 == 0) p = p * p * p;  // coefficients past 64 bits
    const std::string text = canonical_dump(to_json(p));
    const BiPoly back = bipoly_from_json(Json::parse(text));
    CHECK(back == p);
    CHECK(canonical_dump(to_json(back)) == text);
  }
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(bipoly_from_json(Json::parse(R"({"var":["c","x"],"terms":[{"exps":[1],"coef":"2"}]})")), ParseError);
  CHECK_THROWS_AS(bipoly_from_json(Json::parse(R"({"var":["c","x"],"terms":[{"exps":[1,0],"coef":"2.5"}]})")), ParseError);
  CHECK_THROWS_AS(bipoly_from_json(Json::parse(R"({"terms":[]})")), ParseError);
}

TEST_CASE("CSV rows") {
  const BiPoly p = bi({{-4, -1}, {1}}, 'x');
  const auto rows = csv_rows("unicritical", 2, 2, "-", p);
  REQUIRE(rows.size() == 3);
  CHECK(csv_header() == "family,d,m,n,e_c,e_x,coef");
  CHECK(rows[0] == "unicritical,2,2,-,0,1,1");
  CHECK(rows[1] == "unicritical,2,2,-,1,0,-1");
  CHECK(rows[2] == "unicritical,2,2,-,0,0,-4");
}

TEST_CASE("TeX expressions") {
  BiPoly p = parse_tex("C + x^{2} - 2 x", 'C');
  CHECK(p == BiPoly({int_poly({0, 1}, 'C'), int_poly({-2}, 'C'), int_poly({1}, 'C')}, 'x'));
  p = parse_tex("\\left(- C + 2 x\\right) \\left(C + x - 3\\right)^{2}", 'C');
  const BiPoly a({int_poly({0, -1}, 'C'), int_poly({2}, 'C')}, 'x');
  const BiPoly b({int_poly({-3, 1}, 'C'), int_poly({1}, 'C')}, 'x');
  CHECK(p == a * b * b);
  CHECK(parse_tex("2^{10}\\cdot 3", 'c') == BiPoly::constant(int_poly({3072}), 'x'));
  CHECK(parse_tex("-3^3", 'c') == BiPoly::constant(int_poly({-27}), 'x'));
  CHECK(parse_tex("81(c^{4} + 16)", 'c') == BiPoly::constant(int_poly({1296, 0, 0, 0, 81}), 'x'));
  CHECK(parse_tex("(12 c^{3} + 125)(2c)", 'c') == BiPoly::constant(int_poly({0, 250, 0, 0, 24}), 'x'));
  CHECK(canonical_dump(to_json(parse_tex("x^{2} - 2 x + C", 'C'))) ==
        canonical_dump(to_json(parse_tex("C + x^{2} - 2 x", 'C'))));
  CHECK_THROWS_AS(parse_tex("Too long", 'c'), ParseError);
  CHECK_THROWS_AS(parse_tex("(x + 1", 'c'), ParseError);
  CHECK_THROWS_AS(parse_tex("x^", 'c'), ParseError);
}

TEST_CASE("verdict JSON round trip") {
  Verdict v = make_verdict("morton-vivaldi");
  v.param("d", 2).param("n", 4);
  v.pass = true;
  v.residual = "0";
  v.witness = "sign +1";
  const std::string text = canonical_dump(to_json(v));
  CHECK(verdict_from_json(Json::parse(text)) == v);
}

TEST_CASE("golden rows") {
  const auto rows = load_golden(default_golden_path());
  CHECK(rows.size() == 43);
  CHECK(rows.front().family == "unicritical");
  CHECK(!rows.front().n);
  CHECK(rows.back().expression == "Too long");
  // a few cheap rows end to end
  CHECK(compare_golden(rows[0]).pass);
  CHECK(compare_golden(rows[10]).pass);
  // linearterm d = 2, m = 3: the printed row is the square root of the computed one
  const Verdict typo = compare_golden(rows[12]);
  CHECK(!typo.pass);
  CHECK(typo.witness.find("printed column 12 disagrees") != std::string::npos);
  CHECK(typo.witness.find("to the power 2") != std::string::npos);
}

TEST_CASE("table entry JSON") {
  const TableEntry e = compute_entry(Family::unicritical(2), 2);
  CHECK(canonical_dump(e.json()) ==
        R"({"column":"2","d":2,"family":"unicritical","m":2,"n":null,"value":{"terms":[{"coef":"1","exps":[0,1]},{"coef":"-1","exps":[1,0]},{"coef":"-4","exps":[0,0]}],"var":["C","x"]}})");
  const TableEntry q = compute_entry(Family::quad_crit(2), 1, 1u);
  CHECK(q.column == "-4");
  CHECK_THROWS(compute_entry(Family::quad_crit(2), 1));
}
