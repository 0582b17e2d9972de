#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "dynatomic/numtheory.hpp"
#include "dynatomic/parabolic.hpp"
#include "test_support.hpp"

using namespace dynatomic;

namespace {

Rational q(long a, long b) { return make_rational(a, b); }

// Durand-Kerner in long double; an oracle only for counting roots.
std::vector<std::complex<long double>> dk_roots(const IntPoly& p) {
  const std::size_t n = *p.degree();
  std::vector<long double> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    a[i] = p.coefficient(i).get_d() / p.coefficient(n).get_d();
  std::vector<std::complex<long double>> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(std::complex<long double>(0.4L, 0.9L), static_cast<int>(i));
  for (int it = 0; it < 2000; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<long double> num = 0;
      for (std::size_t k = n + 1; k-- > 0;) num = num * z[i] + a[k];
      std::complex<long double> den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      z[i] -= num / den;
    }
  }
  return z;
}

std::size_t dk_real_count(const IntPoly& p, long double lo, long double hi) {
  std::size_t n = 0;
  for (const auto& r : dk_roots(p))
    if (std::abs(r.imag()) < 1e-9L && r.real() > lo && r.real() <= hi) ++n;
  return n;
}

}  // namespace

TEST_CASE("escape bounds") {
  CHECK(escape_bound(Family::unicritical(2)).text == "2");
  const EscapeBound b3 = escape_bound(Family::unicritical(3));
  CHECK(b3.base == 2);
  CHECK(b3.root == 2);
  const EscapeBound l2 = escape_bound(Family::linear_term(2));
  CHECK(l2.base == 6);
  CHECK(l2.root == 2);
  CHECK(l2.factor == q(3, 2));

  CHECK(certified_escape(Family::unicritical(2), q(9, 4)).escapes);
  CHECK(certified_escape(Family::unicritical(2), q(-21, 10)).escapes);
  CHECK_FALSE(certified_escape(Family::unicritical(2), Rational(2)).escapes);
  CHECK_FALSE(certified_escape(Family::unicritical(3), q(7, 5)).escapes);  // 49/25 < 2
  CHECK(certified_escape(Family::unicritical(3), q(3, 2)).escapes);
  // r(2) = sqrt(6) * 3/2 ~ 3.67
  CHECK(certified_escape(Family::linear_term(2), Rational(4)).escapes);
  CHECK_FALSE(certified_escape(Family::linear_term(2), Rational(1)).escapes);
}

TEST_CASE("escape certificate against iteration") {
  // every certified parameter's critical orbit leaves any fixed disk quickly
  for (long num = -40; num <= 40; ++num) {
    const Rational c = q(num, 8);
    if (!certified_escape(Family::unicritical(2), c).escapes) continue;
    double z = 0, cd = c.get_d();
    int steps = 0;
    while (std::abs(z) < 1e6 && steps < 40) z = z * z + cd, ++steps;
    CHECK(steps < 40);
  }
}

TEST_CASE("naive height") {
  CHECK(naive_height(q(1, 4)) == 4);
  CHECK(naive_height(q(-7, 4)) == 7);
  CHECK(naive_height(Rational(0)) == 1);
}

TEST_CASE("candidate enumeration") {
  const auto c2 = enumerate_candidates(2);
  const std::vector<Rational> want{-2, q(-7, 4), q(-3, 2), q(-5, 4), -1, q(-3, 4), q(-1, 2), q(-1, 4), 0, q(1, 4)};
  CHECK(c2 == want);
  const auto c3 = enumerate_candidates(3);
  const std::vector<Rational> want3{q(-4, 3), -1, q(-2, 3), q(-1, 3), 0, q(1, 3), q(2, 3), 1, q(4, 3)};
  CHECK(c3 == want3);
  for (const auto& g : c3) {
    CHECK(Rational(27 * g * g).get_den() == 1);
    CHECK(pow(naive_height(g), 2) <= 54);
  }
}

TEST_CASE("Sturm counts agree with Durand-Kerner") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly p = dynatomic::testing::random_monic(rng, 1 + trial % 6, 6, 'x');
    // skip roots too close to an endpoint for the floating oracle
    bool near = false;
    for (const auto& r : dk_roots(p))
      if (std::abs(r.imag()) < 1e-6L && (std::abs(r.real() - 1) < 1e-6L || std::abs(r.real() + 1) < 1e-6L))
        near = true;
    if (near || p.coefficient(0) == 0) continue;
    INFO(to_string(p));
    CHECK(sturm_count(p, Rational(-1), Rational(1)) == dk_real_count(p, -1, 1));
  }
  // repeated root counts once
  const IntPoly sq = int_poly({1, -2, 1});
  CHECK(sturm_count(sq, Rational(0), Rational(2)) == 1);
  const auto [lo, hi] = isolate_root(int_poly({-2, 0, 1}), Rational(0), Rational(2), 20);
  CHECK(lo * lo < 2);
  CHECK(hi * hi >= 2);
}

TEST_CASE("specialization matches the rescaled table entry") {
  // Psi(x, C) for d = 2, m = 3 at C = -7 is x^2 - 2x + 1
  CHECK(specialize_delta(2, 3, q(-7, 4)) == int_poly({1, -2, 1}));
  CHECK(specialize_delta(2, 1, q(1, 4)) == int_poly({1, -2, 1}));
  CHECK(specialize_delta(2, 1, q(-3, 4)) == int_poly({-3, -2, 1}));
  CHECK(specialize_delta(2, 1, Rational(-2)) == int_poly({-8, -2, 1}));
  // the 2-cycle of z^2 - 2 has multiplier 4(c + 1) = -4
  CHECK(specialize_delta(2, 2, Rational(-2)) == int_poly({4, 1}));
}

TEST_CASE("classification of the z^2 + c candidates") {
  const auto all = classify_all(2);
  REQUIRE(all.size() == 10);
  auto find = [&](const Rational& g) {
    for (const auto& c : all)
      if (c.gamma == g) return c;
    FAIL("missing");
    return Candidate{};
  };
  Candidate c = find(q(1, 4));
  CHECK(c.status == Status::parabolic);
  CHECK(c.period == 1);
  CHECK(c.multiplier_order == 1);
  CHECK(c.multiplicity == 2);
  CHECK(c.specialized == int_poly({1, -2, 1}));

  c = find(q(-3, 4));
  CHECK(c.status == Status::parabolic);
  CHECK(c.period == 1);
  CHECK(c.multiplier_order == 2);
  CHECK(c.specialized == int_poly({-3, -2, 1}));

  c = find(q(-5, 4));
  CHECK(c.status == Status::parabolic);
  CHECK(c.period == 2);
  CHECK(c.multiplier_order == 2);
  CHECK(c.specialized == int_poly({1, 1}));

  c = find(q(-7, 4));
  CHECK(c.status == Status::parabolic);
  CHECK(c.period == 3);
  CHECK(c.multiplier_order == 1);
  CHECK(c.multiplicity == 2);

  c = find(Rational(-1));
  CHECK(c.status == Status::superattracting);
  CHECK(c.period == 2);
  c = find(Rational(0));
  CHECK(c.status == Status::superattracting);
  CHECK(c.period == 1);
  for (const Rational& g : {q(-1, 2), q(-1, 4)}) {
    c = find(g);
    CHECK(c.status == Status::attracting);
    CHECK(c.period == 1);
  }
  // 1 - sqrt(3) for -1/2
  c = find(q(-1, 2));
  CHECK(c.root_interval->first < -0.732);
  CHECK(c.root_interval->second > -0.733);

  c = find(Rational(-2));
  CHECK(c.status == Status::repelling_all_tested);
  c = find(q(-3, 2));
  CHECK(c.status == Status::unresolved);
  CHECK(c.note.find("4c + 7") != std::string::npos);

  for (const auto& x : all) {
    const Verdict v = verify_candidate(x);
    INFO(x.gamma.get_str() << " " << v.witness);
    CHECK(v.pass);
  }
}

TEST_CASE("numeric cross-check of the attracting witnesses") {
  // iterate the critical orbit in floating point and compare the limit cycle multiplier
  for (const Rational& g : {q(-1, 2), q(-1, 4)}) {
    const Candidate c = classify(2, g);
    double z = 0, cd = g.get_d();
    for (int i = 0; i < 5000; ++i) z = z * z + cd;
    const double lambda = 2 * z;
    CHECK(lambda > c.root_interval->first.get_d() - 1e-9);
    CHECK(lambda < c.root_interval->second.get_d() + 1e-9);
  }
}

TEST_CASE("z^3 + c candidates") {
  const auto all = classify_all(3);
  CHECK(all.size() == 9);
  for (const auto& x : all) CHECK(verify_candidate(x).pass);
  // c = 0 is superattracting
  CHECK(all[4].status == Status::superattracting);
}

TEST_CASE("Chebyshev note and critical orbits") {
  const Candidate c = chebyshev_note();
  CHECK(c.status == Status::repelling_all_tested);
  CHECK(c.specialized == int_poly({-8, -2, 1}));
  CHECK(critical_orbit_cycle(2, Rational(-2)) == std::make_pair(2u, 1u));
  CHECK(critical_orbit_cycle(2, Rational(-1)) == std::make_pair(0u, 2u));
  CHECK(critical_orbit_cycle(2, q(-1, 2)) == std::nullopt);
}

TEST_CASE("logistic bridge") {
  CHECK(logistic_parameter(Rational(3)) == q(-3, 4));
  CHECK(logistic_parameter(Rational(1)) == q(1, 4));
  CHECK(logistic_parameter(Rational(4)) == Rational(-2));
  CHECK(logistic_parameter(Rational(2)) == Rational(0));
  for (long a = 0; a <= 4; ++a) {
    const LogisticCase lc = logistic_bridge(Rational(a));
    CHECK(lc.parabolic == (a == 1 || a == 3));
    if (a == 0 || a == 2 || a == 4) CHECK(lc.rule.find("finite critical orbit") != std::string::npos);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-7/4") == q(-7, 4));
  CHECK(parse_rational("6/8") == q(3, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
