#include "dynatomic/parabolic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dynatomic/numtheory.hpp"
#include "dynatomic/parallel.hpp"
#include "dynatomic/resultant.hpp"

namespace dynatomic {

Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw ParseError("not a rational number: " + s);
  r.canonicalize();
  return r;
}

namespace {

Rational rpow(const Rational& b, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

std::string str(const Rational& r) { return r.get_str(); }

using QPoly = std::vector<Rational>;  // lowest coefficient first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPoly& p) {
  QPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

int sign_at(const QPoly& p, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return sgn(acc);
}

QPoly remainder(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::vector<QPoly> sturm_sequence(const IntPoly& p) {
  std::vector<QPoly> seq{to_q(p)};
  QPoly d;
  for (std::size_t i = 1; i < seq[0].size(); ++i) d.push_back(seq[0][i] * static_cast<long>(i));
  trim(d);
  if (d.empty()) return seq;
  seq.push_back(d);
  for (;;) {
    QPoly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  return seq;
}

std::size_t variations(const std::vector<QPoly>& seq, const Rational& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational eval(const IntPoly& p, const Rational& x) {
  Rational acc(0);
  const auto cs = p.coefficients();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + Rational(cs[i]);
  return acc;
}

std::mutex delta_mutex;
std::map<std::pair<unsigned, unsigned>, BiPoly> delta_cache;

const BiPoly& cached_delta(unsigned d, unsigned m) {
  {
    std::lock_guard<std::mutex> lock(delta_mutex);
    auto it = delta_cache.find({d, m});
    if (it != delta_cache.end()) return it->second;
  }
  BiPoly delta = multiplier_poly(Family::unicritical(d), m).delta;
  std::lock_guard<std::mutex> lock(delta_mutex);
  return delta_cache.emplace(std::make_pair(d, m), std::move(delta)).first->second;
}

// Periods usable under the degree guardrail, at most m_max.
unsigned usable_periods(unsigned d, unsigned m_max) {
  const Family fam = Family::unicritical(d);
  unsigned m = 0;
  while (m < m_max) {
    try {
      check_guardrail(fam, m + 1);
    } catch (const GuardrailViolation&) {
      break;
    }
    ++m;
  }
  return m;
}

unsigned cyclotomic_multiplicity(IntPoly p, const IntPoly& cyc) {
  unsigned e = 0;
  while (!p.is_zero() && rem_monic(p, cyc).is_zero()) {
    p = exact_div(p, cyc);
    ++e;
  }
  return e;
}

const char* kMinusThreeHalves =
    "degree-one Delta_{n,m} for z^2 + c: Delta_{1,1} = 4c - 1, Delta_{2,1} = 4c + 3, "
    "Delta_{3,3} = 4c + 7, Delta_{4,2} = -4c - 5; 4c + 7 vanishes at -7/4, not -3/2";

}  // namespace

EscapeBound escape_bound(const Family& fam) {
  const unsigned d = fam.d();
  EscapeBound b;
  switch (fam.kind()) {
    case FamilyKind::unicritical:
      if (d < 2) throw std::invalid_argument("escape bound needs d >= 2");
      b.base = 2;
      b.root = d - 1;
      b.text = d == 2 ? "2" : "2^(1/" + std::to_string(d - 1) + ")";
      return b;
    case FamilyKind::linear_term:
      b.base = 2 * d + 2;
      b.root = d;
      b.factor = make_rational(d + 1, d);
      b.text = std::to_string(2 * d + 2) + "^(1/" + std::to_string(d) + ")*(" + str(b.factor) + ")";
      return b;
    default:
      throw std::invalid_argument("no escape bound for " + fam.label());
  }
}

EscapeCertificate certified_escape(const Family& fam, const Rational& c) {
  EscapeCertificate out;
  const unsigned d = fam.d();
  const Rational a = abs(c);
  std::ostringstream os;
  if (fam.kind() == FamilyKind::unicritical) {
    const Rational t = rpow(a, d - 1);
    os << "|c|^(d-1) = " << str(t);
    if (t <= 2) {
      os << " <= 2";
      out.chain = os.str();
      return out;
    }
    // |c|^(d-1) = 2(1 + e); on |z| >= |c|: |f(z)| >= |z|(|c|^(d-1) - 1) >= (1 + e)|z|
    const Rational e = t / 2 - 1;
    const Rational fc = abs(rpow(c, d) + c);
    const Rational lower = a * (t - 1);
    const bool ok = e > 0 && t - 1 >= 1 + e && fc >= lower && lower >= (1 + e) * a;
    os << " > 2; e = " << str(e) << "; |f(c)| = " << str(fc) << " >= |c|(|c|^(d-1) - 1) = "
       << str(lower) << " >= (1 + e)|c| = " << str((1 + e) * a);
    out.escapes = ok;
    out.chain = os.str();
    return out;
  }
  if (fam.kind() == FamilyKind::linear_term) {
    // |critical value| = d |c/(d+1)|^(1 + 1/d); raise both sides to the d-th power
    const Rational lhs = rpow(Rational(d), d) * rpow(a / (d + 1), d + 1);
    const Rational r_pow = Rational(2 * d + 2) * rpow(make_rational(d + 1, d), d);
    const bool past_radius = rpow(a, d) > r_pow;
    out.escapes = a > 1 && lhs > 2 * a;
    os << "|c| = " << str(a) << (a > 1 ? " > 1" : " <= 1") << "; d^d |c/(d+1)|^(d+1) = " << str(lhs)
       << (lhs > 2 * a ? " > " : " <= ") << "2|c| = " << str(2 * a) << "; |c|^d "
       << (past_radius ? "> " : "<= ") << "r(d)^d = " << str(r_pow);
    out.chain = os.str();
    return out;
  }
  throw std::invalid_argument("no escape test for " + fam.label());
}

Integer naive_height(const Rational& gamma) {
  Rational g = gamma;
  g.canonicalize();
  Integer p = abs(g.get_num());
  const Integer& q = g.get_den();
  return p > q ? p : q;
}

std::vector<Rational> enumerate_candidates(unsigned d) {
  if (d < 2) throw std::invalid_argument("candidates need d >= 2");
  const Integer dd = pow(Integer(d), d);
  const Integer h_bound = 2 * dd;  // H^(d-1) <= 2 d^d
  std::vector<Rational> out;
  for (Integer q = 1; pow(q, d - 1) <= dd; ++q) {
    if (dd % pow(q, d - 1) != 0) continue;
    for (Integer p = -q * 4; p <= q * 4; ++p) {
      if (gcd(p, q) != 1) continue;
      const Integer h = abs(p) > q ? abs(p) : q;
      if (pow(h, d - 1) > h_bound) continue;
      Rational g(p, q);
      g.canonicalize();
      const bool in_region = d == 2 ? (g >= -2 && g <= make_rational(1, 4))
                                    : pow(abs(p), d - 1) <= 2 * pow(q, d - 1);
      if (in_region) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::parabolic: return "parabolic";
    case Status::attracting: return "attracting";
    case Status::superattracting: return "superattracting";
    case Status::repelling_all_tested: return "repelling-all-tested";
    case Status::unresolved: return "unresolved";
    case Status::excluded_by_escape: return "excluded-by-escape";
  }
  return "unknown";
}

IntPoly specialize_delta(unsigned d, unsigned m, const Rational& gamma) {
  const BiPoly& delta = cached_delta(d, m);
  std::vector<Rational> vals;
  Integer den = 1;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    vals.push_back(eval(delta[i], gamma));
    den = lcm(den, vals.back().get_den());
  }
  std::vector<Integer> cs;
  for (const auto& v : vals) cs.push_back(Rational(v * den).get_num());
  return IntPoly(std::move(cs), 'x');
}

std::size_t sturm_count(const IntPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm count of zero");
  if (a >= b) return 0;
  const auto seq = sturm_sequence(p);
  return variations(seq, a) - variations(seq, b);
}

std::pair<Rational, Rational> isolate_root(const IntPoly& p, Rational a, Rational b, unsigned bits) {
  const auto seq = sturm_sequence(p);
  auto count = [&](const Rational& lo, const Rational& hi) { return variations(seq, lo) - variations(seq, hi); };
  if (count(a, b) == 0) throw std::invalid_argument("no root to isolate");
  const Rational width = make_rational(1, 1L << std::min(bits, 62u));
  while (count(a, b) > 1 || b - a > width) {
    Rational mid = (a + b) / 2;
    if (count(a, mid) > 0)
      b = mid;
    else
      a = mid;
  }
  return {a, b};
}

Candidate classify(unsigned d, const Rational& gamma, const ClassifyOptions& opt) {
  Candidate out;
  out.gamma = gamma;
  out.d = d;
  const Family fam = Family::unicritical(d);
  const EscapeCertificate esc = certified_escape(fam, gamma);
  if (esc.escapes) {
    out.status = Status::excluded_by_escape;
    out.witness = esc.chain;
    return out;
  }
  const unsigned m_top = usable_periods(d, opt.m_max);
  for (unsigned m = 1; m <= m_top; ++m) {
    const IntPoly P = specialize_delta(d, m, gamma);
    if (P.coefficient(0) == 0) {
      out.status = Status::superattracting;
      out.period = m;
      out.specialized = P;
      out.witness = "x divides delta_" + std::to_string(m) + " = " + to_string(P);
      return out;
    }
    for (unsigned j = 1; j <= opt.j_max; ++j) {
      if (resultant_multiplication(cyclotomic(j), P) != 0) continue;
      out.status = Status::parabolic;
      out.period = m;
      out.multiplier_order = j;
      out.specialized = P;
      out.multiplicity = cyclotomic_multiplicity(P, cyclotomic(j));
      out.witness = "(" + to_string(cyclotomic(j)) + ")^" + std::to_string(out.multiplicity) +
                    " divides delta_" + std::to_string(m) + " = " + to_string(P);
      return out;
    }
    // P(1) and P(-1) are nonzero here once j_max >= 2
    if (opt.j_max >= 2 && sturm_count(P, Rational(-1), Rational(1)) > 0) {
      out.status = Status::attracting;
      out.period = m;
      out.specialized = P;
      out.root_interval = isolate_root(P, Rational(-1), Rational(1));
      out.witness = "delta_" + std::to_string(m) + " = " + to_string(P) + " has a root in (" +
                    str(out.root_interval->first) + ", " + str(out.root_interval->second) + "]";
      return out;
    }
  }
  out.status = Status::unresolved;
  out.witness = "no multiplier in (-1, 1) or of order <= " + std::to_string(opt.j_max) +
                " for periods <= " + std::to_string(m_top);
  if (m_top < opt.m_max) out.note = "periods above " + std::to_string(m_top) + " skipped by the degree guardrail";
  if (d == 2 && gamma == make_rational(-3, 2)) out.note = kMinusThreeHalves;
  return out;
}

Candidate chebyshev_note(const ClassifyOptions& opt) {
  Candidate out;
  out.gamma = -2;
  out.d = 2;
  const unsigned m_top = usable_periods(2, opt.m_max);
  bool consistent = true;
  for (unsigned m = 1; m <= m_top && consistent; ++m) {
    const IntPoly P = specialize_delta(2, m, out.gamma);
    for (unsigned j = 1; j <= opt.j_max; ++j)
      if (resultant_multiplication(cyclotomic(j), P) == 0) consistent = false;
    if (eval(P, Rational(-1)) == 0 || sturm_count(P, Rational(-1), Rational(1)) > 0) consistent = false;
    if (m == 1) out.specialized = P;
  }
  out.status = consistent ? Status::repelling_all_tested : Status::unresolved;
  out.witness = "every periodic point of z^2 - 2 is repelling (Chebyshev); delta_m at c = -2 has no root in "
                "[-1, 1] and no cyclotomic factor of order <= " + std::to_string(opt.j_max) +
                " for m <= " + std::to_string(m_top);
  if (!consistent) out.note = "consistency check failed";
  return out;
}

std::optional<std::pair<unsigned, unsigned>> critical_orbit_cycle(unsigned d, const Rational& gamma,
                                                                  unsigned max_steps) {
  std::vector<Rational> orbit{Rational(0)};
  for (unsigned i = 0; i < max_steps; ++i) {
    Rational next = rpow(orbit.back(), d) + gamma;
    next.canonicalize();
    // heights grow geometrically off a finite orbit; stop once they are large
    if (mpz_sizeinbase(next.get_den().get_mpz_t(), 2) + mpz_sizeinbase(next.get_num().get_mpz_t(), 2) > 4096)
      return std::nullopt;
    for (std::size_t j = 0; j < orbit.size(); ++j)
      if (orbit[j] == next)
        return std::make_pair(static_cast<unsigned>(j), static_cast<unsigned>(orbit.size() - j));
    orbit.push_back(std::move(next));
  }
  return std::nullopt;
}

Rational logistic_parameter(const Rational& a) {
  Rational c = (2 * a - a * a) / 4;
  c.canonicalize();
  return c;
}

LogisticCase logistic_bridge(const Rational& a, const ClassifyOptions& opt) {
  LogisticCase out;
  out.a = a;
  out.c = logistic_parameter(a);
  out.candidate = out.c == -2 ? chebyshev_note(opt) : classify(2, out.c, opt);
  out.parabolic = out.candidate.status == Status::parabolic;
  if (out.parabolic) {
    out.rule = "parabolic";
  } else if (auto cyc = critical_orbit_cycle(2, out.c)) {
    out.rule = "finite critical orbit (preperiod " + std::to_string(cyc->first) + ", period " +
               std::to_string(cyc->second) + "): no parabolic cycle";
  } else {
    out.rule = "not parabolic by " + status_name(out.candidate.status);
  }
  return out;
}

Verdict verify_candidate(const Candidate& c) {
  Verdict v = make_verdict("candidate-" + status_name(c.status));
  v.param("d", c.d).param("gamma", str(c.gamma));
  switch (c.status) {
    case Status::parabolic: {
      const IntPoly P = specialize_delta(c.d, c.period, c.gamma);
      const Integer r = resultant_multiplication(cyclotomic(c.multiplier_order), P);
      v.pass = P == c.specialized && r == 0;
      v.residual = r.get_str();
      v.witness = c.witness;
      break;
    }
    case Status::superattracting: {
      const IntPoly P = specialize_delta(c.d, c.period, c.gamma);
      v.pass = P == c.specialized && P.coefficient(0) == 0;
      v.residual = P.coefficient(0).get_str();
      v.witness = c.witness;
      break;
    }
    case Status::attracting: {
      const IntPoly P = specialize_delta(c.d, c.period, c.gamma);
      const auto& [lo, hi] = *c.root_interval;
      const bool inside = lo >= -1 && hi <= 1 && eval(P, Rational(1)) != 0;
      v.pass = P == c.specialized && inside && sturm_count(P, lo, hi) >= 1;
      v.residual = v.pass ? "0" : "no root on the recorded interval";
      v.witness = c.witness;
      break;
    }
    case Status::excluded_by_escape: {
      const EscapeCertificate e = certified_escape(Family::unicritical(c.d), c.gamma);
      v.pass = e.escapes;
      v.witness = e.chain;
      break;
    }
    case Status::repelling_all_tested:
    case Status::unresolved:
      v.pass = true;
      v.witness = "no positive claim to re-check";
      break;
  }
  return v;
}

std::vector<Candidate> classify_all(unsigned d, const ClassifyOptions& opt) {
  const std::vector<Rational> gammas = enumerate_candidates(d);
  // fill the delta cache first so the workers only read it
  for (unsigned m = 1; m <= usable_periods(d, opt.m_max); ++m) cached_delta(d, m);
  std::vector<Candidate> out(gammas.size());
  parallel_for(gammas.size(), [&](std::size_t i) {
    out[i] = d == 2 && gammas[i] == -2 ? chebyshev_note(opt) : classify(d, gammas[i], opt);
  });
  return out;
}

}  // namespace dynatomic
