#pragma once

// Rational parabolic parameters of z^d + c: escape bounds, the height-bounded
// candidate list and an exact classification of each candidate.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dynatomic/dynamics.hpp"
#include "dynatomic/polynomial.hpp"
#include "dynatomic/verdict.hpp"

namespace dynatomic {

using Rational = mpq_class;

Rational make_rational(long p, long q);
/// Parses "p/q" or "p".
Rational parse_rational(const std::string& s);

/// radius = factor * base^(1/root).
struct EscapeBound {
  Rational base;
  unsigned root = 1;
  Rational factor{1};
  std::string text;
};

/// Unicritical: 2^(1/(d-1)). LinearTerm: (2d+2)^(1/d) (1 + 1/d).
EscapeBound escape_bound(const Family& fam);

struct EscapeCertificate {
  bool escapes = false;
  std::string chain;  // the exact inequalities that were checked
};

/// Exact version of the growth argument: for z^d + c, |c|^(d-1) > 2 and
/// |f(c)| >= |c|(|c|^(d-1) - 1) >= (1 + e)|c|; for z^(d+1) + cz, |c| > 1
/// and d^d |c/(d+1)|^(d+1) > 2|c|, i.e. every critical value lies past
/// (2|c|)^(1/d).
EscapeCertificate certified_escape(const Family& fam, const Rational& c);

Integer naive_height(const Rational& gamma);

/// Reduced gamma with q^(d-1) | d^d, H(gamma)^(d-1) <= 2 d^d, inside
/// [-2, 1/4] for d = 2 and |gamma|^(d-1) <= 2 otherwise. Ascending.
std::vector<Rational> enumerate_candidates(unsigned d);

enum class Status { parabolic, attracting, superattracting, repelling_all_tested, unresolved,
                    excluded_by_escape };
std::string status_name(Status s);

struct Candidate {
  Rational gamma;
  unsigned d = 2;
  Status status = Status::unresolved;
  unsigned period = 0;            // m, when a cycle was found
  unsigned multiplier_order = 0;  // j for parabolic
  unsigned multiplicity = 0;      // power of cyc_j dividing delta_m|_gamma
  IntPoly specialized{'x'};       // delta_m at c = gamma, the witness polynomial
  std::optional<std::pair<Rational, Rational>> root_interval;  // attracting: (lo, hi]
  std::string witness;
  std::string note;
};

struct ClassifyOptions {
  unsigned m_max = 6;
  unsigned j_max = 12;
};

/// delta_m(x) at c = gamma, as the integer polynomial Psi_m(x, d^d gamma^(d-1)).
IntPoly specialize_delta(unsigned d, unsigned m, const Rational& gamma);

/// Number of distinct real roots of p in (a, b] by a Sturm sequence.
std::size_t sturm_count(const IntPoly& p, const Rational& a, const Rational& b);

/// Bisects (a, b] until it holds exactly one root and is shorter than
/// 2^-bits. Requires sturm_count(p, a, b) > 0.
std::pair<Rational, Rational> isolate_root(const IntPoly& p, Rational a, Rational b,
                                          unsigned bits = 16);

/// m ascending: superattracting if x | P, parabolic if Res_x(cyc_j, P) = 0,
/// attracting if P has a root in (-1, 1). P = delta_m at c = gamma. For a
/// real parameter the attracting cycle is real, so real roots suffice.
Candidate classify(unsigned d, const Rational& gamma, const ClassifyOptions& opt = {});

/// z^2 - 2: every cycle repels (Chebyshev). Also checks that no delta_m at
/// c = -2, m <= m_max, has a cyclotomic factor or a root in [-1, 1].
Candidate chebyshev_note(const ClassifyOptions& opt = {});

/// 0 -> gamma -> ... computed exactly. Returns (preperiod, period) when the
/// orbit repeats within max_steps; gives up once the height passes 4096 bits.
std::optional<std::pair<unsigned, unsigned>> critical_orbit_cycle(unsigned d, const Rational& gamma,
                                                                  unsigned max_steps = 64);

struct LogisticCase {
  Rational a;
  Rational c;
  Candidate candidate;
  bool parabolic = false;
  std::string rule;
};

/// a z (1 - z) is conjugate to z^2 + (2a - a^2)/4.
Rational logistic_parameter(const Rational& a);
LogisticCase logistic_bridge(const Rational& a, const ClassifyOptions& opt = {});

/// Soundness re-check of a reported status: recomputes the resultant,
/// the x | P test or the Sturm count on the recorded interval.
Verdict verify_candidate(const Candidate& c);

/// Enumerates and classifies in parallel; d = 2 routes -2 to chebyshev_note.
std::vector<Candidate> classify_all(unsigned d, const ClassifyOptions& opt = {});

}  // namespace dynatomic
