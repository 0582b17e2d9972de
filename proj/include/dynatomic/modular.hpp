#pragma once

// Multi-modular characteristic polynomials of integer matrices given
// implicitly as multiplication operators on Z[z]/(F).

#include <cstdint>
#include <optional>
#include <vector>

#include "dynatomic/polynomial.hpp"

namespace dynatomic {

/// Primes below 2^62, largest first, cached; deterministic Miller-Rabin.
std::uint64_t modular_prime(std::size_t index);

bool is_prime_u64(std::uint64_t n);

/// Upper bound on the absolute value of every complex root of a monic
/// integer polynomial (Fujiwara's bound, rounded up to an integer).
Integer root_modulus_bound(const IntPoly& monic);

/// sum_j |g_j| r^j, an upper bound for |g(a)| whenever |a| <= r.
Integer abs_value_bound(const IntPoly& g, const Integer& r);

/// Res_z(F, x - G) in Z[x] for monic F in Z[z], computed as the
/// characteristic polynomial of multiplication by G modulo F. Residues are
/// taken modulo enough 62-bit primes to cover the coefficient bound implied
/// by `eigen_bound` (every G(a) with F(a) = 0 satisfies |G(a)| <=
/// eigen_bound); when no bound is supplied one is derived from the roots of F.
IntPoly charpoly_resultant_modular(const IntPoly& f, const IntPoly& g,
                                   std::optional<Integer> eigen_bound = {});

}  // namespace dynatomic
