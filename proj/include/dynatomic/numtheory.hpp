#pragma once

#include <cstdint>
#include <vector>

#include "dynatomic/polynomial.hpp"

namespace dynatomic {

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// The Moebius degree sum d_m = sum_{k | m} d^k mu(m/k).
Integer moebius_degree(std::uint64_t d, std::uint64_t m);

/// n-th cyclotomic polynomial in x, built by dividing x^n - 1 by the
/// cyclotomic polynomials of the proper divisors.
const IntPoly& cyclotomic(std::uint64_t n);

}  // namespace dynatomic
