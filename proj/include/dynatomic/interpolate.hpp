#pragma once

#include <cstddef>
#include <span>

#include "dynatomic/polynomial.hpp"

namespace dynatomic {

/// The polynomial p in Z[c] of degree <= values.size() - 1 with p(i) =
/// values[i]. Uses Newton's forward-difference form scaled by B! so that
/// every intermediate is an integer, then divides by B! exactly; a
/// non-integral interpolant raises DivisionNotExact.
IntPoly interpolate_consecutive(std::span<const Integer> values, char var = 'c');

/// Coefficientwise version for values in Z[x]; returns a polynomial in x
/// whose coefficients are polynomials in c.
BiPoly interpolate_consecutive(std::span<const IntPoly> values, char cvar = 'c',
                               char xvar = 'x');

}  // namespace dynatomic
