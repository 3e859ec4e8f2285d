#ifndef GALE_RESULTANT_HPP
#define GALE_RESULTANT_HPP

#include "gale/poly.hpp"

namespace gale {

/// Determinant of a square rational matrix by Gaussian elimination.
Rat rat_determinant(RatMatrix m);

/// Sylvester resultant of two bivariate polynomials with respect to variable
/// `elim` (0 or 1), returned as a univariate coefficient vector (degree
/// ascending) in the other variable. Computed by evaluation at integer points
/// and exact interpolation. When one input does not involve `elim`, the
/// resultant degenerates to a power of that input.
RatVector bivariate_resultant(const SparsePoly& p, const SparsePoly& q, std::size_t elim);

}  // namespace gale

#endif
