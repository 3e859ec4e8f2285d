#ifndef GALE_EXACT_ARITH_HPP
#define GALE_EXACT_ARITH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gale/matrix.hpp"

namespace gale {

struct EchelonResult {
    /// perm[k] = original column index occupying position k after reordering
    /// (non-parameter columns first, then the parameter columns in the order given).
    std::vector<std::size_t> perm;
    RatMatrix L;    // n x ell
    RatVector lam;  // n
};

/// Reduces [C | b] with the given parameter columns moved last, to the form
/// [-I_n | L | lambda] by Gaussian elimination with exact partial pivoting
/// (largest |pivot|, ties broken by lowest row index).
///
/// The system convention is  C.m(x) + b = 0; substituting z_i = L_i(y) + lambda_i
/// for the i-th non-parameter monomial and y_j for the j-th parameter monomial
/// satisfies every equation identically in y.
EchelonResult echelon_reduce(const RatMatrix& C, const RatVector& b,
                             const std::vector<std::size_t>& param_cols);

/// Exact inverse; throws SingularMatrixError.
RatMatrix rat_inverse(const RatMatrix& M);

/// Rank over Q by fraction-free elimination.
std::size_t int_rank(const IntMatrix& A);

std::size_t rat_rank(RatMatrix M);

/// Basis (as rows) of { x : M x = 0 } over Q.
std::vector<RatVector> rat_right_kernel(const RatMatrix& M);

/// Exact phase-1 simplex feasibility: finds x >= 0 with A x = b, or nullopt.
/// Bland's rule, so termination is guaranteed.
std::optional<RatVector> simplex_feasible(const RatMatrix& A, const RatVector& b);

/// Nonzero v >= 0 with v M = 0 and sum(v) = 1, if one exists.
std::optional<RatVector> lp_feasible_nonneg_kernel(const RatMatrix& M);

std::vector<Rat> operator*(const Rat& s, const RatVector& v);

}  // namespace gale

#endif
