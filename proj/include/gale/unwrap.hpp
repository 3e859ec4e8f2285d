#ifndef GALE_UNWRAP_HPP
#define GALE_UNWRAP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gale/system.hpp"

namespace gale {

/// The data of the unwrapping map: a full-rank square submatrix A' of the
/// exponent matrix, its inverse, and the master forms indexed by the original
/// monomial columns.
struct UnwrapContext {
    IntMatrix A_prime;                   // n x n, det != 0
    RatMatrix A_prime_inv;
    std::vector<std::size_t> column_indices;  // selected monomials
    std::vector<AffineForm> forms;       // forms[j] belongs to monomial column j
};

/// Selects the first n linearly independent columns of A (greedy in-order
/// scan, exact rank certification). Throws RankDeficientError when
/// rank(A) < n. The `forms` field is left empty.
UnwrapContext choose_submatrix(const IntMatrix& A);

/// choose_submatrix plus the Gale system's forms permuted back into the
/// original column order of F.
UnwrapContext unwrap_context(const FewnomialSystem& F, const GaleSystem& G);

/// z = (Lambda_1(s*), ..., Lambda_{n+ell}(s*)) in original column order,
/// v = the selected coordinates, w = log v, t = exp(w A'^{-1}). Throws
/// NonPositiveCoordinateError when a selected coordinate is not positive.
std::vector<BigFloat> unwrap_point(const std::vector<BigFloat>& s_star,
                                   const UnwrapContext& ctx, int precision_bits);

struct SoftCertificate {
    std::vector<BigFloat> residuals;  // max-norm of C m(x) + b, per iteration
    std::vector<BigFloat> steps;      // max-norm of the Newton updates
    bool passed = false;              // quadratic-decay evidence observed
};

/// Newton iteration on x -> C m(x) + b starting from t_star > 0. Works at
/// max(106, start_bits) bits and doubles the precision each iteration.
/// Throws SingularMatrixError on a singular Jacobian and DivergenceError when
/// the residual grows without bound.
std::pair<std::vector<BigFloat>, SoftCertificate> newton_refine(
    const FewnomialSystem& F, const std::vector<BigFloat>& t_star, int iters = 2,
    int start_bits = 106);

/// Writes <path>.sys and <path>.pts in the alphaCertified plain-text input
/// format (rational coefficients, real points with zero imaginary parts).
/// Negative exponents are cleared per equation by a monomial shift, which
/// preserves the zero set in the positive orthant.
void emit_certification_files(const FewnomialSystem& F,
                              const std::vector<std::vector<BigFloat>>& points,
                              const std::string& path);

/// Round-trip readers for the emitted files.
struct CertSystem {
    std::size_t nvars = 0;
    /// per polynomial: list of (exponents, coefficient)
    std::vector<std::vector<std::pair<std::vector<Int>, Rat>>> polys;
};
CertSystem read_certification_system(const std::string& file);
std::vector<RatVector> read_certification_points(const std::string& file);

}  // namespace gale

#endif
