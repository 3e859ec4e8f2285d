#ifndef GALE_BOUNDS_HPP
#define GALE_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gale/system.hpp"

namespace gale {

struct HypothesisFlags {
    bool interior_exponent = false;
    bool no_positive_C_kernel = false;
};

struct BoundReport {
    Rat descartes_like;
    Rat fewnomial_face;
    double khovanskii_style = 0;  // (e^2+3)/4 2^{binom(ell,2)} n^ell, context only
    std::vector<Rat> tighter_Tj;  // j = 2..ell
    HypothesisFlags hypotheses;
};

/// (1 + 2^{-ell}(1 + ell/n)) 2^{binom(ell,2)} n^ell, exact.
Rat descartes_like_bound(std::size_t n, std::size_t ell);

/// Equivalent unfactored form 2^{binom(ell,2)} n^ell + (n+ell) 2^{binom(ell-1,2)-1} n^{ell-1}.
Rat descartes_like_bound_unfactored(std::size_t n, std::size_t ell);

/// 2^{binom(ell,2)} n^ell + 1/2 sum_j f_{ell-j} 2^{binom(ell-j,2)} n^{ell-j};
/// f_vector[d] = number of dimension-d faces, length ell.
Rat fewnomial_face_bound(std::size_t n, std::size_t ell, const std::vector<std::size_t>& f_vector);

/// |T_j| <= M_{ell-j} 2^{ell-j} n^{ell-j} for j = 2..ell; M_counts[d] = M_d.
std::vector<Rat> tighter_estimate(const std::vector<std::size_t>& M_counts, std::size_t n,
                                  std::size_t ell);

/// Interior-exponent and sign-kernel hypotheses. The distinguished monomial
/// defaults to the constant term (exponent 0, coefficients b); pass a column
/// index to distinguish one of the n+ell monomials instead.
HypothesisFlags check_theorem_hypotheses(const FewnomialSystem& F,
                                         std::optional<std::size_t> distinguished = {});

BoundReport bound_report(const FewnomialSystem& F, const std::vector<std::size_t>& f_vector,
                         const std::vector<std::size_t>& M_counts,
                         std::optional<std::size_t> distinguished = {});

}  // namespace gale

#endif
