#ifndef GALE_LATTICE_HPP
#define GALE_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gale/exact_arith.hpp"
#include "gale/matrix.hpp"

namespace gale {

struct KernelBasis {
    /// Columns beta^(1)..beta^(ell) of B, each of length n+ell, with A.beta = 0.
    std::vector<IntVector> vectors;
    std::vector<std::size_t> negative_counts;
};

std::size_t count_negative(const IntVector& v);

/// Saturated integer kernel basis of A (rank must equal row count), obtained
/// from a unimodular column reduction and then LLL-reduced with delta = 3/4.
KernelBasis integer_kernel_basis(const IntMatrix& A);

/// In-place LLL reduction (delta = 3/4) of the given lattice basis.
void lll_reduce(std::vector<IntVector>& basis);

/// Re-chooses a basis of the same lattice minimizing negative-entry counts:
/// exhaustive search over integer combinations with coefficients in [-10,10]
/// when ell <= small_threshold, random screening otherwise. Output sorted by
/// ascending negative-entry count.
KernelBasis optimize_signs(const KernelBasis& basis, std::size_t small_threshold = 4,
                           std::size_t samples = 2000, std::uint64_t seed = 1);

/// Strictly positive v with M v = 0 (normalized so min entry = 1), or nullopt.
std::optional<RatVector> positive_kernel_vector(const RatMatrix& M);

/// True when the integer span of the two vector sets coincides (the
/// change-of-basis matrix is unimodular).
bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

}  // namespace gale

#endif
