#ifndef GALE_JACOBIANS_HPP
#define GALE_JACOBIANS_HPP

#include "gale/poly.hpp"
#include "gale/system.hpp"

namespace gale {

/// Cleared Jacobians of the Khovanskii-Rolle chain for ell = 2.
/// j_tilde[j-1] is the polynomial J~_j, primitive-normalized; deg <= 2^{ell-j} n.
struct JacobianChain {
    std::vector<SparsePoly> j_tilde;
    std::vector<int> expected_degree;
    std::vector<int> actual_degree;
};

/// Builds J~_2 (clearing one power of the form product from the Jacobian of
/// the two logarithmic equations) and J~_1 (from the Jacobian of the first
/// logarithmic equation and J_2). Throws DegreeOverflowError if a cleared
/// Jacobian exceeds its theoretical degree bound.
JacobianChain jacobian_chain(const GaleSystem& G);

/// p divided by the average of its largest and smallest nonzero |coefficient|.
SparsePoly scale_polynomial(const SparsePoly& p);

}  // namespace gale

#endif
