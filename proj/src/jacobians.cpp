#include "gale/jacobians.hpp"

namespace gale {

JacobianChain jacobian_chain(const GaleSystem& G) {
    if (G.ell != 2) throw GaleError("jacobian_chain implemented for ell = 2");
    std::size_t m = G.forms.size();
    int n = static_cast<int>(m) - 2;

    std::vector<SparsePoly> lam(m);
    for (std::size_t i = 0; i < m; ++i) lam[i] = G.forms[i].poly();

    // prefix[i] = lam_0 ... lam_{i-1}, suffix[i] = lam_i ... lam_{m-1}
    std::vector<SparsePoly> prefix(m + 1), suffix(m + 1);
    prefix[0] = SparsePoly::constant(2, 1);
    suffix[m] = SparsePoly::constant(2, 1);
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * lam[i];
    for (std::size_t i = m; i > 0; --i) suffix[i - 1] = lam[i - 1] * suffix[i];
    SparsePoly D = prefix[m];

    // P[j][k] = sum_i B_ij L_{i,k} prod_{t != i} lam_t, so that
    // d phi_j / d y_k = P[j][k] / D
    SparsePoly P[2][2] = {{SparsePoly(2), SparsePoly(2)},
                          {SparsePoly(2), SparsePoly(2)}};
    for (std::size_t i = 0; i < m; ++i) {
        SparsePoly rest = prefix[i] * suffix[i + 1];
        for (std::size_t j = 0; j < 2; ++j) {
            Rat bij(G.B(i, j));
            if (bij == 0) continue;
            for (std::size_t k = 0; k < 2; ++k)
                P[j][k] = P[j][k] + rest * (bij * G.forms[i].linear[k]);
        }
    }

    JacobianChain chain;
    chain.expected_degree = {2 * n, n};

    SparsePoly N2 = (P[0][0] * P[1][1] - P[0][1] * P[1][0]).divide_exact(D);
    if (N2.total_degree() > n)
        throw DegreeOverflowError("J~_2 exceeds its degree bound");
    N2 = N2.primitive_normalized();

    SparsePoly Dx = D.derivative(0), Dy = D.derivative(1);
    SparsePoly N2x = N2.derivative(0), N2y = N2.derivative(1);
    SparsePoly N1 = (D * (P[0][0] * N2y - P[0][1] * N2x) +
                     N2 * (P[0][1] * Dx - P[0][0] * Dy))
                        .divide_exact(D);
    if (N1.total_degree() > 2 * n)
        throw DegreeOverflowError("J~_1 exceeds its degree bound");
    N1 = N1.primitive_normalized();

    chain.j_tilde = {N1, N2};
    chain.actual_degree = {N1.total_degree(), N2.total_degree()};
    return chain;
}

SparsePoly scale_polynomial(const SparsePoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError("scale_polynomial of zero");
    Rat s = (p.max_abs_coeff() + p.min_abs_coeff()) / 2;
    return p * (1 / s);
}

}  // namespace gale
