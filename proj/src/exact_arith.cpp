#include "gale/exact_arith.hpp"

#include <algorithm>
#include <cassert>

namespace gale {

std::vector<Rat> operator*(const Rat& s, const RatVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

EchelonResult echelon_reduce(const RatMatrix& C, const RatVector& b,
                             const std::vector<std::size_t>& param_cols) {
    const std::size_t n = C.rows();
    const std::size_t m = C.cols();
    const std::size_t ell = param_cols.size();
    assert(b.size() == n);
    assert(m == n + ell);

    std::vector<bool> is_param(m, false);
    for (auto c : param_cols) is_param[c] = true;

    EchelonResult res;
    for (std::size_t j = 0; j < m; ++j)
        if (!is_param[j]) res.perm.push_back(j);
    for (auto c : param_cols) res.perm.push_back(c);

    // Work matrix [C_nonparam | C_param | b], n x (n + ell + 1).
    RatMatrix W(n, m + 1);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i) W(i, k) = C(i, res.perm[k]);
    for (std::size_t i = 0; i < n; ++i) W(i, m) = b[i];

    for (std::size_t col = 0; col < n; ++col) {
        // Partial pivoting: largest absolute value, lowest row index on ties.
        std::size_t piv = col;
        Rat best = abs(W(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            Rat a = abs(W(i, col));
            if (a > best) { best = a; piv = i; }
        }
        if (best == 0)
            throw SingularBlockError("echelon_reduce: non-parameter columns are rank-deficient");
        W.swap_rows(col, piv);
        Rat p = W(col, col);
        for (std::size_t j = col; j <= m; ++j) W(col, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || W(i, col) == 0) continue;
            Rat f = W(i, col);
            for (std::size_t j = col; j <= m; ++j) W(i, j) -= f * W(col, j);
        }
    }

    // Now W = [I | -L | -lambda] for the convention C.m + b = 0 with
    // z_i = L_i(y) + lambda_i; negate the trailing block.
    res.L = RatMatrix(n, ell);
    res.lam = RatVector(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ell; ++j) res.L(i, j) = -W(i, n + j);
        res.lam[i] = -W(i, m);
    }
    return res;
}

RatMatrix rat_inverse(const RatMatrix& M) {
    const std::size_t n = M.rows();
    assert(M.cols() == n);
    RatMatrix W(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) W(i, j) = M(i, j);
        W(i, n + i) = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        Rat best = abs(W(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            Rat a = abs(W(i, col));
            if (a > best) { best = a; piv = i; }
        }
        if (best == 0) throw SingularMatrixError("rat_inverse: singular matrix");
        W.swap_rows(col, piv);
        Rat p = W(col, col);
        for (std::size_t j = col; j < 2 * n; ++j) W(col, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || W(i, col) == 0) continue;
            Rat f = W(i, col);
            for (std::size_t j = col; j < 2 * n; ++j) W(i, j) -= f * W(col, j);
        }
    }
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = W(i, n + j);
    return out;
}

std::size_t rat_rank(RatMatrix M) {
    const std::size_t r = M.rows(), c = M.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t piv = rank;
        while (piv < r && M(piv, col) == 0) ++piv;
        if (piv == r) continue;
        M.swap_rows(rank, piv);
        Rat p = M(rank, col);
        for (std::size_t i = rank + 1; i < r; ++i) {
            if (M(i, col) == 0) continue;
            Rat f = M(i, col) / p;
            for (std::size_t j = col; j < c; ++j) M(i, j) -= f * M(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::size_t int_rank(const IntMatrix& A) {
    // Fraction-free (Bareiss) elimination.
    IntMatrix M = A;
    const std::size_t r = M.rows(), c = M.cols();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t piv = rank;
        while (piv < r && M(piv, col) == 0) ++piv;
        if (piv == r) continue;
        M.swap_rows(rank, piv);
        for (std::size_t i = rank + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j)
                M(i, j) = (M(rank, col) * M(i, j) - M(i, col) * M(rank, j)) / prev;
            M(i, col) = 0;
        }
        prev = M(rank, col);
        ++rank;
    }
    return rank;
}

std::vector<RatVector> rat_right_kernel(const RatMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    RatMatrix W = M;
    std::vector<std::ptrdiff_t> pivot_of_col(c, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t piv = rank;
        while (piv < r && W(piv, col) == 0) ++piv;
        if (piv == r) continue;
        W.swap_rows(rank, piv);
        Rat p = W(rank, col);
        for (std::size_t j = col; j < c; ++j) W(rank, j) /= p;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == rank || W(i, col) == 0) continue;
            Rat f = W(i, col);
            for (std::size_t j = col; j < c; ++j) W(i, j) -= f * W(rank, j);
        }
        pivot_of_col[col] = static_cast<std::ptrdiff_t>(rank);
        ++rank;
    }
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < c; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        RatVector v(c);
        v[free] = 1;
        for (std::size_t col = 0; col < c; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -W(static_cast<std::size_t>(pivot_of_col[col]), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVector> simplex_feasible(const RatMatrix& A, const RatVector& b) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    assert(b.size() == m);

    // Phase-1 tableau with artificial variables; rows scaled so rhs >= 0.
    // Columns: n structural + m artificial.
    RatMatrix T(m, n + m);
    RatVector rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rat s = (b[i] < 0) ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) T(i, j) = s * A(i, j);
        T(i, n + i) = 1;
        rhs[i] = s * b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Objective: minimize sum of artificials. Reduced costs in z.
    RatVector z(n + m);
    Rat obj = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n + m; ++j) z[j] -= T(i, j);
        obj -= rhs[i];
    }
    for (std::size_t i = 0; i < m; ++i) z[n + i] += 1;  // cost of artificials

    while (true) {
        // Bland's rule: entering column = lowest index with negative reduced cost.
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j)
            if (z[j] < 0) { enter = j; break; }
        if (enter == n + m) break;

        // Ratio test, Bland ties: lowest basis variable index.
        std::size_t leave = m;
        Rat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (T(i, enter) <= 0) continue;
            Rat ratio = rhs[i] / T(i, enter);
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave]))
            {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) break;  // unbounded; cannot happen with bounded phase-1 objective

        Rat p = T(leave, enter);
        for (std::size_t j = 0; j < n + m; ++j) T(leave, j) /= p;
        rhs[leave] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T(i, enter) == 0) continue;
            Rat f = T(i, enter);
            for (std::size_t j = 0; j < n + m; ++j) T(i, j) -= f * T(leave, j);
            rhs[i] -= f * rhs[leave];
        }
        Rat fz = z[enter];
        if (fz != 0) {
            for (std::size_t j = 0; j < n + m; ++j) z[j] -= fz * T(leave, j);
            obj -= fz * rhs[leave];
        }
        basis[leave] = enter;
    }

    if (obj != 0) return std::nullopt;
    RatVector x(n);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = rhs[i];
    return x;
}

std::optional<RatVector> lp_feasible_nonneg_kernel(const RatMatrix& M) {
    const std::size_t r = M.rows();
    if (r == 0) return std::nullopt;
    const std::size_t k = M.cols();
    // v >= 0, v M = 0, sum v = 1  ->  [M^T; 1^T] v = (0,...,0,1).
    RatMatrix A(k + 1, r);
    RatVector b(k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < r; ++i) A(j, i) = M(i, j);
    for (std::size_t i = 0; i < r; ++i) A(k, i) = 1;
    b[k] = 1;
    return simplex_feasible(A, b);
}

}  // namespace gale
