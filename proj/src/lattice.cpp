#include "gale/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace gale {

std::size_t count_negative(const IntVector& v) {
    std::size_t c = 0;
    for (const auto& x : v)
        if (x < 0) ++c;
    return c;
}

namespace {

Int max_abs(const IntVector& v) {
    Int m = 0;
    for (const auto& x : v) {
        Int a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

Int round_rat(const Rat& q) {
    // nearest integer, halves away from zero
    Int num = numerator(q), den = denominator(q);
    Int twice = 2 * num;
    if (num >= 0)
        return (twice + den) / (2 * den);
    return -((-twice + den) / (2 * den));
}

/// Column Hermite reduction of W with a unimodular transform accumulated in U
/// (W := W U implicitly; on return W U_total has its trailing columns zero on
/// all rows). Returns the number of pivot columns (= rank).
std::size_t hnf_col(IntMatrix& W, IntMatrix& U) {
    const std::size_t n = W.rows(), m = W.cols();
    std::size_t p = 0;
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < n; ++i) W(i, dst) -= q * W(i, src);
        for (std::size_t i = 0; i < m; ++i) U(i, dst) -= q * U(i, src);
    };
    for (std::size_t r = 0; r < n && p < m; ++r) {
        while (true) {
            std::size_t best = m;
            for (std::size_t j = p; j < m; ++j) {
                if (W(r, j) == 0) continue;
                if (best == m || abs(W(r, j)) < abs(W(r, best))) best = j;
            }
            if (best == m) break;  // row already clear among remaining columns
            bool others = false;
            for (std::size_t j = p; j < m; ++j) {
                if (j == best || W(r, j) == 0) continue;
                Int q = W(r, j) / W(r, best);  // truncated division
                add_col(j, best, q);
                if (W(r, j) != 0) others = true;
            }
            if (!others) {
                W.swap_cols(p, best);
                U.swap_cols(p, best);
                ++p;
                break;
            }
        }
    }
    return p;
}

}  // namespace

void lll_reduce(std::vector<IntVector>& basis) {
    const std::size_t k = basis.size();
    if (k <= 1) return;
    const Rat delta(3, 4);

    std::vector<RatVector> mu(k, RatVector(k));
    RatVector Bnorm(k);  // squared norms of Gram-Schmidt vectors

    auto gram_schmidt = [&]() {
        std::vector<RatVector> star(k);
        for (std::size_t i = 0; i < k; ++i) {
            RatVector v(basis[i].size());
            for (std::size_t t = 0; t < v.size(); ++t) v[t] = Rat(basis[i][t]);
            for (std::size_t j = 0; j < i; ++j) {
                Rat num = 0;
                for (std::size_t t = 0; t < v.size(); ++t)
                    num += Rat(basis[i][t]) * star[j][t];
                mu[i][j] = (Bnorm[j] == 0) ? Rat(0) : num / Bnorm[j];
                for (std::size_t t = 0; t < v.size(); ++t)
                    v[t] -= mu[i][j] * star[j][t];
            }
            Rat nrm = 0;
            for (const auto& x : v) nrm += x * x;
            Bnorm[i] = nrm;
            star[i] = std::move(v);
        }
    };

    gram_schmidt();
    std::size_t i = 1;
    while (i < k) {
        for (std::size_t j = i; j-- > 0;) {
            Int q = round_rat(mu[i][j]);
            if (q != 0) {
                for (std::size_t t = 0; t < basis[i].size(); ++t)
                    basis[i][t] -= q * basis[j][t];
                gram_schmidt();
            }
        }
        if (Bnorm[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * Bnorm[i - 1]) {
            ++i;
        } else {
            std::swap(basis[i], basis[i - 1]);
            gram_schmidt();
            if (i > 1) --i;
        }
    }
}

KernelBasis integer_kernel_basis(const IntMatrix& A) {
    const std::size_t n = A.rows(), m = A.cols();
    if (int_rank(A) != n)
        throw RankDeficientError("integer_kernel_basis: exponent matrix is rank-deficient");

    IntMatrix W = A;
    IntMatrix U = IntMatrix::identity(m);
    std::size_t p = hnf_col(W, U);
    assert(p == n);

    std::vector<IntVector> kernel;
    for (std::size_t j = p; j < m; ++j) kernel.push_back(U.col(j));
    lll_reduce(kernel);

    KernelBasis out;
    out.vectors = std::move(kernel);
    for (const auto& v : out.vectors) out.negative_counts.push_back(count_negative(v));
    return out;
}

namespace {

/// gcd of all k x k minors of a k x ell integer matrix (rows are coefficient
/// vectors); 1 means the rows extend to a basis of Z^ell.
Int minor_gcd(const std::vector<IntVector>& rows, std::size_t ell) {
    const std::size_t k = rows.size();
    assert(k <= ell);
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Int g = 0;
    while (true) {
        IntMatrix M(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) M(i, j) = rows[i][idx[j]];
        // determinant by fraction-free elimination
        Int det = 1;
        {
            IntMatrix T = M;
            Int prev = 1;
            bool zero = false;
            int sign = 1;
            for (std::size_t c2 = 0; c2 < k; ++c2) {
                std::size_t piv = c2;
                while (piv < k && T(piv, c2) == 0) ++piv;
                if (piv == k) { zero = true; break; }
                if (piv != c2) { T.swap_rows(c2, piv); sign = -sign; }
                for (std::size_t i = c2 + 1; i < k; ++i) {
                    for (std::size_t j = c2 + 1; j < k; ++j)
                        T(i, j) = (T(c2, c2) * T(i, j) - T(i, c2) * T(c2, j)) / prev;
                    T(i, c2) = 0;
                }
                prev = T(c2, c2);
            }
            det = zero ? Int(0) : Int(sign) * prev;
        }
        g = boost::multiprecision::gcd(g, abs(det));
        if (g == 1) return g;
        // advance to the next k-combination of {0..ell-1}
        std::size_t i = k;
        bool advanced = false;
        while (i-- > 0) {
            if (idx[i] < ell - (k - i)) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return g;
    }
}

IntVector combine(const std::vector<IntVector>& basis, const IntVector& coeff) {
    IntVector w(basis[0].size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t t = 0; t < w.size(); ++t) w[t] += coeff[j] * basis[j][t];
    return w;
}

struct Candidate {
    IntVector coeff;
    IntVector vec;
    std::size_t neg;
    Int maxabs;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
    if (a.neg != b.neg) return a.neg < b.neg;
    if (a.maxabs != b.maxabs) return a.maxabs < b.maxabs;
    return a.vec < b.vec;
}

}  // namespace

KernelBasis optimize_signs(const KernelBasis& basis, std::size_t small_threshold,
                           std::size_t samples, std::uint64_t seed) {
    const std::size_t ell = basis.vectors.size();
    if (ell == 0) return basis;
    const long box = 10;

    std::vector<Candidate> cands;
    auto push = [&](IntVector coeff) {
        bool all_zero = std::all_of(coeff.begin(), coeff.end(),
                                    [](const Int& x) { return x == 0; });
        if (all_zero) return;
        Candidate c;
        c.vec = combine(basis.vectors, coeff);
        c.coeff = std::move(coeff);
        c.neg = count_negative(c.vec);
        c.maxabs = max_abs(c.vec);
        cands.push_back(std::move(c));
    };

    if (ell <= small_threshold) {
        IntVector coeff(ell, Int(-box));
        while (true) {
            push(coeff);
            std::size_t i = 0;
            while (i < ell && coeff[i] == box) { coeff[i] = -box; ++i; }
            if (i == ell) break;
            coeff[i] += 1;
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> dist(-box, box);
        for (std::size_t s = 0; s < samples; ++s) {
            IntVector coeff(ell);
            for (auto& x : coeff) x = dist(rng);
            push(std::move(coeff));
        }
        // the original basis vectors keep the search space complete
        for (std::size_t j = 0; j < ell; ++j) {
            IntVector e(ell);
            e[j] = 1;
            push(std::move(e));
        }
    }

    std::sort(cands.begin(), cands.end(), candidate_less);

    // Greedy selection of a unimodular subset (gcd of maximal minors of the
    // coefficient rows = 1 at each step).
    std::vector<IntVector> chosen_coeff;
    std::vector<IntVector> chosen_vec;
    for (const auto& c : cands) {
        if (chosen_vec.size() == ell) break;
        auto trial = chosen_coeff;
        trial.push_back(c.coeff);
        if (minor_gcd(trial, ell) == 1) {
            chosen_coeff = std::move(trial);
            chosen_vec.push_back(c.vec);
        }
    }
    if (chosen_vec.size() < ell) {
        // Complete from the original basis; a partial selection with unit
        // minor gcd always extends over Z, and unit coefficient vectors are
        // in the candidate list, so this is only reachable for exotic inputs.
        for (std::size_t j = 0; j < ell && chosen_vec.size() < ell; ++j) {
            IntVector e(ell);
            e[j] = 1;
            auto trial = chosen_coeff;
            trial.push_back(e);
            if (minor_gcd(trial, ell) == 1) {
                chosen_coeff = std::move(trial);
                chosen_vec.push_back(basis.vectors[j]);
            }
        }
    }
    if (chosen_vec.size() < ell) return basis;  // give up, keep input

    std::stable_sort(chosen_vec.begin(), chosen_vec.end(),
                     [](const IntVector& a, const IntVector& b) {
                         return count_negative(a) < count_negative(b);
                     });
    KernelBasis out;
    out.vectors = std::move(chosen_vec);
    for (const auto& v : out.vectors) out.negative_counts.push_back(count_negative(v));
    return out;
}

std::optional<RatVector> positive_kernel_vector(const RatMatrix& M) {
    const std::size_t r = M.rows(), k = M.cols();
    // v = 1 + u with u >= 0:  M u = -M 1.
    RatVector rhs(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) rhs[i] -= M(i, j);
    auto u = simplex_feasible(M, rhs);
    if (!u) return std::nullopt;
    RatVector v(k);
    Rat mn;
    for (std::size_t j = 0; j < k; ++j) {
        v[j] = 1 + (*u)[j];
        if (j == 0 || v[j] < mn) mn = v[j];
    }
    for (auto& x : v) x /= mn;
    return v;
}

bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    if (a.size() != b.size()) return false;
    const std::size_t k = a.size();
    if (k == 0) return true;
    const std::size_t d = a[0].size();
    // Solve X a = b over Q, check X integral with det +-1.
    RatMatrix A(k, d), B(k, d);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            A(i, j) = Rat(a[i][j]);
            B(i, j) = Rat(b[i][j]);
        }
    // X = B A^T (A A^T)^{-1}
    RatMatrix At = A.transposed();
    RatMatrix G = A * At;
    RatMatrix Ginv;
    try {
        Ginv = rat_inverse(G);
    } catch (const SingularMatrixError&) {
        return false;
    }
    RatMatrix X = (B * At) * Ginv;
    // verify X A = B and integrality
    if (!((X * A) == B)) return false;
    IntMatrix Xi(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (denominator(X(i, j)) != 1) return false;
            Xi(i, j) = numerator(X(i, j));
        }
    // |det| via minor_gcd on the square matrix
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(Xi.row(i));
    return minor_gcd(rows, k) == 1;
}

}  // namespace gale
