#include "gale/resultant.hpp"

#include "gale/univariate.hpp"

namespace gale {

Rat rat_determinant(RatMatrix m) {
    std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            m.swap_rows(piv, k);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

namespace {

/// Sylvester determinant of p, q (univariate coefficient vectors in the
/// eliminated variable) built with fixed nominal degrees dp, dq.
Rat sylvester_det(const RatVector& p, int dp, const RatVector& q, int dq) {
    std::size_t n = dp + dq;
    RatMatrix s(n, n);
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i)
            if (static_cast<std::size_t>(i) < p.size()) s(r, r + dp - i) = p[i];
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i)
            if (static_cast<std::size_t>(i) < q.size()) s(dq + r, r + dq - i) = q[i];
    return rat_determinant(std::move(s));
}

/// Exact polynomial interpolation through (xs[i], vs[i]) by Newton divided
/// differences; returns ascending coefficients.
RatVector interpolate(const RatVector& xs, const RatVector& vs) {
    std::size_t n = xs.size();
    RatVector dd = vs;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    RatVector poly{dd[n - 1]};
    for (std::size_t k = n - 1; k > 0; --k) {
        // poly := dd[k-1] + (x - xs[k-1]) * poly
        RatVector next(poly.size() + 1);
        next[0] = dd[k - 1];
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] -= xs[k - 1] * poly[i];
            next[i + 1] += poly[i];
        }
        poly = std::move(next);
    }
    return uni_trim(std::move(poly));
}

RatVector uni_pow(const RatVector& base, int e) {
    RatVector acc{1};
    for (int k = 0; k < e; ++k) {
        RatVector next(acc.size() + base.size() - 1);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += acc[i] * base[j];
        acc = std::move(next);
    }
    return uni_trim(std::move(acc));
}

}  // namespace

RatVector bivariate_resultant(const SparsePoly& p, const SparsePoly& q, std::size_t elim) {
    if (p.nvars() != 2 || q.nvars() != 2)
        throw GaleError("bivariate_resultant expects two variables");
    if (p.is_zero() || q.is_zero())
        throw ZeroPolynomialError("bivariate_resultant of the zero polynomial");
    std::size_t keep = 1 - elim;
    int dp = p.degree_in(elim), dq = q.degree_in(elim);
    if (dp == 0 && dq == 0)
        throw GaleError("bivariate_resultant: neither input involves the variable");
    if (dq == 0) {
        RatVector base(q.degree_in(keep) + 1);
        for (const auto& [e, c] : q.terms()) base[e[keep]] += c;
        return uni_pow(base, dp);
    }
    if (dp == 0) {
        RatVector base(p.degree_in(keep) + 1);
        for (const auto& [e, c] : p.terms()) base[e[keep]] += c;
        return uni_pow(base, dq);
    }

    // coefficients in elim, each a univariate in keep
    auto pc = p.coeffs_in(elim);
    auto qc = q.coeffs_in(elim);
    int bound = dq * p.degree_in(keep) + dp * q.degree_in(keep);

    RatVector xs, vs;
    for (int t = 0; t <= bound; ++t) {
        Rat x = (t % 2 == 0) ? Rat(t / 2) : Rat(-(t / 2 + 1));
        RatVector at{keep == 0 ? x : Rat(0), keep == 1 ? x : Rat(0)};
        RatVector pe(dp + 1), qe(dq + 1);
        for (int i = 0; i <= dp; ++i) pe[i] = pc[i].eval(at);
        for (int i = 0; i <= dq; ++i) qe[i] = qc[i].eval(at);
        xs.push_back(x);
        vs.push_back(sylvester_det(pe, dp, qe, dq));
    }
    return interpolate(xs, vs);
}

}  // namespace gale
