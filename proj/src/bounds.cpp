#include "gale/bounds.hpp"

#include <cmath>

#include "gale/exact_arith.hpp"

namespace gale {

namespace {

Rat pow2(long e) {
    if (e >= 0) return Rat(Int(1) << e);
    return Rat(1, Int(1) << (-e));
}

Rat ipow(std::size_t base, std::size_t e) {
    Rat acc = 1;
    for (std::size_t k = 0; k < e; ++k) acc *= Rat(Int(base));
    return acc;
}

long binom2(long k) { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace

Rat descartes_like_bound(std::size_t n, std::size_t ell) {
    Rat factor = 1 + pow2(-static_cast<long>(ell)) * (1 + Rat(Int(ell), Int(n)));
    return factor * pow2(binom2(static_cast<long>(ell))) * ipow(n, ell);
}

Rat descartes_like_bound_unfactored(std::size_t n, std::size_t ell) {
    return pow2(binom2(static_cast<long>(ell))) * ipow(n, ell) +
           Rat(Int(n + ell)) * pow2(binom2(static_cast<long>(ell) - 1) - 1) * ipow(n, ell - 1);
}

Rat fewnomial_face_bound(std::size_t n, std::size_t ell,
                         const std::vector<std::size_t>& f_vector) {
    if (f_vector.size() != ell) throw ParseError("f_vector must have length ell");
    Rat acc = pow2(binom2(static_cast<long>(ell))) * ipow(n, ell);
    for (std::size_t j = 1; j <= ell; ++j) {
        std::size_t d = ell - j;
        acc += Rat(1, 2) * Rat(Int(f_vector[d])) * pow2(binom2(static_cast<long>(d))) *
               ipow(n, d);
    }
    return acc;
}

std::vector<Rat> tighter_estimate(const std::vector<std::size_t>& M_counts, std::size_t n,
                                  std::size_t ell) {
    std::vector<Rat> out;
    for (std::size_t j = 2; j <= ell; ++j) {
        std::size_t d = ell - j;
        if (d >= M_counts.size()) throw ParseError("missing M count");
        out.push_back(Rat(Int(M_counts[d])) * pow2(static_cast<long>(d)) * ipow(n, d));
    }
    return out;
}

HypothesisFlags check_theorem_hypotheses(const FewnomialSystem& F,
                                         std::optional<std::size_t> distinguished) {
    HypothesisFlags flags;
    std::size_t m = F.n + F.ell;

    // exponents of all monomials other than the distinguished one, translated
    // so the distinguished exponent is the origin (the constant term has
    // exponent zero)
    RatMatrix T(F.n, m);
    if (!distinguished) {
        for (std::size_t i = 0; i < F.n; ++i)
            for (std::size_t j = 0; j < m; ++j) T(i, j) = Rat(F.A(i, j));
    } else {
        std::size_t k = *distinguished;
        std::size_t col = 0;
        for (std::size_t j = 0; j <= m; ++j) {
            if (j == k) continue;
            for (std::size_t i = 0; i < F.n; ++i) {
                Int a = (j < m) ? F.A(i, j) : Int(0);  // j == m is the constant
                T(i, col) = Rat(a - F.A(i, k));
            }
            ++col;
        }
    }
    // origin in the relative interior <=> exists mu >= 1 with T mu = 0;
    // substitute mu = 1 + u, u >= 0
    RatVector rhs(F.n);
    for (std::size_t i = 0; i < F.n; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < T.cols(); ++j) s += T(i, j);
        rhs[i] = -s;
    }
    flags.interior_exponent = simplex_feasible(T, rhs).has_value();

    // coefficient matrix of the non-distinguished monomials
    RatMatrix Cfull(F.n, m + 1);
    for (std::size_t i = 0; i < F.n; ++i) {
        for (std::size_t j = 0; j < m; ++j) Cfull(i, j) = F.C(i, j);
        Cfull(i, m) = F.b[i];
    }
    std::size_t drop = distinguished ? *distinguished : m;
    RatMatrix Cother(F.n, m);
    std::size_t col = 0;
    for (std::size_t j = 0; j <= m; ++j) {
        if (j == drop) continue;
        for (std::size_t i = 0; i < F.n; ++i) Cother(i, col) = Cfull(i, j);
        ++col;
    }
    flags.no_positive_C_kernel = !positive_kernel_vector(Cother).has_value();
    return flags;
}

BoundReport bound_report(const FewnomialSystem& F, const std::vector<std::size_t>& f_vector,
                         const std::vector<std::size_t>& M_counts,
                         std::optional<std::size_t> distinguished) {
    BoundReport rep;
    rep.descartes_like = descartes_like_bound(F.n, F.ell);
    rep.fewnomial_face = fewnomial_face_bound(F.n, F.ell, f_vector);
    double e2 = std::exp(1.0) * std::exp(1.0);
    rep.khovanskii_style = (e2 + 3) / 4 *
                           std::pow(2.0, static_cast<double>(binom2(F.ell))) *
                           std::pow(static_cast<double>(F.n), static_cast<double>(F.ell));
    rep.tighter_Tj = tighter_estimate(M_counts, F.n, F.ell);
    rep.hypotheses = check_theorem_hypotheses(F, distinguished);
    return rep;
}

}  // namespace gale
