#include "gale/system.hpp"

#include <algorithm>

#include "gale/exact_arith.hpp"

namespace gale {

void validate_fewnomial(const FewnomialSystem& F) {
    std::size_t cols = F.n + F.ell;
    if (F.A.rows() != F.n || F.A.cols() != cols || F.C.rows() != F.n ||
        F.C.cols() != cols || F.b.size() != F.n)
        throw ParseError("fewnomial system has inconsistent shapes");
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < F.n; ++i)
            if (F.A(i, j) != 0) zero = false;
        if (zero) throw ParseError("exponent column " + std::to_string(j) + " is zero");
    }
    if (int_rank(F.A) != F.n) throw RankDeficientError("exponent matrix has rank < n");
}

namespace {

/// First ell-subset (lex order on index sets) whose complement yields an
/// invertible block of C.
std::vector<std::size_t> default_params(const FewnomialSystem& F) {
    std::size_t m = F.n + F.ell;
    std::vector<std::size_t> idx(F.ell);
    for (std::size_t i = 0; i < F.ell; ++i) idx[i] = i;
    while (true) {
        try {
            echelon_reduce(F.C, F.b, idx);
            return idx;
        } catch (const SingularBlockError&) {
        }
        // advance to the next combination
        std::size_t i = F.ell;
        while (i > 0 && idx[i - 1] == m - F.ell + (i - 1)) --i;
        if (i == 0) throw SingularBlockError("no invertible parameter choice exists");
        ++idx[i - 1];
        for (std::size_t k = i; k < F.ell; ++k) idx[k] = idx[k - 1] + 1;
    }
}

}  // namespace

GaleSystem gale_transform(const FewnomialSystem& F,
                          const std::vector<std::size_t>& param_choice,
                          const std::vector<IntVector>& forced_basis) {
    validate_fewnomial(F);
    std::vector<std::size_t> params = param_choice.empty() ? default_params(F) : param_choice;
    EchelonResult ech = echelon_reduce(F.C, F.b, params);

    GaleSystem G;
    G.n = F.n;
    G.ell = F.ell;
    G.perm = ech.perm;
    G.forms.resize(F.n + F.ell);
    for (std::size_t i = 0; i < F.n; ++i) G.forms[i] = {ech.L.row(i), ech.lam[i]};
    for (std::size_t j = 0; j < F.ell; ++j) {
        RatVector e(F.ell);
        e[j] = 1;
        G.forms[F.n + j] = {e, 0};
    }

    std::vector<IntVector> basis;
    if (!forced_basis.empty()) {
        if (forced_basis.size() != F.ell)
            throw ParseError("forced basis must have ell vectors");
        for (const auto& v : forced_basis) {
            if (v.size() != F.n + F.ell) throw ParseError("forced basis vector length");
            for (std::size_t i = 0; i < F.n; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < v.size(); ++j) acc += F.A(i, j) * v[j];
                if (acc != 0) throw ParseError("forced basis vector is not in ker A");
            }
        }
        basis = forced_basis;
    } else {
        KernelBasis kb = integer_kernel_basis(F.A);
        basis = optimize_signs(kb).vectors;
    }

    G.B = IntMatrix(F.n + F.ell, F.ell);
    for (std::size_t j = 0; j < F.ell; ++j)
        for (std::size_t k = 0; k < F.n + F.ell; ++k) G.B(k, j) = basis[j][ech.perm[k]];
    return G;
}

std::optional<RatVector> recession_direction(const std::vector<AffineForm>& forms) {
    if (forms.empty()) return std::nullopt;
    std::size_t ell = forms[0].linear.size();
    std::size_t m = forms.size();
    // variables: d+ (ell), d- (ell), slacks s_i (m); rows: L_i d - s_i = 0 and
    // sum_i s_i = 1 (scales the ray away from zero)
    RatMatrix A(m + 1, 2 * ell + m);
    RatVector rhs(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < ell; ++k) {
            A(i, k) = forms[i].linear[k];
            A(i, ell + k) = -forms[i].linear[k];
        }
        A(i, 2 * ell + i) = -1;
        A(m, 2 * ell + i) = 1;
    }
    rhs[m] = 1;
    auto sol = simplex_feasible(A, rhs);
    if (!sol) return std::nullopt;
    RatVector d(ell);
    for (std::size_t k = 0; k < ell; ++k) d[k] = (*sol)[k] - (*sol)[ell + k];
    return d;
}

RatVector interior_point(const std::vector<AffineForm>& forms) {
    std::size_t ell = forms[0].linear.size();
    std::size_t m = forms.size();
    Rat t = 1;
    for (int attempt = 0; attempt < 44; ++attempt) {
        // L_i y - s_i = t - lambda_i with y = y+ - y-, s >= 0
        RatMatrix A(m, 2 * ell + m);
        RatVector rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < ell; ++k) {
                A(i, k) = forms[i].linear[k];
                A(i, ell + k) = -forms[i].linear[k];
            }
            A(i, 2 * ell + i) = -1;
            rhs[i] = t - forms[i].constant;
        }
        auto sol = simplex_feasible(A, rhs);
        if (sol) {
            RatVector y(ell);
            for (std::size_t k = 0; k < ell; ++k) y[k] = (*sol)[k] - (*sol)[ell + k];
            return y;
        }
        t /= 2;
    }
    throw EmptyChamberError("no interior point found (chamber empty or degenerate)");
}

GaleSystem compactify(const GaleSystem& G) {
    if (!chamber_is_bounded(G.forms)) {
        RatVector p = interior_point(G.forms);
        GaleSystem H = G;
        H.compactified = true;
        H.shift = p;
        // translate so p is the origin: constants become Lambda_i(p) > 0
        std::vector<AffineForm> shifted(G.forms.size());
        for (std::size_t i = 0; i < G.forms.size(); ++i)
            shifted[i] = {G.forms[i].linear, G.forms[i].eval(p)};
        // a_0 + L(u) = sum Lambda_i(u), rescaled so a_0 = 1
        Rat a0 = 0;
        RatVector L(G.ell);
        for (const auto& f : shifted) {
            a0 += f.constant;
            for (std::size_t k = 0; k < G.ell; ++k) L[k] += f.linear[k];
        }
        for (auto& c : L) c /= a0;
        // Lambda_bar_i(ybar) = L_i(ybar) + lambda_i (1 - L(ybar))
        for (std::size_t i = 0; i < shifted.size(); ++i) {
            AffineForm f = shifted[i];
            for (std::size_t k = 0; k < G.ell; ++k)
                f.linear[k] = shifted[i].linear[k] - shifted[i].constant * L[k];
            H.forms[i] = f;
        }
        AffineForm last;
        last.linear.resize(G.ell);
        for (std::size_t k = 0; k < G.ell; ++k) last.linear[k] = -L[k];
        last.constant = 1;
        H.forms.push_back(last);

        H.B = IntMatrix(G.forms.size() + 1, G.ell);
        for (std::size_t j = 0; j < G.ell; ++j) {
            Int col_sum = 0;
            for (std::size_t i = 0; i < G.forms.size(); ++i) {
                H.B(i, j) = G.B(i, j);
                col_sum += G.B(i, j);
            }
            H.B(G.forms.size(), j) = -col_sum;
        }
        return H;
    }
    return G;
}

RatVector original_coords(const GaleSystem& G, const RatVector& ybar) {
    if (!G.compactified) return ybar;
    Rat last = G.forms.back().eval(ybar);
    if (last == 0) throw PoleHitError("point at infinity of the compactification");
    RatVector y(G.ell);
    for (std::size_t k = 0; k < G.ell; ++k) y[k] = G.shift[k] + ybar[k] / last;
    return y;
}

std::vector<BigFloat> original_coords(const GaleSystem& G, const std::vector<BigFloat>& ybar) {
    if (!G.compactified) return ybar;
    BigFloat last = G.forms.back().eval(ybar);
    if (last == 0) throw PoleHitError("point at infinity of the compactification");
    std::vector<BigFloat> y(G.ell);
    for (std::size_t k = 0; k < G.ell; ++k) y[k] = to_bigfloat(G.shift[k]) + ybar[k] / last;
    return y;
}

BigFloat evaluate(const GaleSystem& G, std::size_t j, const std::vector<BigFloat>& y,
                  MasterFunctionForm form, int bits) {
    PrecisionGuard guard(bits);
    std::size_t m = G.forms.size();
    std::vector<BigFloat> lam(m);
    for (std::size_t i = 0; i < m; ++i) lam[i] = G.forms[i].eval(y);

    switch (form) {
        case MasterFunctionForm::Rational: {
            BigFloat prod = 1;
            for (std::size_t i = 0; i < m; ++i) {
                long e = static_cast<long>(G.B(i, j));
                if (e == 0) continue;
                if (lam[i] == 0) throw PoleHitError("form vanishes in rational evaluation");
                prod *= boost::multiprecision::pow(lam[i], e);
            }
            return prod - 1;
        }
        case MasterFunctionForm::Logarithmic: {
            BigFloat acc = 0;
            for (std::size_t i = 0; i < m; ++i) {
                long e = static_cast<long>(G.B(i, j));
                if (e == 0) continue;
                if (lam[i] <= 0)
                    throw OutsideChamberError("log form outside the positive chamber");
                acc += e * boost::multiprecision::log(lam[i]);
            }
            return acc;
        }
        case MasterFunctionForm::Polynomial: {
            BigFloat plus = 1, minus = 1;
            for (std::size_t i = 0; i < m; ++i) {
                long e = static_cast<long>(G.B(i, j));
                if (e > 0) plus *= boost::multiprecision::pow(lam[i], e);
                if (e < 0) minus *= boost::multiprecision::pow(lam[i], -e);
            }
            return plus - minus;
        }
    }
    throw GaleError("unknown master function form");
}

SparsePoly gale_polynomial_raw(const GaleSystem& G, std::size_t j) {
    SparsePoly plus = SparsePoly::constant(G.ell, 1);
    SparsePoly minus = plus;
    for (std::size_t i = 0; i < G.forms.size(); ++i) {
        Int e = G.B(i, j);
        if (e > 0) plus = plus * G.forms[i].poly().pow(static_cast<unsigned>(e));
        if (e < 0) minus = minus * G.forms[i].poly().pow(static_cast<unsigned>(-e));
    }
    return plus - minus;
}

SparsePoly gale_polynomial(const GaleSystem& G, std::size_t j) {
    SparsePoly plus = SparsePoly::constant(G.ell, 1);
    SparsePoly minus = plus;
    Rat sigma_pow = 1;  // prod sigma_i^{beta_ij}
    for (std::size_t i = 0; i < G.forms.size(); ++i) {
        Int e = G.B(i, j);
        // primitive integer rescaling p = sigma * Lambda, first nonzero
        // coefficient of (linear..., constant) positive
        RatVector all = G.forms[i].linear;
        all.push_back(G.forms[i].constant);
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& c : all) {
            num_gcd = gcd(num_gcd, numerator(c));
            den_lcm = lcm(den_lcm, denominator(c));
        }
        if (num_gcd == 0) throw ZeroPolynomialError("zero affine form");
        Rat sigma(den_lcm, abs(num_gcd));
        for (const auto& c : all) {
            if (c == 0) continue;
            if (c < 0) sigma = -sigma;
            break;
        }
        AffineForm p;
        p.constant = G.forms[i].constant * sigma;
        for (const auto& c : G.forms[i].linear) p.linear.push_back(c * sigma);

        if (e > 0) {
            plus = plus * p.poly().pow(static_cast<unsigned>(e));
            for (Int k = 0; k < e; ++k) sigma_pow *= sigma;
        }
        if (e < 0) {
            minus = minus * p.poly().pow(static_cast<unsigned>(-e));
            for (Int k = 0; k < -e; ++k) sigma_pow /= sigma;
        }
    }
    return plus - minus * sigma_pow;
}

FewnomialSystem inverse_gale(const GaleSystem& G) {
    std::size_t m = G.forms.size();
    std::size_t ell = G.ell;
    if (G.B.rows() != m || G.B.cols() != ell)
        throw ParseError("inverse_gale: inconsistent B shape");
    std::size_t n = m - ell;

    IntMatrix Bt = G.B.transposed();  // ell x m
    if (int_rank(Bt) != ell) throw RankDeficientError("B has column rank < ell");
    KernelBasis kb = integer_kernel_basis(Bt);  // n vectors of length m

    FewnomialSystem F;
    F.n = n;
    F.ell = ell;
    F.A = IntMatrix(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) F.A(i, j) = kb.vectors[i][j];

    // rows of C annihilate the (m x ell) matrix of linear parts
    RatMatrix Lt(ell, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < ell; ++k) Lt(k, i) = G.forms[i].linear[k];
    auto ker = rat_right_kernel(Lt);
    if (ker.size() != n) throw RankDeficientError("linear parts do not span R^ell");
    F.C = RatMatrix(n, m);
    F.b = RatVector(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) F.C(i, j) = ker[i][j];
        Rat acc = 0;
        for (std::size_t j = 0; j < m; ++j) acc += ker[i][j] * G.forms[j].constant;
        F.b[i] = -acc;
    }
    return F;
}

}  // namespace gale
