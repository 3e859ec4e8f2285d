#include "gale/unwrap.hpp"

#include <fstream>
#include <sstream>

#include "gale/exact_arith.hpp"

namespace gale {

namespace {

BigFloat bigfloat_pow(const BigFloat& x, const Int& e) {
    return boost::multiprecision::pow(x, static_cast<long>(e));
}

/// Monomial vector (x^{a_j})_j at a positive point.
std::vector<BigFloat> monomials(const FewnomialSystem& F, const std::vector<BigFloat>& x) {
    std::vector<BigFloat> m(F.n + F.ell, BigFloat(1));
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t i = 0; i < F.n; ++i)
            if (F.A(i, j) != 0) m[j] *= bigfloat_pow(x[i], F.A(i, j));
    return m;
}

std::vector<BigFloat> residual_vec(const FewnomialSystem& F, const std::vector<BigFloat>& x) {
    std::vector<BigFloat> m = monomials(F, x);
    std::vector<BigFloat> r(F.n);
    for (std::size_t i = 0; i < F.n; ++i) {
        BigFloat acc = to_bigfloat(F.b[i]);
        for (std::size_t j = 0; j < m.size(); ++j) acc += to_bigfloat(F.C(i, j)) * m[j];
        r[i] = acc;
    }
    return r;
}

BigFloat max_norm(const std::vector<BigFloat>& v) {
    BigFloat m = 0;
    for (const auto& x : v)
        if (abs(x) > m) m = abs(x);
    return m;
}

}  // namespace

UnwrapContext choose_submatrix(const IntMatrix& A) {
    std::size_t n = A.rows();
    UnwrapContext ctx;
    IntMatrix sel(n, 0);
    for (std::size_t j = 0; j < A.cols() && ctx.column_indices.size() < n; ++j) {
        IntMatrix cand(n, sel.cols() + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < sel.cols(); ++k) cand(i, k) = sel(i, k);
            cand(i, sel.cols()) = A(i, j);
        }
        if (int_rank(cand) == cand.cols()) {
            sel = cand;
            ctx.column_indices.push_back(j);
        }
    }
    if (ctx.column_indices.size() < n)
        throw RankDeficientError("exponent matrix has rank below n");
    ctx.A_prime = sel;
    RatMatrix Q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) Q(i, k) = Rat(sel(i, k));
    ctx.A_prime_inv = rat_inverse(Q);
    return ctx;
}

UnwrapContext unwrap_context(const FewnomialSystem& F, const GaleSystem& G) {
    UnwrapContext ctx = choose_submatrix(F.A);
    ctx.forms.resize(F.n + F.ell);
    for (std::size_t slot = 0; slot < G.perm.size(); ++slot)
        ctx.forms[G.perm[slot]] = G.forms[slot];
    return ctx;
}

std::vector<BigFloat> unwrap_point(const std::vector<BigFloat>& s_star,
                                   const UnwrapContext& ctx, int precision_bits) {
    PrecisionGuard guard(precision_bits);
    std::size_t n = ctx.A_prime.rows();

    std::vector<BigFloat> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        BigFloat v = ctx.forms[ctx.column_indices[k]].eval(s_star);
        if (v <= 0)
            throw NonPositiveCoordinateError("selected master function not positive");
        w[k] = boost::multiprecision::log(v);
    }
    // x = w A'^{-1} (row vector), t = exp(x)
    std::vector<BigFloat> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        BigFloat x = 0;
        for (std::size_t k = 0; k < n; ++k) x += w[k] * to_bigfloat(ctx.A_prime_inv(k, i));
        t[i] = boost::multiprecision::exp(x);
    }
    return t;
}

std::pair<std::vector<BigFloat>, SoftCertificate> newton_refine(
    const FewnomialSystem& F, const std::vector<BigFloat>& t_star, int iters,
    int start_bits) {
    int bits = start_bits < 106 ? 106 : start_bits;
    SoftCertificate cert;
    std::vector<BigFloat> x = t_star;
    {
        PrecisionGuard guard(bits);
        cert.residuals.push_back(max_norm(residual_vec(F, x)));
    }
    BigFloat r0 = cert.residuals[0];

    for (int it = 0; it < iters; ++it, bits *= 2) {
        PrecisionGuard guard(bits);
        std::vector<BigFloat> m = monomials(F, x);
        // J_ik = sum_j C_ij A_kj x^{a_j} / x_k
        std::size_t n = F.n;
        std::vector<std::vector<BigFloat>> J(n, std::vector<BigFloat>(n, BigFloat(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < m.size(); ++j)
                    if (F.A(k, j) != 0)
                        J[i][k] += to_bigfloat(F.C(i, j)) * BigFloat(Int(F.A(k, j))) *
                                   m[j] / x[k];
        std::vector<BigFloat> r = residual_vec(F, x);

        // solve J dx = r by partial-pivot elimination
        std::vector<BigFloat> dx = r;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            for (std::size_t i = col + 1; i < n; ++i)
                if (abs(J[i][col]) > abs(J[piv][col])) piv = i;
            if (J[piv][col] == 0)
                throw SingularMatrixError("singular Jacobian in Newton refinement");
            std::swap(J[piv], J[col]);
            std::swap(dx[piv], dx[col]);
            for (std::size_t i = col + 1; i < n; ++i) {
                BigFloat f = J[i][col] / J[col][col];
                for (std::size_t k = col; k < n; ++k) J[i][k] -= f * J[col][k];
                dx[i] -= f * dx[col];
            }
        }
        for (std::size_t col = n; col-- > 0;) {
            for (std::size_t k = col + 1; k < n; ++k) dx[col] -= J[col][k] * dx[k];
            dx[col] /= J[col][col];
        }
        for (std::size_t i = 0; i < n; ++i) x[i] -= dx[i];
        cert.steps.push_back(max_norm(dx));
        BigFloat r_new = max_norm(residual_vec(F, x));
        if (r0 > 0 && r_new > r0 * 1e6)
            throw DivergenceError("Newton residual grew by more than 1e6");
        cert.residuals.push_back(r_new);
    }

    // quadratic-decay evidence: each iteration at least squares the residual
    // ratio, up to the precision floor of the iteration it was computed at
    cert.passed = true;
    int b = start_bits < 106 ? 106 : start_bits;
    for (std::size_t k = 1; k < cert.residuals.size(); ++k, b *= 2) {
        BigFloat floor_k = boost::multiprecision::pow(BigFloat(2), -(b / 2));
        const BigFloat& prev = cert.residuals[k - 1];
        const BigFloat& cur = cert.residuals[k];
        if (cur < floor_k || prev < floor_k) continue;  // at the noise floor
        BigFloat ratio = cur / prev;
        if (!(ratio <= prev * 4 || ratio < BigFloat(1) / 256)) cert.passed = false;
    }
    return {x, cert};
}

void emit_certification_files(const FewnomialSystem& F,
                              const std::vector<std::vector<BigFloat>>& points,
                              const std::string& path) {
    std::size_t m = F.n + F.ell;
    std::ofstream sys(path + ".sys");
    if (!sys) throw ParseError("cannot open " + path + ".sys");
    sys << F.n << " " << F.n << "\n\n";
    for (std::size_t i = 0; i < F.n; ++i) {
        // monomial shift clearing negative exponents of equation i
        std::vector<Int> shift(F.n, Int(0));
        for (std::size_t j = 0; j < m; ++j) {
            if (F.C(i, j) == 0) continue;
            for (std::size_t k = 0; k < F.n; ++k)
                if (-F.A(k, j) > shift[k]) shift[k] = -F.A(k, j);
        }
        std::size_t terms = (F.b[i] != 0) ? 1 : 0;
        for (std::size_t j = 0; j < m; ++j)
            if (F.C(i, j) != 0) ++terms;
        sys << terms << "\n";
        for (std::size_t j = 0; j < m; ++j) {
            if (F.C(i, j) == 0) continue;
            for (std::size_t k = 0; k < F.n; ++k) sys << (F.A(k, j) + shift[k]) << " ";
            sys << F.C(i, j) << " 0\n";
        }
        if (F.b[i] != 0) {
            for (std::size_t k = 0; k < F.n; ++k) sys << shift[k] << " ";
            sys << F.b[i] << " 0\n";
        }
        sys << "\n";
    }

    std::ofstream pts(path + ".pts");
    if (!pts) throw ParseError("cannot open " + path + ".pts");
    pts << points.size() << "\n\n";
    for (const auto& p : points) {
        for (std::size_t k = 0; k < F.n; ++k)
            pts << to_rational(p[k], 192) << " 0\n";
        pts << "\n";
    }
}

CertSystem read_certification_system(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    CertSystem out;
    std::size_t npolys = 0;
    in >> out.nvars >> npolys;
    for (std::size_t i = 0; i < npolys; ++i) {
        std::size_t terms = 0;
        in >> terms;
        std::vector<std::pair<std::vector<Int>, Rat>> poly;
        for (std::size_t t = 0; t < terms; ++t) {
            std::vector<Int> e(out.nvars);
            for (auto& v : e) in >> v;
            Rat re, im;
            in >> re >> im;
            if (im != 0) throw ParseError("nonreal coefficient");
            poly.emplace_back(std::move(e), re);
        }
        out.polys.push_back(std::move(poly));
    }
    if (!in) throw ParseError("truncated system file " + file);
    return out;
}

std::vector<RatVector> read_certification_points(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    std::size_t count = 0;
    in >> count;
    std::vector<RatVector> out;
    Rat re, im;
    std::vector<Rat> flat;
    while (in >> re >> im) {
        if (im != 0) throw ParseError("nonreal point coordinate");
        flat.push_back(re);
    }
    if (count > 0) {
        if (flat.size() % count != 0) throw ParseError("ragged points file " + file);
        std::size_t n = flat.size() / count;
        for (std::size_t p = 0; p < count; ++p)
            out.emplace_back(flat.begin() + p * n, flat.begin() + (p + 1) * n);
    }
    return out;
}

}  // namespace gale
