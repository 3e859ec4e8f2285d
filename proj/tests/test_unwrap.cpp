#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "gale/solver.hpp"
#include "gale/unwrap.hpp"

using namespace gale;

namespace {

FewnomialSystem septagon() {
    FewnomialSystem F;
    F.n = 5;
    F.ell = 2;
    F.A = IntMatrix{{-1, 1, 0, 0, 0, 0, 0},
                    {2, 0, 1, 0, 0, 2, -4},
                    {2, 1, 4, 0, 0, 1, -7},
                    {1, 0, 4, 1, 0, 0, -5},
                    {0, 0, 0, 0, 1, 0, -1}};
    F.C = RatMatrix{{-1, 0, 0, 0, 0, Rat(1, 2), 2},
                    {0, -1, 0, 0, 0, Rat(1, 8), Rat(-1, 2)},
                    {0, 0, -1, 0, 0, Rat(-1, 16), Rat(-3, 4)},
                    {0, 0, 0, -1, 0, Rat(-3, 8), -1},
                    {0, 0, 0, 0, -1, Rat(-1, 2), 2}};
    F.b = {-1, Rat(1, 2), Rat(3, 2), 4, 3};
    return F;
}

GaleSystem septagon_gale() {
    return gale_transform(septagon(), std::vector<std::size_t>{5, 6},
                          {{4, 4, 2, 3, 3, 1, 3}, {-1, -1, 2, -2, 1, 2, 1}});
}

FewnomialSystem pentagon() {
    FewnomialSystem F;
    F.n = 3;
    F.ell = 2;
    F.A = IntMatrix{{0, 1, 1, 0, 2}, {2, 1, 2, 2, 1}, {3, 3, 1, 1, 0}};
    F.C = RatMatrix{{1, -11, -33, 4, 15}, {1, 0, 5, -4, -3}, {1, -11, -31, 2, 13}};
    F.b = {7, 1, 8};
    return F;
}

bool close8(const BigFloat& x, double ref) {
    double v = static_cast<double>(x);
    return std::fabs(v - ref) <= std::fabs(ref) * 5e-8;
}

}  // namespace

TEST_CASE("choose_submatrix picks the leading identity block") {
    IntMatrix A{{1, 0, 0, 7, -2}, {0, 1, 0, 3, 5}, {0, 0, 1, -1, 4}};
    UnwrapContext ctx = choose_submatrix(A);
    CHECK(ctx.column_indices == std::vector<std::size_t>{0, 1, 2});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(ctx.A_prime_inv(i, k) == (i == k ? 1 : 0));
}

TEST_CASE("choose_submatrix skips dependent columns") {
    // column 1 = 2 * column 0, so column 2 must be substituted
    IntMatrix A{{1, 2, 0}, {1, 2, 1}};
    UnwrapContext ctx = choose_submatrix(A);
    CHECK(ctx.column_indices == std::vector<std::size_t>{0, 2});

    IntMatrix bad{{1, 2, 3}, {2, 4, 6}};
    CHECK_THROWS_AS(choose_submatrix(bad), RankDeficientError);
}

TEST_CASE("worked unwrapping at 135 bits") {
    FewnomialSystem F = septagon();
    GaleSystem G = septagon_gale();
    UnwrapContext ctx = unwrap_context(F, G);
    // the first 5 columns are linearly independent
    CHECK(ctx.column_indices == std::vector<std::size_t>{0, 1, 2, 3, 4});

    PrecisionGuard guard(135);
    std::vector<BigFloat> s{BigFloat("0.94884808"), BigFloat("0.65721633")};

    std::vector<BigFloat> z(7);
    for (std::size_t j = 0; j < 7; ++j) z[j] = ctx.forms[j].eval(s);
    CHECK(close8(z[0], 0.78885671));
    CHECK(close8(z[1], 0.28999784));
    CHECK(close8(z[2], 0.94778474));
    CHECK(close8(z[3], 2.98696564));
    CHECK(close8(z[4], 3.84000863));
    CHECK(close8(z[5], 0.94884808));
    CHECK(close8(z[6], 0.65721633));
    // the logs inherit the absolute error of the 8-digit inputs
    CHECK(std::fabs(static_cast<double>(boost::multiprecision::log(z[0])) -
                    (-0.23717058)) < 2e-7);

    std::vector<BigFloat> t = unwrap_point(s, ctx, 135);
    CHECK(close8(t[0], 1.0207321));
    CHECK(close8(t[1], 1.8274977));
    CHECK(close8(t[2], 0.28410769));
    CHECK(close8(t[3], 2.9869656));
    CHECK(close8(t[4], 3.8400086));
    // log of the first coordinate, again up to the inputs' absolute error
    CHECK(std::fabs(static_cast<double>(boost::multiprecision::log(t[0])) - 0.020520123) <
          2e-7);
}

TEST_CASE("unwrap_point rejects points outside the chamber") {
    FewnomialSystem F = septagon();
    UnwrapContext ctx = unwrap_context(F, septagon_gale());
    std::vector<BigFloat> outside{BigFloat(50), BigFloat(50)};
    CHECK_THROWS_AS(unwrap_point(outside, ctx, 106), NonPositiveCoordinateError);
}

TEST_CASE("exact toy solution unwraps exactly") {
    // x - x^2 = 0 via n=1, ell=1: monomials x, x^2
    FewnomialSystem F;
    F.n = 1;
    F.ell = 1;
    F.A = IntMatrix{{1, 2}};
    F.C = RatMatrix{{1, -1}};
    F.b = {0};
    GaleSystem G = gale_transform(F);
    UnwrapContext ctx = unwrap_context(F, G);
    // the exact Gale solution is y = 1
    std::vector<BigFloat> t = unwrap_point({BigFloat(1)}, ctx, 106);
    CHECK(abs(t[0] - 1) < BigFloat(1e-30));
}

TEST_CASE("newton_refine certifies the worked solution") {
    FewnomialSystem F = septagon();
    UnwrapContext ctx = unwrap_context(F, septagon_gale());
    std::vector<BigFloat> s{BigFloat("0.94884808"), BigFloat("0.65721633")};
    std::vector<BigFloat> t = unwrap_point(s, ctx, 135);
    auto [refined, cert] = newton_refine(F, t, 2, 135);
    CHECK(cert.passed);
    REQUIRE(cert.residuals.size() == 3);
    CHECK(cert.residuals[2] < cert.residuals[0]);
}

TEST_CASE("newton_refine recovers from a coarse perturbation") {
    FewnomialSystem F = septagon();
    UnwrapContext ctx = unwrap_context(F, septagon_gale());
    std::vector<BigFloat> s{BigFloat("0.94884808"), BigFloat("0.65721633")};
    std::vector<BigFloat> t = unwrap_point(s, ctx, 135);
    std::vector<BigFloat> ref = newton_refine(F, t, 3, 212).first;

    std::vector<BigFloat> bad = ref;
    bad[0] += BigFloat(0.1);
    auto [back, cert] = newton_refine(F, bad, 4, 106);
    BigFloat err = 0;
    for (std::size_t i = 0; i < back.size(); ++i)
        if (abs(back[i] - ref[i]) > err) err = abs(back[i] - ref[i]);
    CHECK(err < BigFloat(1e-12));
}

TEST_CASE("pentagon pipeline: solve, unwrap, refine") {
    FewnomialSystem F = pentagon();
    GaleSystem G = gale_transform(F, std::vector<std::size_t>{4, 2},
                                  {{1, -1, 3, -3, -1}, {3, -2, -2, -1, 2}});
    SolutionSet sol = khovanskii_rolle_solve(G);
    REQUIRE(sol.solutions.size() == 3);
    UnwrapContext ctx = unwrap_context(F, G);

    std::vector<std::vector<double>> expected{
        {1.194, 0.374, 1.231}, {0.431, 0.797, 0.972}, {0.613, 0.788, 0.850}};
    std::vector<bool> hit(3, false);
    for (const auto& y : sol.solutions) {
        std::vector<BigFloat> t = unwrap_point(y, ctx, 212);
        auto [refined, cert] = newton_refine(F, t);
        CHECK(cert.passed);
        for (std::size_t e = 0; e < 3; ++e) {
            bool all = true;
            for (std::size_t i = 0; i < 3; ++i)
                if (std::fabs(static_cast<double>(refined[i]) - expected[e][i]) > 5e-4)
                    all = false;
            if (all) hit[e] = true;
        }
    }
    CHECK(hit == std::vector<bool>(3, true));
}

TEST_CASE("certification files round-trip") {
    FewnomialSystem F = pentagon();
    std::vector<std::vector<BigFloat>> pts{
        {BigFloat(1.194), BigFloat(0.374), BigFloat(1.231)},
        {BigFloat(0.431), BigFloat(0.797), BigFloat(0.972)},
        {BigFloat(0.613), BigFloat(0.788), BigFloat(0.850)}};
    emit_certification_files(F, pts, "cert_test");

    CertSystem sys = read_certification_system("cert_test.sys");
    CHECK(sys.nvars == 3);
    REQUIRE(sys.polys.size() == 3);
    // nonzero monomial coefficients plus the constant, per equation
    CHECK(sys.polys[0].size() == 6);
    CHECK(sys.polys[1].size() == 5);  // one structural zero in C
    CHECK(sys.polys[2].size() == 6);
    // no negative exponents survive the shift
    for (const auto& p : sys.polys)
        for (const auto& [e, c] : p)
            for (const auto& v : e) CHECK(v >= 0);

    auto back = read_certification_points("cert_test.pts");
    REQUIRE(back.size() == 3);
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(std::fabs(static_cast<double>(to_bigfloat(back[p][i]) - pts[p][i])) <
                  1e-12);

    std::remove("cert_test.sys");
    std::remove("cert_test.pts");
}

TEST_CASE("empty point list still yields a valid file") {
    emit_certification_files(pentagon(), {}, "cert_empty");
    CHECK(read_certification_points("cert_empty.pts").empty());
    std::remove("cert_empty.sys");
    std::remove("cert_empty.pts");
}
