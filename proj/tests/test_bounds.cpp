#include <doctest.h>

#include "gale/bounds.hpp"

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

}  // namespace

TEST_CASE("descartes_like_bound values") {
    CHECK(descartes_like_bound(5, 2) == Rat(135, 2));
    CHECK(descartes_like_bound(1, 1) == 2);
    CHECK(descartes_like_bound(3, 2) == Rat(2 * 9) + Rat(5, 4) * 6);  // 18 + 7.5
}

TEST_CASE("factored and unfactored forms agree for n, ell up to 50") {
    for (std::size_t n = 1; n <= 50; ++n)
        for (std::size_t ell = 1; ell <= 50; ++ell)
            CHECK(descartes_like_bound(n, ell) == descartes_like_bound_unfactored(n, ell));
}

TEST_CASE("fewnomial_face_bound golden values") {
    CHECK(fewnomial_face_bound(3, 2, {5, 5}) == 28);
    CHECK(fewnomial_face_bound(5, 2, {7, 7}) == 71);
    CHECK(fewnomial_face_bound(4, 2, {0, 0}) == 32);
}

TEST_CASE("fewnomial_face_bound is monotone in the f-vector") {
    for (std::size_t f0 = 0; f0 < 6; ++f0)
        for (std::size_t f1 = 0; f1 < 6; ++f1) {
            Rat base = fewnomial_face_bound(4, 2, {f0, f1});
            CHECK(fewnomial_face_bound(4, 2, {f0 + 1, f1}) > base);
            CHECK(fewnomial_face_bound(4, 2, {f0, f1 + 1}) > base);
        }
}

TEST_CASE("tighter_estimate") {
    auto zero = tighter_estimate({0, 7}, 5, 2);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == 0);

    auto pent = tighter_estimate({4, 5}, 3, 2);
    REQUIRE(pent.size() == 1);
    CHECK(pent[0] == 4);
}

TEST_CASE("check_theorem_hypotheses on the septagon") {
    HypothesisFlags flags = check_theorem_hypotheses(septagon());
    CHECK(flags.interior_exponent);
    CHECK(flags.no_positive_C_kernel);
}

TEST_CASE("interior flag is false for simplex-vertex exponents") {
    // all exponents in a half-space: 0 is not in the relative interior
    FewnomialSystem F;
    F.n = 2;
    F.ell = 1;
    F.A = IntMatrix{{1, 0, 1}, {0, 1, 1}};
    F.C = RatMatrix{{1, 0, 1}, {0, 1, 1}};
    F.b = {1, 1};
    CHECK(!check_theorem_hypotheses(F).interior_exponent);
}

TEST_CASE("kernel flag tracks positive_kernel_vector") {
    // C = [1, -1]: kernel contains (1,1) > 0, so the flag must be false
    FewnomialSystem F;
    F.n = 1;
    F.ell = 1;
    F.A = IntMatrix{{1, -1}};
    F.C = RatMatrix{{1, -1}};
    F.b = {0};
    CHECK(!check_theorem_hypotheses(F).no_positive_C_kernel);
}

TEST_CASE("distinguished monomial translation") {
    // monomials x, x^2 plus constant; distinguish the column k=0 (exponent 1):
    // translated exponents {1, -1} contain 0 in the interior
    FewnomialSystem F;
    F.n = 1;
    F.ell = 1;
    F.A = IntMatrix{{1, 2}};
    F.C = RatMatrix{{1, -1}};
    F.b = {0};
    CHECK(check_theorem_hypotheses(F, 0).interior_exponent);
    // default (constant distinguished): exponents {1,2} are one-sided
    CHECK(!check_theorem_hypotheses(F).interior_exponent);
}

TEST_CASE("bound_report assembles the pieces") {
    BoundReport rep = bound_report(septagon(), {7, 7}, {0, 7});
    CHECK(rep.descartes_like == Rat(135, 2));
    CHECK(rep.fewnomial_face == 71);
    CHECK(rep.tighter_Tj == std::vector<Rat>{0});
    CHECK(rep.hypotheses.interior_exponent);
    CHECK(rep.hypotheses.no_positive_C_kernel);
    CHECK(rep.khovanskii_style > 0);
}
