#include <doctest.h>

#include <random>

#include "gale/jacobians.hpp"

using namespace gale;

namespace {

FewnomialSystem pentagon() {
    FewnomialSystem F;
    F.n = 3;
    F.ell = 2;
    F.A = IntMatrix{{0, 1, 1, 0, 2}, {2, 1, 2, 2, 1}, {3, 3, 1, 1, 0}};
    F.C = RatMatrix{{1, -11, -33, 4, 15}, {1, 0, 5, -4, -3}, {1, -11, -31, 2, 13}};
    F.b = {7, 1, 8};
    return F;
}

GaleSystem pentagon_gale() {
    return gale_transform(pentagon(), {4, 2}, {{1, -1, 3, -3, -1}, {3, -2, -2, -1, 2}});
}

SparsePoly from_terms(const std::vector<std::tuple<int, int, long>>& terms) {
    SparsePoly p(2);
    for (const auto& [ex, ey, c] : terms) p.add_term({ex, ey}, Rat(c));
    return p;
}

}  // namespace

TEST_CASE("pentagon J~_2 equals the printed cubic") {
    JacobianChain chain = jacobian_chain(pentagon_gale());
    REQUIRE(chain.j_tilde.size() == 2);
    SparsePoly cubic = from_terms({{3, 0, 4},
                                   {2, 1, -32},
                                   {1, 2, 24},
                                   {0, 3, 12},
                                   {2, 0, -31},
                                   {1, 1, 52},
                                   {0, 2, -53},
                                   {1, 0, 9},
                                   {0, 1, 15},
                                   {0, 0, -4}});
    CHECK(chain.j_tilde[1] == cubic);
    CHECK(chain.actual_degree[1] == 3);
    CHECK(chain.expected_degree[1] == 3);
}

TEST_CASE("pentagon J~_1 is proportional to the printed sextic") {
    JacobianChain chain = jacobian_chain(pentagon_gale());
    SparsePoly sextic = from_terms(
        {{6, 0, -56},  {5, 1, 464},   {4, 2, -456}, {3, 3, -1792}, {2, 4, 1896},
         {1, 5, 336},  {0, 6, -72},   {5, 0, 640},  {4, 1, -1960}, {3, 2, 456},
         {2, 3, 3096}, {1, 4, -5176}, {0, 5, 480},  {4, 0, -482},  {3, 1, 2248},
         {2, 2, -2416}, {1, 3, 4256}, {0, 4, 250},  {3, 0, 61},    {2, 1, -401},
         {1, 2, -1769}, {0, 3, -491}, {2, 0, -10},  {1, 1, 664},   {0, 2, 278},
         {1, 0, -81},  {0, 1, -101},  {0, 0, 16}});
    CHECK(chain.j_tilde[0].proportional_to(sextic));
    CHECK(chain.actual_degree[0] == 6);
    CHECK(chain.expected_degree[0] == 6);
}

TEST_CASE("equal log-forms give an identically zero J~_2") {
    GaleSystem G;
    G.n = 1;
    G.ell = 2;
    G.forms = {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}};
    G.B = IntMatrix{{1, 1}, {1, 1}, {1, 1}};
    JacobianChain chain = jacobian_chain(G);
    CHECK(chain.j_tilde[1].is_zero());
}

TEST_CASE("J~_2 vanishes exactly where the rational J_2 vanishes") {
    GaleSystem G = pentagon_gale();
    JacobianChain chain = jacobian_chain(G);
    // random points inside the pentagon (small box around the centroid)
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> d(1, 40);
    for (int trial = 0; trial < 30; ++trial) {
        RatVector y{Rat(d(rng), 100) + Rat(1, 5), Rat(d(rng), 100) + Rat(1, 5)};
        // assemble J_2 = det of the log-form Jacobian directly
        Rat jac[2][2] = {{0, 0}, {0, 0}};
        bool pole = false;
        for (std::size_t i = 0; i < G.forms.size(); ++i) {
            Rat val = G.forms[i].eval(y);
            if (val == 0) pole = true;
        }
        if (pole) continue;
        for (std::size_t i = 0; i < G.forms.size(); ++i) {
            Rat val = G.forms[i].eval(y);
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k)
                    jac[j][k] += Rat(G.B(i, j)) * G.forms[i].linear[k] / val;
        }
        Rat J2 = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        Rat Jt2 = chain.j_tilde[1].eval(y);
        CHECK((J2 == 0) == (Jt2 == 0));
        if (J2 != 0) CHECK((J2 > 0) == ((Jt2 > 0) == (chain.j_tilde[1].eval(y) * J2 > 0)));
    }
}

TEST_CASE("scale_polynomial") {
    SparsePoly p(1);
    p.add_term({1}, 2);
    p.add_term({0}, 4);
    SparsePoly s = scale_polynomial(p);
    CHECK(s.terms().at({1}) == Rat(2, 3));
    CHECK(s.terms().at({0}) == Rat(4, 3));

    SparsePoly mono(1);
    mono.add_term({1}, 5);
    CHECK(scale_polynomial(mono) == SparsePoly::variable(1, 0));

    // pentagon J~_2: max 53, min 4, divisor 57/2
    JacobianChain chain = jacobian_chain(pentagon_gale());
    SparsePoly scaled = scale_polynomial(chain.j_tilde[1]);
    CHECK(scaled.terms().at({3, 0}) == Rat(8, 57));

    CHECK_THROWS_AS(scale_polynomial(SparsePoly(1)), ZeroPolynomialError);
}
