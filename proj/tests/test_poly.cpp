#include <doctest.h>

#include <random>

#include "gale/poly.hpp"

using namespace gale;

TEST_CASE("arithmetic and evaluation agree on random data") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly p(2), q(2);
        for (int t = 0; t < 6; ++t) {
            p.add_term({d(rng) & 3, d(rng) & 3}, Rat(d(rng)));
            q.add_term({d(rng) & 3, d(rng) & 3}, Rat(d(rng)));
        }
        RatVector y{Rat(d(rng), 3), Rat(d(rng), 2)};
        CHECK((p + q).eval(y) == p.eval(y) + q.eval(y));
        CHECK((p - q).eval(y) == p.eval(y) - q.eval(y));
        CHECK((p * q).eval(y) == p.eval(y) * q.eval(y));
        CHECK(p.pow(3).eval(y) == p.eval(y) * p.eval(y) * p.eval(y));
    }
}

TEST_CASE("derivative product rule") {
    SparsePoly x = SparsePoly::variable(2, 0);
    SparsePoly y = SparsePoly::variable(2, 1);
    SparsePoly p = x * x * y + y * y * SparsePoly::constant(2, Rat(3));
    SparsePoly q = x + y * y;
    SparsePoly lhs = (p * q).derivative(0);
    SparsePoly rhs = p.derivative(0) * q + p * q.derivative(0);
    CHECK(lhs == rhs);
}

TEST_CASE("divide_exact inverts multiplication") {
    SparsePoly x = SparsePoly::variable(2, 0);
    SparsePoly y = SparsePoly::variable(2, 1);
    SparsePoly a = x * x - y + SparsePoly::constant(2, Rat(7, 2));
    SparsePoly b = x * y + SparsePoly::constant(2, Rat(-1, 3));
    CHECK((a * b).divide_exact(b) == a);
    CHECK((a * b).divide_exact(a) == b);
    CHECK_THROWS_AS((a * b + SparsePoly::constant(2, 1)).divide_exact(b), GaleError);
}

TEST_CASE("restrict_line matches evaluation") {
    SparsePoly x = SparsePoly::variable(2, 0);
    SparsePoly y = SparsePoly::variable(2, 1);
    SparsePoly p = x * x * y - y * y * y + x * SparsePoly::constant(2, Rat(5));
    RatVector base{Rat(1, 2), Rat(-1)};
    RatVector dir{Rat(3), Rat(2)};
    RatVector coeffs = p.restrict_line(base, dir);
    for (int t = -3; t <= 3; ++t) {
        Rat tv(t, 2);
        Rat direct = p.eval(RatVector{base[0] + tv * dir[0], base[1] + tv * dir[1]});
        Rat horner = 0;
        for (std::size_t i = coeffs.size(); i > 0; --i) horner = horner * tv + coeffs[i - 1];
        CHECK(direct == horner);
    }
}

TEST_CASE("substitute and coeffs_in") {
    SparsePoly x = SparsePoly::variable(2, 0);
    SparsePoly y = SparsePoly::variable(2, 1);
    SparsePoly p = x * x * y + x * y * y + SparsePoly::constant(2, Rat(4));
    SparsePoly s = p.substitute(1, Rat(2));
    CHECK(s.eval(RatVector{Rat(3), Rat(99)}) == p.eval(RatVector{Rat(3), Rat(2)}));

    auto cs = p.coeffs_in(0);
    REQUIRE(cs.size() == 3);
    SparsePoly rebuilt(2);
    for (std::size_t k = 0; k < cs.size(); ++k)
        rebuilt = rebuilt + cs[k] * x.pow(static_cast<unsigned>(k));
    CHECK(rebuilt == p);
}

TEST_CASE("primitive_normalized and proportional_to") {
    SparsePoly x = SparsePoly::variable(1, 0);
    SparsePoly p = x * x * SparsePoly::constant(1, Rat(-4, 6)) + SparsePoly::constant(1, Rat(2, 9));
    SparsePoly n = p.primitive_normalized();
    // -2/3 x^2 + 2/9  ->  6x^2 - 2 over content 2  ->  3x^2 - 1
    SparsePoly expect = x * x * SparsePoly::constant(1, Rat(3)) - SparsePoly::constant(1, Rat(1));
    CHECK(n == expect);
    CHECK(p.proportional_to(n));
    CHECK(!p.proportional_to(x * x));
}

TEST_CASE("determinant vs 3x3 rule of Sarrus on numbers") {
    std::vector<std::vector<SparsePoly>> m(3, std::vector<SparsePoly>(3));
    int vals[3][3] = {{2, -1, 3}, {0, 4, 1}, {5, 2, -2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = SparsePoly::constant(1, Rat(vals[i][j]));
    // det = 2(-8-2) + 1(0-5) + 3(0-20) = -20 - 5 - 60
    CHECK(determinant(m).eval(RatVector{Rat(0)}) == Rat(-85));
}

TEST_CASE("determinant of a symbolic 2x2") {
    SparsePoly x = SparsePoly::variable(2, 0);
    SparsePoly y = SparsePoly::variable(2, 1);
    std::vector<std::vector<SparsePoly>> m{{x, y}, {y, x}};
    CHECK(determinant(m) == x * x - y * y);
}

TEST_CASE("affine constructor") {
    SparsePoly l = SparsePoly::affine({Rat(1, 2), Rat(-3)}, Rat(7));
    CHECK(l.eval(RatVector{Rat(2), Rat(1)}) == Rat(5));
    CHECK(l.total_degree() == 1);
}
