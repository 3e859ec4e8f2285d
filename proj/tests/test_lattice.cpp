#include <doctest.h>

#include "gale/lattice.hpp"

using namespace gale;

namespace {

IntMatrix septagon_A() {
    return IntMatrix{{-1, 1, 0, 0, 0, 0, 0},
                     {2, 0, 1, 0, 0, 2, -4},
                     {2, 1, 4, 0, 0, 1, -7},
                     {1, 0, 4, 1, 0, 0, -5},
                     {0, 0, 0, 0, 1, 0, -1}};
}

// pentagon support (u,v,w exponents of v^2w^3, uvw^3, uv^2w, v^2w, u^2v)
IntMatrix pentagon_A() {
    return IntMatrix{{0, 1, 1, 0, 2}, {2, 1, 2, 2, 1}, {3, 3, 1, 1, 0}};
}

bool annihilates(const IntMatrix& A, const IntVector& v) {
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < A.cols(); ++j) acc += A(i, j) * v[j];
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("integer_kernel_basis septagon") {
    auto kb = integer_kernel_basis(septagon_A());
    REQUIRE(kb.vectors.size() == 2);
    for (const auto& v : kb.vectors) CHECK(annihilates(septagon_A(), v));
    std::vector<IntVector> paper{{4, 4, 2, 3, 3, 1, 3}, {-1, -1, 2, -2, 1, 2, 1}};
    CHECK(same_lattice(kb.vectors, paper));
}

TEST_CASE("integer_kernel_basis pentagon") {
    auto kb = integer_kernel_basis(pentagon_A());
    REQUIRE(kb.vectors.size() == 2);
    for (const auto& v : kb.vectors) CHECK(annihilates(pentagon_A(), v));
    // relations read off the monomial identities of the running example
    std::vector<IntVector> paper{{1, -1, 3, -3, -1}, {3, -2, -2, -1, 2}};
    CHECK(same_lattice(kb.vectors, paper));
}

TEST_CASE("integer_kernel_basis of [I | -I]") {
    IntMatrix A(3, 6);
    for (int i = 0; i < 3; ++i) {
        A(i, i) = 1;
        A(i, i + 3) = -1;
    }
    auto kb = integer_kernel_basis(A);
    REQUIRE(kb.vectors.size() == 3);
    std::vector<IntVector> expect{{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
    CHECK(same_lattice(kb.vectors, expect));
}

TEST_CASE("integer_kernel_basis rejects rank-deficient input") {
    IntMatrix A{{1, 2, 3}, {2, 4, 6}};
    CHECK_THROWS_AS(integer_kernel_basis(A), RankDeficientError);
}

TEST_CASE("kernel saturation: index-2 sublattice trap") {
    // A = [2 -2]: kernel generated by (1,1), not (2,2).
    IntMatrix A{{2, -2}};
    auto kb = integer_kernel_basis(A);
    REQUIRE(kb.vectors.size() == 1);
    CHECK(abs(kb.vectors[0][0]) == 1);
    CHECK(kb.vectors[0][0] == kb.vectors[0][1]);
}

TEST_CASE("optimize_signs finds the positive septagon vector") {
    auto kb = integer_kernel_basis(septagon_A());
    auto opt = optimize_signs(kb);
    REQUIRE(opt.vectors.size() == 2);
    CHECK(opt.negative_counts[0] == 0);
    CHECK(same_lattice(opt.vectors, kb.vectors));
}

TEST_CASE("optimize_signs leaves an all-positive basis equivalent") {
    KernelBasis kb;
    kb.vectors = {{1, 2, 1}, {2, 1, 3}};  // not an annihilator, just a lattice
    kb.negative_counts = {0, 0};
    auto opt = optimize_signs(kb);
    CHECK(opt.negative_counts[0] == 0);
    CHECK(same_lattice(opt.vectors, kb.vectors));
}

TEST_CASE("optimize_signs pentagon attains the exhaustive minimum") {
    auto kb = integer_kernel_basis(pentagon_A());
    auto opt = optimize_signs(kb);
    CHECK(same_lattice(opt.vectors, kb.vectors));

    // independent exhaustive oracle over coefficients in [-10,10]^2
    std::size_t best = 99;
    for (int c0 = -10; c0 <= 10; ++c0)
        for (int c1 = -10; c1 <= 10; ++c1) {
            if (c0 == 0 && c1 == 0) continue;
            IntVector w(kb.vectors[0].size());
            for (std::size_t t = 0; t < w.size(); ++t)
                w[t] = c0 * kb.vectors[0][t] + c1 * kb.vectors[1][t];
            best = std::min(best, count_negative(w));
        }
    CHECK(best > 0);  // the pentagon kernel has no positive vector
    CHECK(opt.negative_counts[0] == best);
}

TEST_CASE("positive_kernel_vector") {
    RatMatrix M1{{1, -1}};
    auto v = positive_kernel_vector(M1);
    REQUIRE(v.has_value());
    CHECK((*v)[0] == 1);
    CHECK((*v)[1] == 1);

    RatMatrix M2{{1, 1}};
    CHECK(!positive_kernel_vector(M2).has_value());

    // septagon coefficient matrix: bounded chamber, no positive kernel vector
    RatMatrix C{{-1, 0, 0, 0, 0, Rat(1, 2), 2},
                {0, -1, 0, 0, 0, Rat(1, 8), Rat(-1, 2)},
                {0, 0, -1, 0, 0, Rat(-1, 16), Rat(-3, 4)},
                {0, 0, 0, -1, 0, Rat(-3, 8), -1},
                {0, 0, 0, 0, -1, Rat(-1, 2), 2}};
    CHECK(!positive_kernel_vector(C).has_value());
}

TEST_CASE("positive_kernel_vector cross-check against 2D cone analysis") {
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            RatMatrix M{{a, b}};
            bool expect = (a == 0 && b == 0) || (a != 0 && b != 0 && (a > 0) != (b > 0));
            CHECK(positive_kernel_vector(M).has_value() == expect);
        }
}
