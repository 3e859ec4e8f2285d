#include <doctest.h>

#include "gale/chamber.hpp"

using namespace gale;

namespace {

// Gale-system slot order of the running pentagon example:
// 1-x-y, (10/11)(1+x-3y), 1/2-x+y, x, y
std::vector<AffineForm> pentagon_forms() {
    return {{{-1, -1}, 1},
            {{Rat(10, 11), Rat(-30, 11)}, Rat(10, 11)},
            {{-1, 1}, Rat(1, 2)},
            {{1, 0}, 0},
            {{0, 1}, 0}};
}

// first columns of the paper's B in slot order: beta_g = (1,-1,-3,-1,3)
IntMatrix pentagon_B() {
    return IntMatrix{{1, 3}, {-1, -2}, {-3, -1}, {-1, 2}, {3, -2}};
}

std::vector<AffineForm> septagon_forms() {
    return {{{Rat(1, 2), 2}, -1},
            {{Rat(1, 8), Rat(-1, 2)}, Rat(1, 2)},
            {{Rat(-1, 16), Rat(-3, 4)}, Rat(3, 2)},
            {{Rat(-3, 8), -1}, 4},
            {{Rat(-1, 2), 2}, 3},
            {{1, 0}, 0},
            {{0, 1}, 0}};
}

std::vector<AffineForm> square_forms() {
    return {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 1}, {{0, -1}, 1}};
}

}  // namespace

TEST_CASE("pentagon chamber structure") {
    Chamber ch = build_chamber(pentagon_forms(), 2);
    CHECK(ch.bounded);
    CHECK(ch.vertices.size() == 5);
    CHECK(ch.edges.size() == 5);
    CHECK(ch.warnings.empty());
    // every vertex: incident forms vanish, all others strictly positive
    for (const auto& v : ch.vertices) {
        for (std::size_t k = 0; k < ch.forms.size(); ++k) {
            Rat val = ch.forms[k].eval(v.point);
            if (k == v.incident.first || k == v.incident.second)
                CHECK(val == 0);
            else
                CHECK(val > 0);
        }
    }
    // boundary order: consecutive vertices share an edge form
    for (std::size_t k = 0; k < 5; ++k) {
        const auto& a = ch.vertices[k];
        const auto& b = ch.vertices[(k + 1) % 5];
        bool share = a.incident.first == b.incident.first ||
                     a.incident.first == b.incident.second ||
                     a.incident.second == b.incident.first ||
                     a.incident.second == b.incident.second;
        CHECK(share);
    }
}

TEST_CASE("septagon chamber has 7 vertices and is bounded") {
    Chamber ch = build_chamber(septagon_forms(), 2);
    CHECK(ch.bounded);
    CHECK(ch.vertices.size() == 7);
    CHECK(ch.edges.size() == 7);
}

TEST_CASE("quadrant: unbounded, one vertex") {
    Chamber ch = build_chamber({{{1, 0}, 0}, {{0, 1}, 0}}, 2);
    CHECK(!ch.bounded);
    REQUIRE(ch.vertices.size() == 1);
    CHECK(ch.vertices[0].point == RatVector{0, 0});
}

TEST_CASE("empty chamber throws") {
    CHECK_THROWS_AS(build_chamber({{{1, 0}, 0}, {{-1, 0}, -1}}, 2), EmptyChamberError);
}

TEST_CASE("degenerate arrangement is reported, not fatal") {
    // three forms through the origin
    Chamber ch = build_chamber({{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}}, 2);
    CHECK(!ch.warnings.empty());
    auto rep = check_assumptions(ch, IntMatrix(3, 2));
    CHECK(!rep.simple_vertices);
}

TEST_CASE("check_assumptions on the pentagon") {
    Chamber ch = build_chamber(pentagon_forms(), 2);
    auto rep = check_assumptions(ch, pentagon_B());
    CHECK(rep.simple_vertices);
    CHECK(rep.faces_nonneg_kernel_ok);
    CHECK(rep.violations.empty());
}

TEST_CASE("check_assumptions flags mixed-sign square") {
    Chamber ch = build_chamber(square_forms(), 2);
    IntMatrix good(4, 2);
    for (int i = 0; i < 4; ++i) {
        good(i, 0) = 1;
        good(i, 1) = (i % 2) ? 1 : 2;
    }
    CHECK(check_assumptions(ch, good).faces_nonneg_kernel_ok);

    IntMatrix bad(4, 2);
    for (int i = 0; i < 4; ++i) {
        bad(i, 0) = (i % 2) ? -1 : 1;
        bad(i, 1) = (i % 2) ? -1 : 1;
    }
    CHECK(!check_assumptions(ch, bad).faces_nonneg_kernel_ok);
}

TEST_CASE("classify_faces: pentagon has 4 qualifying vertices") {
    Chamber ch = build_chamber(pentagon_forms(), 2);
    FaceReport rep = classify_faces(ch, pentagon_B());
    CHECK(rep.M0 == 4);
    CHECK(rep.M1 == 5);
    // the one disqualified vertex is x = 0 meet 1 + x - 3y = 0 (both entries -1)
    for (std::size_t k = 0; k < ch.vertices.size(); ++k) {
        const auto& v = ch.vertices[k];
        bool is_that = (v.point == RatVector{0, Rat(1, 3)});
        CHECK(rep.vertex_meets_mu[k] == !is_that);
    }
}

TEST_CASE("classify_faces: all-positive first column gives M0 = 0") {
    Chamber ch = build_chamber(septagon_forms(), 2);
    IntMatrix B(7, 2);
    IntVector beta_plus{4, 4, 2, 3, 3, 1, 3};
    IntVector beta_pm{-1, -1, 2, -2, 1, 2, 1};
    for (int i = 0; i < 7; ++i) {
        B(i, 0) = beta_plus[i];
        B(i, 1) = beta_pm[i];
    }
    CHECK(classify_faces(ch, B).M0 == 0);

    // beta^{+-} first: qualifying vertices are exactly the opposite-sign pairs
    IntMatrix B2(7, 2);
    for (int i = 0; i < 7; ++i) {
        B2(i, 0) = beta_pm[i];
        B2(i, 1) = beta_plus[i];
    }
    FaceReport rep = classify_faces(ch, B2);
    for (std::size_t k = 0; k < ch.vertices.size(); ++k) {
        const auto& [i1, i2] = ch.vertices[k].incident;
        bool expect = (beta_pm[i1] > 0) != (beta_pm[i2] > 0);
        CHECK(rep.vertex_meets_mu[k] == expect);
    }
}
