#include <doctest.h>

#include "gale/chamber.hpp"
#include "gale/testgen.hpp"

using namespace gale;

namespace {

Rat cross(const RatVector& o, const RatVector& a, const RatVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

TEST_CASE("random_polygon: convex position inside the annulus") {
    SuiteSpec spec;
    spec.seed = 7;
    Rng rng(42);
    auto poly = random_polygon(5, spec, rng);
    REQUIRE(poly.size() == 7);
    for (const auto& p : poly) {
        Rat rr = p[0] * p[0] + p[1] * p[1];
        CHECK(rr >= 1);
        CHECK(rr <= 4);
        CHECK(denominator(p[0]) <= 1000);
        CHECK(denominator(p[1]) <= 1000);
    }
    // strictly convex and counterclockwise
    for (std::size_t k = 0; k < 7; ++k)
        CHECK(cross(poly[k], poly[(k + 1) % 7], poly[(k + 2) % 7]) > 0);
}

TEST_CASE("random_polygon is deterministic in the seed") {
    SuiteSpec spec;
    Rng a(99), b(99);
    CHECK(random_polygon(2, spec, a) == random_polygon(2, spec, b));
}

TEST_CASE("polygon_to_forms: unit square") {
    std::vector<RatVector> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto forms = polygon_to_forms(sq);
    REQUIRE(forms.size() == 4);
    CHECK(forms[0] == AffineForm{{0, 1}, 0});   // y2
    CHECK(forms[1] == AffineForm{{-1, 0}, 1});  // 1 - y1
    CHECK(forms[2] == AffineForm{{0, -1}, 1});  // 1 - y2
    CHECK(forms[3] == AffineForm{{1, 0}, 0});   // y1
}

TEST_CASE("polygon_to_forms: sampled polygons are positive chambers") {
    SuiteSpec spec;
    Rng rng(5);
    auto poly = random_polygon(4, spec, rng);
    auto forms = polygon_to_forms(poly);
    for (std::size_t k = 0; k < forms.size(); ++k) {
        Int g = 0;
        for (const auto& c : {forms[k].linear[0], forms[k].linear[1], forms[k].constant}) {
            CHECK(denominator(c) == 1);
            g = gcd(g, numerator(c));
        }
        CHECK(abs(g) == 1);
        // vertices not on the edge evaluate strictly positive
        for (std::size_t v = 0; v < poly.size(); ++v) {
            Rat val = forms[k].eval(poly[v]);
            CHECK(val >= 0);
            if (v != k && v != (k + 1) % poly.size()) CHECK(val > 0);
        }
    }
}

TEST_CASE("random_exponents: ranges and alternation") {
    SuiteSpec spec;
    Rng rng(11);
    for (std::size_t m : {4u, 5u, 7u, 10u}) {
        auto e = random_exponents(m, spec, rng);
        REQUIRE(e.beta_plus.size() == m);
        REQUIRE(e.beta_pm.size() == m);
        std::size_t same_sign_pairs = 0;
        for (std::size_t k = 0; k < m; ++k) {
            CHECK(e.beta_plus[k] >= 1);
            CHECK(e.beta_plus[k] <= 10);
            CHECK(abs(e.beta_pm[k]) >= 1);
            CHECK(abs(e.beta_pm[k]) <= 10);
            if (e.beta_pm[k] * e.beta_pm[(k + 1) % m] > 0) ++same_sign_pairs;
        }
        CHECK(same_sign_pairs == m % 2);
    }
}

TEST_CASE("generate_suite: structure and the Theorem 2.1 mechanism") {
    SuiteSpec spec;
    spec.n_values = {2, 3, 4};
    spec.instances_per_n = 5;
    spec.seed = 1234;
    auto suite = generate_suite(spec);
    REQUIRE(suite.size() == 15);

    for (const auto& inst : suite) {
        std::size_t m = inst.n + 2;
        REQUIRE(inst.plus_first.forms.size() == m);
        CHECK(inst.plus_first.forms == inst.pm_first.forms);
        for (std::size_t k = 0; k < m; ++k) {
            CHECK(inst.plus_first.B(k, 0) == inst.pm_first.B(k, 1));
            CHECK(inst.plus_first.B(k, 1) == inst.pm_first.B(k, 0));
        }

        Chamber ch = build_chamber(inst.plus_first.forms, 2);
        CHECK(ch.bounded);
        CHECK(ch.vertices.size() == m);
        CHECK(ch.edges.size() == m);
        CHECK(ch.warnings.empty());

        // beta_plus first: no vertex qualifies
        CHECK(classify_faces(ch, inst.plus_first.B).M0 == 0);

        // beta_pm first: a vertex qualifies iff its incident entries differ
        // in sign, which the alternating pattern makes the typical case
        FaceReport rep = classify_faces(ch, inst.pm_first.B);
        for (std::size_t v = 0; v < ch.vertices.size(); ++v) {
            const auto& inc = ch.vertices[v].incident;
            bool opposite = inst.pm_first.B(inc.first, 0) * inst.pm_first.B(inc.second, 0) < 0;
            CHECK(rep.vertex_meets_mu[v] == opposite);
        }
    }
}

TEST_CASE("generate_suite is reproducible") {
    SuiteSpec spec;
    spec.n_values = {3};
    spec.instances_per_n = 2;
    spec.seed = 77;
    auto a = generate_suite(spec);
    auto b = generate_suite(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].plus_first.forms == b[i].plus_first.forms);
    }
}
