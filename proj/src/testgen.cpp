#include "gale/testgen.hpp"

#include <algorithm>
#include <cmath>

namespace gale {

namespace {

Rat cross(const RatVector& o, const RatVector& a, const RatVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Convex hull, counterclockwise, strict turns only (collinear points are
/// interior). Andrew's monotone chain.
std::vector<RatVector> convex_hull(std::vector<RatVector> pts) {
    std::sort(pts.begin(), pts.end(), [](const RatVector& a, const RatVector& b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t m = pts.size();
    if (m < 3) return pts;
    std::vector<RatVector> h(2 * m);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = m - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

Int igcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::vector<RatVector> random_polygon(std::size_t n, const SuiteSpec& spec, Rng& rng) {
    std::uniform_real_distribution<double> uangle(0.0, 2.0 * 3.14159265358979323846);
    double lo = static_cast<double>(to_bigfloat(spec.annulus_inner));
    double hi = static_cast<double>(to_bigfloat(spec.annulus_outer));
    std::uniform_real_distribution<double> uradius(lo, hi);
    Rat r2lo = spec.annulus_inner * spec.annulus_inner;
    Rat r2hi = spec.annulus_outer * spec.annulus_outer;

    std::vector<RatVector> pts;
    std::size_t want = n + 2;
    for (std::size_t attempt = 0; attempt < spec.attempt_cap; ++attempt) {
        double ang = uangle(rng), rad = uradius(rng);
        Rat x(static_cast<long>(std::lround(rad * std::cos(ang) * spec.denominator)),
              spec.denominator);
        Rat y(static_cast<long>(std::lround(rad * std::sin(ang) * spec.denominator)),
              spec.denominator);
        Rat rr = x * x + y * y;
        if (rr < r2lo || rr > r2hi) continue;
        std::vector<RatVector> trial = pts;
        trial.push_back({x, y});
        if (convex_hull(trial).size() != trial.size()) continue;
        pts = std::move(trial);
        if (pts.size() == want) return convex_hull(pts);
    }
    throw SamplingExhaustedError("could not sample points in convex position");
}

std::vector<AffineForm> polygon_to_forms(const std::vector<RatVector>& vertices) {
    std::size_t m = vertices.size();
    std::vector<AffineForm> forms;
    for (std::size_t k = 0; k < m; ++k) {
        const RatVector& a = vertices[k];
        const RatVector& b = vertices[(k + 1) % m];
        // inward normal of a counterclockwise edge
        Rat nx = -(b[1] - a[1]);
        Rat ny = b[0] - a[0];
        Rat c = -(nx * a[0] + ny * a[1]);
        Int den = lcm(lcm(denominator(nx), denominator(ny)), denominator(c));
        Int ix = numerator(nx) * (den / denominator(nx));
        Int iy = numerator(ny) * (den / denominator(ny));
        Int ic = numerator(c) * (den / denominator(c));
        Int g = igcd(igcd(ix, iy), ic);
        forms.push_back({{Rat(ix / g), Rat(iy / g)}, Rat(ic / g)});
    }
    return forms;
}

ExponentPair random_exponents(std::size_t edge_count, const SuiteSpec& spec, Rng& rng) {
    std::uniform_int_distribution<int> mag(spec.magnitude_lo, spec.magnitude_hi);
    ExponentPair out;
    for (std::size_t k = 0; k < edge_count; ++k) {
        out.beta_plus.push_back(Int(mag(rng)));
        int s = (k % 2 == 0) ? 1 : -1;
        out.beta_pm.push_back(Int(s * mag(rng)));
    }
    return out;
}

GaleSystem assemble_gale(const std::vector<AffineForm>& forms,
                         const std::vector<Int>& col0, const std::vector<Int>& col1) {
    GaleSystem G;
    G.n = forms.size() - 2;
    G.ell = 2;
    G.forms = forms;
    G.B = IntMatrix(forms.size(), 2);
    for (std::size_t k = 0; k < forms.size(); ++k) {
        G.B(k, 0) = col0[k];
        G.B(k, 1) = col1[k];
    }
    G.compactified = false;
    G.perm.resize(forms.size());
    for (std::size_t k = 0; k < forms.size(); ++k) G.perm[k] = k;
    return G;
}

std::vector<SuiteInstance> generate_suite(const SuiteSpec& spec) {
    std::vector<SuiteInstance> out;
    for (std::size_t n : spec.n_values) {
        for (std::size_t i = 0; i < spec.instances_per_n; ++i) {
            SuiteInstance inst;
            inst.n = n;
            // splitmix-style per-instance seed derivation
            std::uint64_t s = spec.seed + 0x9e3779b97f4a7c15ULL * (n * 1000003ULL + i + 1);
            s ^= s >> 30;
            s *= 0xbf58476d1ce4e5b9ULL;
            s ^= s >> 27;
            inst.seed = s;
            Rng rng(inst.seed);
            auto poly = random_polygon(n, spec, rng);
            auto forms = polygon_to_forms(poly);
            auto beta = random_exponents(forms.size(), spec, rng);
            inst.plus_first = assemble_gale(forms, beta.beta_plus, beta.beta_pm);
            inst.pm_first = assemble_gale(forms, beta.beta_pm, beta.beta_plus);
            out.push_back(std::move(inst));
        }
    }
    return out;
}

}  // namespace gale
