#include "gale/chamber.hpp"

#include <algorithm>

#include "gale/exact_arith.hpp"

namespace gale {

namespace {

/// Counterclockwise order around `center`: upper half-plane first, exact
/// cross-product comparisons within a half.
struct AngularLess {
    const RatVector& center;
    const std::vector<ChamberVertex>& verts;

    bool upper(const RatVector& d) const { return d[1] > 0 || (d[1] == 0 && d[0] > 0); }

    bool operator()(std::size_t a, std::size_t b) const {
        RatVector da{verts[a].point[0] - center[0], verts[a].point[1] - center[1]};
        RatVector db{verts[b].point[0] - center[0], verts[b].point[1] - center[1]};
        bool ua = upper(da), ub = upper(db);
        if (ua != ub) return ua;
        Rat cross = da[0] * db[1] - da[1] * db[0];
        return cross > 0;
    }
};

}  // namespace

Chamber build_chamber(const std::vector<AffineForm>& forms, std::size_t ell) {
    Chamber ch;
    ch.forms = forms;
    ch.ell = ell;
    ch.inner = interior_point(forms);
    ch.bounded = chamber_is_bounded(forms);
    if (ell != 2) return ch;

    std::size_t m = forms.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Rat det = forms[i].linear[0] * forms[j].linear[1] -
                      forms[i].linear[1] * forms[j].linear[0];
            if (det == 0) continue;
            RatVector v(2);
            v[0] = (-forms[i].constant * forms[j].linear[1] +
                    forms[j].constant * forms[i].linear[1]) /
                   det;
            v[1] = (-forms[j].constant * forms[i].linear[0] +
                    forms[i].constant * forms[j].linear[0]) /
                   det;
            bool inside = true;
            std::size_t vanish = 0;
            for (std::size_t k = 0; k < m; ++k) {
                Rat val = forms[k].eval(v);
                if (val < 0) {
                    inside = false;
                    break;
                }
                if (val == 0) ++vanish;
            }
            if (!inside) continue;
            bool seen = false;
            for (const auto& w : ch.vertices)
                if (w.point == v) seen = true;
            if (seen) continue;
            if (vanish > 2)
                ch.warnings.push_back("vertex on " + std::to_string(vanish) +
                                      " forms (arrangement not simple)");
            ch.vertices.push_back({v, {i, j}});
        }
    }

    std::vector<std::size_t> order(ch.vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), AngularLess{ch.inner, ch.vertices});
    std::vector<ChamberVertex> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order) sorted.push_back(ch.vertices[i]);
    ch.vertices = std::move(sorted);

    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> on;
        for (std::size_t k = 0; k < ch.vertices.size(); ++k)
            if (forms[i].eval(ch.vertices[k].point) == 0) on.push_back(k);
        if (on.size() == 2) {
            ch.edges.push_back({i, on[0], on[1]});
        } else if (on.size() > 2) {
            ch.warnings.push_back("form " + std::to_string(i) + " passes through " +
                                  std::to_string(on.size()) + " vertices");
        }
    }
    return ch;
}

AssumptionReport check_assumptions(const Chamber& ch, const IntMatrix& B) {
    AssumptionReport rep;
    for (std::size_t k = 0; k < ch.vertices.size(); ++k) {
        std::size_t vanish = 0;
        for (const auto& f : ch.forms)
            if (f.eval(ch.vertices[k].point) == 0) ++vanish;
        if (vanish != ch.ell) {
            rep.simple_vertices = false;
            rep.violations.push_back("vertex " + std::to_string(k) + " lies on " +
                                     std::to_string(vanish) + " forms");
        }
    }
    for (std::size_t k = 0; k < ch.vertices.size(); ++k) {
        const auto& [i1, i2] = ch.vertices[k].incident;
        RatMatrix sub(2, ch.ell);
        for (std::size_t c = 0; c < ch.ell; ++c) {
            sub(0, c) = Rat(B(i1, c));
            sub(1, c) = Rat(B(i2, c));
        }
        if (lp_feasible_nonneg_kernel(sub)) {
            rep.faces_nonneg_kernel_ok = false;
            rep.violations.push_back("vertex " + std::to_string(k) +
                                     ": B submatrix annihilates a nonnegative vector");
        }
    }
    for (const auto& e : ch.edges) {
        if (B(e.form, 0) == 0) {
            rep.faces_nonneg_kernel_ok = false;
            rep.violations.push_back("edge on form " + std::to_string(e.form) +
                                     ": leading exponent entry is zero");
        }
    }
    return rep;
}

FaceReport classify_faces(const Chamber& ch, const IntMatrix& B) {
    FaceReport rep;
    rep.vertex_meets_mu.resize(ch.vertices.size(), false);
    for (std::size_t k = 0; k < ch.vertices.size(); ++k) {
        const auto& [i1, i2] = ch.vertices[k].incident;
        const Int& a = B(i1, 0);
        const Int& b = B(i2, 0);
        bool meets = (a == 0) || (b == 0) || ((a > 0) != (b > 0));
        rep.vertex_meets_mu[k] = meets;
        if (meets) rep.t2_vertices.push_back(k);
    }
    rep.M0 = rep.t2_vertices.size();
    rep.M1 = ch.edges.size();
    return rep;
}

}  // namespace gale
