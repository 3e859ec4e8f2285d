#include "gale/solver.hpp"

#include <algorithm>
#include <chrono>

#include "gale/resultant.hpp"
#include "gale/univariate.hpp"

namespace gale {

namespace {

using FVec = std::vector<BigFloat>;

BigFloat dist_inf(const FVec& a, const FVec& b) {
    BigFloat d = abs(a[0] - b[0]);
    BigFloat e = abs(a[1] - b[1]);
    return d > e ? d : e;
}

int fsign(const BigFloat& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

/// A bivariate polynomial compiled to float coefficients at the current
/// working precision; far cheaper to evaluate than a SparsePoly.
struct FPoly {
    struct Term {
        int i, j;
        BigFloat c;
    };
    std::vector<Term> terms;
    int dx = 0, dy = 0;

    FPoly() = default;
    explicit FPoly(const SparsePoly& p) {
        for (const auto& [e, c] : p.terms()) {
            terms.push_back({e[0], e[1], to_bigfloat(c)});
            dx = std::max(dx, e[0]);
            dy = std::max(dy, e[1]);
        }
    }
    BigFloat eval(const FVec& y) const {
        thread_local std::vector<BigFloat> xp, yp;
        xp.assign(dx + 1, BigFloat(1));
        yp.assign(dy + 1, BigFloat(1));
        for (int i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * y[0];
        for (int j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * y[1];
        BigFloat acc = 0;
        for (const auto& t : terms) acc += t.c * xp[t.i] * yp[t.j];
        return acc;
    }
};

struct FForm {
    BigFloat a, b, c;
    explicit FForm(const AffineForm& f)
        : a(to_bigfloat(f.linear[0])), b(to_bigfloat(f.linear[1])),
          c(to_bigfloat(f.constant)) {}
    BigFloat eval(const FVec& y) const { return a * y[0] + b * y[1] + c; }
};

std::vector<FForm> compile_forms(const std::vector<AffineForm>& forms) {
    std::vector<FForm> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.emplace_back(f);
    return out;
}

BigFloat min_margin(const std::vector<FForm>& forms, const FVec& y) {
    BigFloat m = forms[0].eval(y);
    for (std::size_t i = 1; i < forms.size(); ++i) {
        BigFloat v = forms[i].eval(y);
        if (v < m) m = v;
    }
    return m;
}

/// 2x2 Newton for (p, q) = 0; returns true on convergence.
bool newton2(const FPoly& p, const FPoly& q, const FPoly& px, const FPoly& py,
             const FPoly& qx, const FPoly& qy, FVec& y, const BigFloat& tol, int iters) {
    for (int it = 0; it < iters; ++it) {
        BigFloat f0 = p.eval(y), f1 = q.eval(y);
        BigFloat a = px.eval(y), b = py.eval(y);
        BigFloat c = qx.eval(y), d = qy.eval(y);
        BigFloat det = a * d - b * c;
        if (det == 0) return false;
        BigFloat dx = (f0 * d - f1 * b) / det;
        BigFloat dy = (a * f1 - c * f0) / det;
        y[0] -= dx;
        y[1] -= dy;
        BigFloat step = abs(dx) > abs(dy) ? abs(dx) : abs(dy);
        if (step < tol) return true;
    }
    return false;
}

struct PolyPair {
    FPoly p, px, py;
    explicit PolyPair(const SparsePoly& poly)
        : p(poly), px(poly.derivative(0)), py(poly.derivative(1)) {}
};

/// Tangent-projection corrector onto {curve = 0}.
bool correct_onto(const PolyPair& c, FVec& y, const BigFloat& tol, int iters) {
    for (int it = 0; it < iters; ++it) {
        BigFloat v = c.p.eval(y);
        if (abs(v) < tol) return true;
        BigFloat gx = c.px.eval(y), gy = c.py.eval(y);
        BigFloat g2 = gx * gx + gy * gy;
        if (g2 == 0) return false;
        y[0] -= v * gx / g2;
        y[1] -= v * gy / g2;
    }
    return abs(c.p.eval(y)) < tol;
}

bool merge_into(std::vector<TrackedPoint>& pts, const FVec& y, double tol,
                const std::string& prov) {
    for (auto& p : pts) {
        if (dist_inf(p.coords, y) < tol) {
            ++p.discovery_count;
            p.provenance.push_back(prov);
            return false;
        }
    }
    TrackedPoint tp;
    tp.coords = y;
    tp.provenance.push_back(prov);
    pts.push_back(std::move(tp));
    return true;
}

}  // namespace

std::vector<TrackedPoint> solve_S0(const JacobianChain& chain, const Chamber& ch,
                                   const TrackerConfig& cfg) {
    PrecisionGuard guard(cfg.precision_bits);
    const SparsePoly& J1 = chain.j_tilde[0];
    const SparsePoly& J2 = chain.j_tilde[1];
    if (J1.is_zero() || J2.is_zero())
        throw PositiveDimensionalError("a chain Jacobian is identically zero");

    RatVector R1 = bivariate_resultant(J1, J2, 1);  // univariate in y1
    RatVector R2 = bivariate_resultant(J1, J2, 0);  // univariate in y2
    if (uni_degree(uni_trim(R1)) < 0 || uni_degree(uni_trim(R2)) < 0)
        throw PositiveDimensionalError("resultant vanishes identically");
    if (uni_degree(uni_trim(R1)) == 0 || uni_degree(uni_trim(R2)) == 0)
        return {};  // no common zeros at all

    // S0 lies strictly inside the chamber, so isolation can be confined to
    // the chamber's exact bounding box
    Rat x_lo = ch.vertices[0].point[0], x_hi = x_lo;
    Rat y_lo = ch.vertices[0].point[1], y_hi = y_lo;
    for (const auto& v : ch.vertices) {
        x_lo = std::min(x_lo, v.point[0]);
        x_hi = std::max(x_hi, v.point[0]);
        y_lo = std::min(y_lo, v.point[1]);
        y_hi = std::max(y_hi, v.point[1]);
    }

    Rat width(1, Int(1) << 48);
    auto isolate = [&](const RatVector& R, const Rat& lo, const Rat& hi) {
        // multiple roots of the resultant rarely fall inside the chamber box,
        // so try isolation without the (expensive) exact squarefree part and
        // only compute it when subdivision fails to separate
        RatVector pr = uni_primitive(R);
        std::vector<RootInterval> ivs;
        try {
            ivs = isolate_roots_squarefree(pr, lo, hi);
        } catch (const GaleError&) {
            pr = uni_squarefree(R);
            ivs = isolate_roots(pr, lo, hi);
        }
        std::vector<Rat> mids;
        for (auto iv : ivs) {
            iv = refine_root(pr, iv, width);
            mids.push_back((iv.lo + iv.hi) / 2);
        }
        return mids;
    };
    std::vector<Rat> xs = isolate(R1, x_lo, x_hi);
    std::vector<Rat> ys = isolate(R2, y_lo, y_hi);

    FPoly J1f(J1), J2f(J2);
    FPoly j1x(J1.derivative(0)), j1y(J1.derivative(1));
    FPoly j2x(J2.derivative(0)), j2y(J2.derivative(1));

    BigFloat tol = BigFloat(1e-6);
    BigFloat fine = boost::multiprecision::pow(BigFloat(2), -(cfg.precision_bits / 2));
    std::vector<TrackedPoint> out;
    for (const auto& rx : xs) {
        for (const auto& ry : ys) {
            FVec y{to_bigfloat(rx), to_bigfloat(ry)};
            FVec seed = y;
            if (!newton2(J1f, J2f, j1x, j1y, j2x, j2y, y, fine, 80)) continue;
            if (dist_inf(y, seed) > tol) continue;  // pair does not validate
            // strict chamber membership at an exact rational snapshot
            RatVector snap{to_rational(y[0], cfg.precision_bits),
                           to_rational(y[1], cfg.precision_bits)};
            bool inside = true;
            for (const auto& f : ch.forms)
                if (f.eval(snap) <= 0) inside = false;
            if (!inside) continue;
            if (merge_into(out, y, cfg.dedup_tol, "S0 resultant")) {
                out.back().kind = PointKind::S0;
                BigFloat r1 = abs(J1f.eval(y)), r2 = abs(J2f.eval(y));
                out.back().residual = r1 > r2 ? r1 : r2;
            }
        }
    }
    return out;
}

std::vector<TrackedPoint> boundary_T1(const JacobianChain& chain, const Chamber& ch,
                                      const TrackerConfig& cfg) {
    PrecisionGuard guard(cfg.precision_bits);
    const SparsePoly& J2 = chain.j_tilde[1];
    Rat width(1, Int(1) << 64);
    std::vector<TrackedPoint> out;
    for (const auto& e : ch.edges) {
        const RatVector& a = ch.vertices[e.v0].point;
        const RatVector& b = ch.vertices[e.v1].point;
        RatVector dir{b[0] - a[0], b[1] - a[1]};
        RatVector coeffs = J2.restrict_line(a, dir);
        if (uni_degree(coeffs) < 0) continue;  // J~_2 vanishes on the edge: degenerate
        RatVector sf = uni_squarefree(coeffs);
        for (auto iv : isolate_roots(sf, 0, 1)) {
            iv = refine_root(sf, iv, width);
            Rat t = (iv.lo + iv.hi) / 2;
            TrackedPoint tp;
            tp.kind = PointKind::T1;
            tp.aux = static_cast<int>(e.form);
            tp.coords = {to_bigfloat(a[0] + t * dir[0]), to_bigfloat(a[1] + t * dir[1])};
            tp.provenance.push_back("T1 edge " + std::to_string(e.form));
            out.push_back(std::move(tp));
        }
    }
    return out;
}

std::vector<TrackedPoint> boundary_T2(const Chamber& ch, const IntMatrix& B) {
    FaceReport rep = classify_faces(ch, B);
    std::vector<TrackedPoint> out;
    for (std::size_t k : rep.t2_vertices) {
        TrackedPoint tp;
        tp.kind = PointKind::T2;
        tp.aux = static_cast<int>(k);
        tp.coords = {to_bigfloat(ch.vertices[k].point[0]),
                     to_bigfloat(ch.vertices[k].point[1])};
        tp.provenance.push_back("T2 vertex " + std::to_string(k));
        out.push_back(std::move(tp));
    }
    return out;
}

TrackResult track(const SparsePoly& curve, const SparsePoly& detect,
                  const std::vector<AffineForm>& forms, const std::vector<BigFloat>& start,
                  int direction, const std::vector<std::vector<BigFloat>>& registered,
                  const TrackerConfig& cfg) {
    PrecisionGuard guard(cfg.precision_bits);
    PolyPair c(curve), d(detect);
    FPoly dx(detect.derivative(0)), dy(detect.derivative(1));
    std::vector<FForm> fforms = compile_forms(forms);

    TrackResult res;
    FVec y = start;
    BigFloat ctol(cfg.corrector_tol);
    if (!correct_onto(c, y, ctol, cfg.max_corrector_iters)) {
        res.end = TrackEnd::Stalled;
        res.note = "start does not lie on the curve";
        res.final_point = y;
        return res;
    }

    auto tangent_at = [&](const FVec& p) -> FVec {
        BigFloat gx = c.px.eval(p), gy = c.py.eval(p);
        BigFloat n = boost::multiprecision::sqrt(gx * gx + gy * gy);
        if (n == 0) return {BigFloat(0), BigFloat(0)};
        return {-gy / n, gx / n};
    };

    FVec tang = tangent_at(y);
    if (tang[0] == 0 && tang[1] == 0) {
        res.end = TrackEnd::Stalled;
        res.note = "singular start";
        res.final_point = y;
        return res;
    }
    if (direction < 0) {
        tang[0] = -tang[0];
        tang[1] = -tang[1];
    }

    // arm the arrival check only after leaving each start's neighborhood
    std::vector<bool> armed(registered.size());
    BigFloat capture(cfg.dedup_tol);
    for (std::size_t i = 0; i < registered.size(); ++i)
        armed[i] = dist_inf(y, registered[i]) > BigFloat(cfg.initial_step);

    BigFloat step(cfg.initial_step);
    int detect_sign = fsign(d.p.eval(y));
    int damped_in_a_row = 0;

    // a path stuck within one full step of a registered start has reached it
    auto rescue_arrival = [&](const FVec& p) -> bool {
        for (std::size_t i = 0; i < registered.size(); ++i) {
            if (!armed[i]) continue;
            if (dist_inf(p, registered[i]) < BigFloat(cfg.initial_step)) {
                res.end = TrackEnd::Arrived;
                res.final_point = registered[i];
                return true;
            }
        }
        return false;
    };

    auto localize_event = [&](const FVec& a, const FVec& b, const BigFloat& span) {
        FVec mid{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
        if (newton2(c.p, d.p, c.px, c.py, dx, dy, mid, ctol / 100, 60) &&
            dist_inf(mid, a) < span * 4 && min_margin(fforms, mid) > 0)
            res.events.push_back(mid);
    };

    for (int iter = 0; iter < cfg.max_steps; ++iter) {
        BigFloat margin = min_margin(fforms, y);
        BigFloat eff = step;
        if (margin < BigFloat(cfg.boundary_margin) * eff) {
            // damp near the boundary, with a floor so progress continues
            BigFloat damp = margin / (BigFloat(cfg.boundary_margin) * eff);
            if (damp < 0) damp = 0;
            eff = eff * damp;
            // stall only when pinned at the floor; a damped step that still
            // moves is legitimate progress along a near-boundary stretch
            if (eff <= BigFloat(cfg.min_step)) {
                eff = BigFloat(cfg.min_step);
                ++damped_in_a_row;
            } else {
                damped_in_a_row = 0;
            }
        } else {
            damped_in_a_row = 0;
        }

        FVec pred{y[0] + eff * tang[0], y[1] + eff * tang[1]};
        FVec next = pred;
        if (!correct_onto(c, next, ctol, cfg.max_corrector_iters) ||
            dist_inf(next, pred) > eff) {
            step /= 2;
            if (step < BigFloat(cfg.min_step)) {
                if (rescue_arrival(y)) return res;
                res.end = TrackEnd::Stalled;
                res.note = "corrector failure at minimal step";
                res.final_point = y;
                return res;
            }
            continue;
        }

        // boundary exit
        if (min_margin(fforms, next) < 0) {
            // shrink onto the boundary by bisection along the arc
            FVec lo = y, hi = next;
            for (int b = 0; b < 80; ++b) {
                FVec mid{(lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2};
                correct_onto(c, mid, ctol, cfg.max_corrector_iters);
                if (min_margin(fforms, mid) < 0)
                    hi = mid;
                else
                    lo = mid;
            }
            int s = fsign(d.p.eval(lo));
            if (detect_sign != 0 && s != 0 && s != detect_sign) localize_event(y, lo, eff);
            res.end = TrackEnd::Exited;
            res.final_point = lo;
            return res;
        }

        // event detection
        int s = fsign(d.p.eval(next));
        if (detect_sign != 0 && s != 0 && s != detect_sign) localize_event(y, next, eff);
        if (s != 0) detect_sign = s;

        // arrival at a registered start
        for (std::size_t i = 0; i < registered.size(); ++i) {
            BigFloat dd = dist_inf(next, registered[i]);
            BigFloat cap = capture > eff / 2 ? capture : eff / 2;
            if (!armed[i]) {
                if (dd > cap * 2) armed[i] = true;
                continue;
            }
            if (dd < cap) {
                res.end = TrackEnd::Arrived;
                res.final_point = registered[i];
                return res;
            }
        }

        FVec nt = tangent_at(next);
        if (nt[0] == 0 && nt[1] == 0) {
            if (rescue_arrival(next)) return res;
            res.end = TrackEnd::Stalled;
            res.note = "singular point on curve";
            res.final_point = next;
            return res;
        }
        if (nt[0] * tang[0] + nt[1] * tang[1] < 0) {
            nt[0] = -nt[0];
            nt[1] = -nt[1];
        }
        y = next;
        tang = nt;
        step = step * BigFloat(1.3);
        if (step > BigFloat(cfg.initial_step)) step = BigFloat(cfg.initial_step);
        if (damped_in_a_row > 200) {
            if (rescue_arrival(y)) return res;
            res.end = TrackEnd::Stalled;
            res.note = "step damped to the floor near the boundary";
            res.final_point = y;
            return res;
        }
    }
    if (rescue_arrival(y)) return res;
    res.end = TrackEnd::MaxSteps;
    res.final_point = y;
    return res;
}

namespace {

/// Launch points for a T2 vertex start: branches of `curve` entering the
/// vertex must cross every small chord spanning the wedge between the two
/// incident edges, so restrict `curve` to such a chord (exactly) and isolate
/// the roots with Sturm sequences. Robust when a branch is tangent to an edge.
std::vector<FVec> vertex_launches(const SparsePoly& curve, const Chamber& ch,
                                  std::size_t vertex_idx, const TrackerConfig& cfg) {
    const RatVector& v = ch.vertices[vertex_idx].point;
    std::vector<RatVector> ends;  // far endpoints of the incident edges
    for (const auto& e : ch.edges) {
        if (e.v0 == vertex_idx) ends.push_back(ch.vertices[e.v1].point);
        if (e.v1 == vertex_idx) ends.push_back(ch.vertices[e.v0].point);
    }
    if (ends.size() != 2) return {};

    Rat width(1, Int(1) << 64);
    Rat t(1, 16);
    std::vector<FVec> out;
    for (int attempt = 0; attempt < 8 && out.empty(); ++attempt, t /= 4) {
        RatVector a{v[0] + t * (ends[0][0] - v[0]), v[1] + t * (ends[0][1] - v[1])};
        RatVector dir{v[0] + t * (ends[1][0] - v[0]) - a[0],
                      v[1] + t * (ends[1][1] - v[1]) - a[1]};
        RatVector coeffs = curve.restrict_line(a, dir);
        if (uni_degree(uni_trim(coeffs)) <= 0) continue;
        RatVector sf = uni_squarefree(coeffs);
        for (auto iv : isolate_roots(sf, 0, 1)) {
            iv = refine_root(sf, iv, width);
            Rat s = (iv.lo + iv.hi) / 2;
            out.push_back({to_bigfloat(a[0] + s * dir[0]), to_bigfloat(a[1] + s * dir[1])});
        }
    }
    PolyPair c(curve);
    for (auto& p : out) correct_onto(c, p, BigFloat(cfg.corrector_tol), 40);
    return out;
}

int inward_direction(const PolyPair& c, const FVec& p, const FVec& inward) {
    BigFloat gx = c.px.eval(p), gy = c.py.eval(p);
    BigFloat dot = -gy * inward[0] + gx * inward[1];
    return dot >= 0 ? 1 : -1;
}

}  // namespace

SolutionSet khovanskii_rolle_solve(const GaleSystem& G_in, const TrackerConfig& cfg_in) {
    auto t_begin = std::chrono::steady_clock::now();
    PrecisionGuard guard(cfg_in.precision_bits);
    SolutionSet sol;
    sol.system = compactify(G_in);
    const GaleSystem& G = sol.system;
    if (G.ell != 2) throw GaleError("khovanskii_rolle_solve requires ell = 2");

    Chamber ch = build_chamber(G.forms, 2);

    // scale step and capture tolerances down for chambers smaller than unit
    // size, so sign-change detection cannot jump across a feature
    TrackerConfig cfg = cfg_in;
    {
        Rat diam = 0;
        for (const auto& v : ch.vertices)
            for (const auto& w : ch.vertices)
                for (int k = 0; k < 2; ++k)
                    diam = std::max(diam, Rat(abs(v.point[k] - w.point[k])));
        double d = diam.convert_to<double>();
        if (d > 0 && d < 1) {
            cfg.initial_step *= d;
            cfg.min_step *= d;
            cfg.dedup_tol *= d;
        }
    }

    JacobianChain chain = jacobian_chain(G);
    SparsePoly g1 = scale_polynomial(gale_polynomial(G, 0));
    SparsePoly g2 = scale_polynomial(gale_polynomial(G, 1));
    SparsePoly J2s = scale_polynomial(chain.j_tilde[1]);

    sol.s0 = solve_S0(chain, ch, cfg);
    sol.t1 = boundary_T1(chain, ch, cfg);
    sol.t2 = boundary_T2(ch, G.B);
    sol.report.n_s0 = sol.s0.size();
    sol.report.n_t1 = sol.t1.size();
    sol.report.n_t2 = sol.t2.size();

    PolyPair j2pair(J2s), g1pair(g1);

    auto record_end = [&](const TrackResult& r, const std::string& what) {
        if (r.end == TrackEnd::Stalled || r.end == TrackEnd::MaxSteps) {
            ++sol.report.stalled_paths;
            sol.report.incomplete = true;
            sol.report.path_errors.push_back(what + ": " +
                                             (r.note.empty() ? "no arrival" : r.note));
        }
    };

    // stage 1: gamma_1 = V(J~_2), events are zeros of g1 (the S1 points)
    {
        std::vector<FVec> registered;
        for (const auto& p : sol.s0) registered.push_back(p.coords);
        for (const auto& p : sol.t1) registered.push_back(p.coords);

        std::vector<TrackedPoint> s1;
        for (const auto& p : sol.s0) {
            for (int dir : {1, -1}) {
                TrackResult r = track(J2s, g1, G.forms, p.coords, dir, registered, cfg);
                record_end(r, "gamma1 from S0");
                for (const auto& ev : r.events)
                    merge_into(s1, ev, cfg.dedup_tol, "gamma1 from S0");
            }
        }
        for (const auto& p : sol.t1) {
            // inward = gradient of the edge's form
            FVec in{to_bigfloat(G.forms[p.aux].linear[0]),
                    to_bigfloat(G.forms[p.aux].linear[1])};
            int dir = inward_direction(j2pair, p.coords, in);
            TrackResult r = track(J2s, g1, G.forms, p.coords, dir, registered, cfg);
            record_end(r, "gamma1 from T1");
            for (const auto& ev : r.events)
                merge_into(s1, ev, cfg.dedup_tol, "gamma1 from T1");
        }
        for (auto& p : s1) p.kind = PointKind::S1;
        sol.s1 = std::move(s1);
        sol.report.n_s1 = sol.s1.size();
    }

    // stage 2: gamma_2 = V(g1), events are zeros of g2 (the S2 points)
    {
        std::vector<FVec> registered;
        for (const auto& p : sol.s1) registered.push_back(p.coords);
        for (const auto& p : sol.t2) registered.push_back(p.coords);

        std::vector<TrackedPoint> s2;
        for (const auto& p : sol.s1) {
            for (int dir : {1, -1}) {
                TrackResult r = track(g1, g2, G.forms, p.coords, dir, registered, cfg);
                record_end(r, "gamma2 from S1");
                for (const auto& ev : r.events)
                    merge_into(s2, ev, cfg.dedup_tol, "gamma2 from S1");
            }
        }
        for (const auto& p : sol.t2) {
            // the sign condition is only necessary; gamma_2 passes through the
            // vertex iff g1 vanishes there, which is decidable exactly
            if (g1.eval(ch.vertices[p.aux].point) != 0) continue;
            auto launches = vertex_launches(g1, ch, static_cast<std::size_t>(p.aux), cfg);
            if (launches.empty()) {
                ++sol.report.stalled_paths;
                sol.report.incomplete = true;
                sol.report.path_errors.push_back("gamma2 from T2: no inward branch found");
                continue;
            }
            for (const auto& lp : launches) {
                FVec away{lp[0] - p.coords[0], lp[1] - p.coords[1]};
                int dir = inward_direction(g1pair, lp, away);
                TrackResult r = track(g1, g2, G.forms, lp, dir, registered, cfg);
                record_end(r, "gamma2 from T2");
                for (const auto& ev : r.events)
                    merge_into(s2, ev, cfg.dedup_tol, "gamma2 from T2");
            }
        }
        for (auto& p : s2) p.kind = PointKind::S2;
        sol.s2 = std::move(s2);
    }

    // final polish on the polynomial pair, residual from the log forms; a
    // chamber vertex is a common zero of the cleared pair but not of the
    // master functions, so large residuals are boundary artifacts
    {
        FPoly g1f(g1), g2f(g2);
        FPoly g1x(g1.derivative(0)), g1y(g1.derivative(1));
        FPoly g2x(g2.derivative(0)), g2y(g2.derivative(1));
        BigFloat fine = boost::multiprecision::pow(BigFloat(2), -(cfg.precision_bits * 3 / 4));
        BigFloat accept = boost::multiprecision::pow(BigFloat(2), -(cfg.precision_bits / 4));
        std::vector<TrackedPoint> kept;
        for (auto& p : sol.s2) {
            newton2(g1f, g2f, g1x, g1y, g2x, g2y, p.coords, fine, 60);
            if (min_margin(compile_forms(G.forms), p.coords) <= 0) continue;
            BigFloat r0 = abs(evaluate(G, 0, p.coords, MasterFunctionForm::Logarithmic,
                                       cfg.precision_bits));
            BigFloat r1 = abs(evaluate(G, 1, p.coords, MasterFunctionForm::Logarithmic,
                                       cfg.precision_bits));
            p.residual = r0 > r1 ? r0 : r1;
            if (p.residual > accept) continue;
            kept.push_back(p);
        }
        sol.s2 = std::move(kept);
        sol.report.n_s2 = sol.s2.size();
        for (const auto& p : sol.s2) sol.solutions.push_back(original_coords(G, p.coords));
    }

    // Khovanskii-Rolle count inequalities
    sol.report.kr_inequality_ok =
        2 * sol.report.n_s1 <= 2 * sol.report.n_s0 + sol.report.n_t1 &&
        2 * sol.report.n_s2 <= 2 * sol.report.n_s1 + sol.report.n_t2;
    for (const auto& p : sol.s1)
        if (p.discovery_count < 2) sol.report.discovery_ok = false;
    for (const auto& p : sol.s2)
        if (p.discovery_count < 2) sol.report.discovery_ok = false;

    sol.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
    return sol;
}

}  // namespace gale
