#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gale/bounds.hpp"
#include "gale/io.hpp"
#include "gale/pipeline.hpp"
#include "gale/testgen.hpp"

using namespace gale;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitIncomplete = 2;

void add_tracker_flags(CLI::App* cmd, TrackerConfig& cfg) {
    cmd->add_option("--initial-step", cfg.initial_step, "predictor step length");
    cmd->add_option("--min-step", cfg.min_step, "smallest step before a path stalls");
    cmd->add_option("--corrector-tol", cfg.corrector_tol, "corrector residual tolerance");
    cmd->add_option("--max-corrector-iters", cfg.max_corrector_iters);
    cmd->add_option("--boundary-margin", cfg.boundary_margin,
                    "chamber margin that triggers step damping");
    cmd->add_option("--dedup-tol", cfg.dedup_tol, "point identification tolerance");
    cmd->add_option("--precision", cfg.precision_bits, "working precision in bits");
    cmd->add_option("--max-steps", cfg.max_steps, "per-path step budget");
}

FewnomialSystem load_fewnomial(const std::string& path) {
    auto sys = load_system(path);
    if (!std::holds_alternative<FewnomialSystem>(sys))
        throw ParseError(path + " is not a fewnomial system file");
    return std::get<FewnomialSystem>(sys);
}

GaleSystem load_gale(const std::string& path) {
    auto sys = load_system(path);
    if (std::holds_alternative<GaleSystem>(sys)) return std::get<GaleSystem>(sys);
    throw ParseError(path + " is not a gale system file");
}

std::vector<IntVector> load_basis_file(const std::string& path) {
    Json j = load_json(path);
    std::vector<IntVector> basis;
    for (const auto& row : j.at("basis")) {
        IntVector v;
        for (const auto& c : row)
            v.push_back(c.is_string() ? Int(c.get<std::string>()) : Int(c.get<long long>()));
        basis.push_back(std::move(v));
    }
    return basis;
}

void print_forms(const GaleSystem& G) {
    for (std::size_t k = 0; k < G.forms.size(); ++k) {
        const AffineForm& f = G.forms[k];
        std::cout << "  Lambda_" << k + 1 << " = " << f.poly().str() << "   beta = (";
        for (std::size_t j = 0; j < G.ell; ++j)
            std::cout << (j ? ", " : "") << G.B(k, j);
        std::cout << ")\n";
    }
    std::cout << "master functions (rational form): prod Lambda_i^{B_ij} = 1\n";
    std::cout << "log form: sum_i B_ij log Lambda_i = 0\n";
    for (std::size_t j = 0; j < G.ell; ++j)
        std::cout << "polynomial form g_" << j + 1 << " = "
                  << gale_polynomial(G, j).str() << "\n";
}

int cmd_transform(const std::string& in, const std::string& out,
                  const std::vector<std::size_t>& params, const std::string& basis_file,
                  bool do_compactify, bool show_forms) {
    FewnomialSystem F = load_fewnomial(in);
    std::vector<IntVector> basis;
    if (!basis_file.empty()) basis = load_basis_file(basis_file);
    GaleSystem G = gale_transform(F, params, basis);
    if (do_compactify) G = compactify(G);
    if (show_forms) print_forms(G);
    if (!out.empty()) save_json(to_json(G), out);
    return kExitOk;
}

int cmd_solve(const std::string& in, const std::string& out, const TrackerConfig& cfg) {
    GaleSystem G = load_gale(in);
    SolutionSet sol = khovanskii_rolle_solve(G, cfg);
    std::cout << "S0=" << sol.report.n_s0 << " T1=" << sol.report.n_t1
              << " T2=" << sol.report.n_t2 << " S1=" << sol.report.n_s1
              << " S2=" << sol.report.n_s2 << " (" << sol.report.wall_seconds << " s)\n";
    for (const auto& e : sol.report.path_errors) std::cerr << "warning: " << e << "\n";
    if (!out.empty()) save_json(solutions_to_json(sol, cfg.precision_bits), out);
    return sol.report.incomplete ? kExitIncomplete : kExitOk;
}

int cmd_unwrap(const std::string& in, const std::string& sols, const std::string& out,
               bool refine, int iters, int bits, const std::string& cert,
               const std::vector<std::size_t>& params,
               const std::vector<IntVector>& basis) {
    FewnomialSystem F = load_fewnomial(in);
    // must match the transform that produced the solutions
    GaleSystem G = gale_transform(F, params, basis);
    UnwrapContext ctx = unwrap_context(F, G);
    Json sj = load_json(sols);
    auto points = points_from_json(sj, bits);

    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "fewnomial_solutions";
    j["precision_bits"] = bits;
    Json pts = Json::array(), certs = Json::array();
    std::vector<std::vector<BigFloat>> refined_points;
    int digits = bits_to_digits10(bits);
    for (const auto& s : points) {
        std::vector<BigFloat> t = unwrap_point(s, ctx, bits);
        Json c;
        if (refine) {
            auto [r, soft] = newton_refine(F, t, iters, bits);
            t = std::move(r);
            c["passed"] = soft.passed;
            Json rs = Json::array();
            for (const auto& v : soft.residuals) rs.push_back(v.str(6));
            c["residuals"] = rs;
            certs.push_back(c);
        }
        Json p = Json::array();
        for (const auto& v : t) p.push_back(v.str(digits));
        pts.push_back(p);
        refined_points.push_back(std::move(t));
    }
    j["points"] = pts;
    if (refine) j["certificates"] = certs;
    if (!out.empty()) save_json(j, out);
    if (!cert.empty()) emit_certification_files(F, refined_points, cert);
    std::cout << points.size() << " point(s) unwrapped\n";
    return kExitOk;
}

int cmd_pipeline(const std::string& in, const std::string& out, PipelineOptions opt,
                 const std::string& cert) {
    FewnomialSystem F = load_fewnomial(in);
    PipelineResult res = run_pipeline(F, opt);
    int digits = bits_to_digits10(opt.tracker.precision_bits);
    std::cout << res.positive.size() << " positive solution(s)\n";
    for (const auto& t : res.positive) {
        std::cout << "  (";
        for (std::size_t i = 0; i < t.size(); ++i)
            std::cout << (i ? ", " : "") << t[i].str(8);
        std::cout << ")\n";
    }
    if (!out.empty()) {
        Json j;
        j["format_version"] = kFormatVersion;
        j["type"] = "fewnomial_solutions";
        j["precision_bits"] = opt.tracker.precision_bits;
        Json pts = Json::array();
        for (const auto& t : res.positive) {
            Json p = Json::array();
            for (const auto& v : t) p.push_back(v.str(digits));
            pts.push_back(p);
        }
        j["points"] = pts;
        Json cs = Json::array();
        for (const auto& c : res.certificates) cs.push_back(c.passed);
        j["certificates_passed"] = cs;
        j["gale"] = solutions_to_json(res.gale, opt.tracker.precision_bits);
        save_json(j, out);
    }
    if (!cert.empty()) emit_certification_files(F, res.positive, cert);
    for (const auto& e : res.gale.report.path_errors) std::cerr << "warning: " << e << "\n";
    return res.gale.report.incomplete ? kExitIncomplete : kExitOk;
}

int cmd_bounds(const std::string& in, long monomial, std::vector<std::size_t> fvec,
               std::vector<std::size_t> mcounts, bool as_json) {
    FewnomialSystem F = load_fewnomial(in);
    if (fvec.empty()) fvec.assign(F.ell, F.n + F.ell);  // polygon default for ell=2
    if (mcounts.empty()) mcounts.assign(F.ell, 0);
    std::optional<std::size_t> dist;
    if (monomial >= 0) dist = static_cast<std::size_t>(monomial);
    BoundReport rep = bound_report(F, fvec, mcounts, dist);
    if (as_json) {
        Json j;
        j["descartes_like"] = rat_str(rep.descartes_like);
        j["descartes_like_floor"] =
            static_cast<long>(numerator(rep.descartes_like) / denominator(rep.descartes_like));
        j["fewnomial_face"] = rat_str(rep.fewnomial_face);
        j["khovanskii_style"] = rep.khovanskii_style;
        Json t = Json::array();
        for (const auto& v : rep.tighter_Tj) t.push_back(rat_str(v));
        j["tighter_Tj"] = t;
        j["interior_exponent"] = rep.hypotheses.interior_exponent;
        j["no_positive_C_kernel"] = rep.hypotheses.no_positive_C_kernel;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Descartes-like bound: " << rep.descartes_like << " (floor "
                  << numerator(rep.descartes_like) / denominator(rep.descartes_like)
                  << ")\n";
        std::cout << "fewnomial face bound: " << rep.fewnomial_face << "\n";
        std::cout << "Khovanskii-style (e^2+3)/4 2^binom n^ell: " << rep.khovanskii_style
                  << "\n";
        std::cout << "tighter |T_j| bounds:";
        for (const auto& v : rep.tighter_Tj) std::cout << " " << v;
        std::cout << "\nhypotheses: interior_exponent="
                  << (rep.hypotheses.interior_exponent ? "true" : "false")
                  << " no_positive_C_kernel="
                  << (rep.hypotheses.no_positive_C_kernel ? "true" : "false") << "\n";
    }
    return kExitOk;
}

SuiteSpec make_spec(const std::vector<std::size_t>& ns, std::size_t count,
                    std::uint64_t seed) {
    SuiteSpec spec;
    if (!ns.empty()) spec.n_values = ns;
    spec.instances_per_n = count;
    spec.seed = seed;
    return spec;
}

int cmd_gen(const std::string& dir, const std::vector<std::size_t>& ns, std::size_t count,
            std::uint64_t seed) {
    SuiteSpec spec = make_spec(ns, count, seed);
    fs::create_directories(dir);
    auto suite = generate_suite(spec);
    Json manifest;
    manifest["format_version"] = kFormatVersion;
    manifest["seed"] = spec.seed;
    manifest["instances_per_n"] = spec.instances_per_n;
    manifest["n_values"] = spec.n_values;
    Json files = Json::array();
    std::size_t idx = 0;
    std::size_t per_n_counter = 0;
    std::size_t last_n = 0;
    for (const auto& inst : suite) {
        if (inst.n != last_n) {
            last_n = inst.n;
            per_n_counter = 0;
        }
        std::string base =
            "n" + std::to_string(inst.n) + "_i" + std::to_string(per_n_counter++);
        std::string plus = base + "_plus.json", pm = base + "_pm.json";
        save_json(to_json(inst.plus_first), (fs::path(dir) / plus).string());
        save_json(to_json(inst.pm_first), (fs::path(dir) / pm).string());
        files.push_back(Json{{"n", inst.n},
                             {"instance", per_n_counter - 1},
                             {"seed", inst.seed},
                             {"plus_first", plus},
                             {"pm_first", pm}});
        ++idx;
    }
    manifest["files"] = files;
    save_json(manifest, (fs::path(dir) / "manifest.json").string());
    std::cout << "wrote " << 2 * idx << " system files to " << dir << "\n";
    return kExitOk;
}

int cmd_bench(const std::string& csv, const std::vector<std::size_t>& ns,
              std::size_t count, std::uint64_t seed, const TrackerConfig& cfg) {
    SuiteSpec spec = make_spec(ns, count, seed);
    auto suite = generate_suite(spec);
    std::ofstream out(csv);
    if (!out) throw ParseError("cannot write " + csv);
    out << "n,instance,ordering,s0,t1,t2,s1,s2,stalled_paths,incomplete,wall_seconds\n";
    double sum_plus = 0, sum_pm = 0;
    std::size_t per_n_counter = 0, last_n = 0;
    for (const auto& inst : suite) {
        if (inst.n != last_n) {
            last_n = inst.n;
            per_n_counter = 0;
        }
        for (int ord = 0; ord < 2; ++ord) {
            const GaleSystem& G = ord == 0 ? inst.plus_first : inst.pm_first;
            SolveReport r;
            try {
                r = khovanskii_rolle_solve(G, cfg).report;
            } catch (const GaleError& e) {
                r.incomplete = true;
                r.path_errors.push_back(e.what());
            }
            out << inst.n << "," << per_n_counter << ","
                << (ord == 0 ? "plus_first" : "pm_first") << "," << r.n_s0 << ","
                << r.n_t1 << "," << r.n_t2 << "," << r.n_s1 << "," << r.n_s2 << ","
                << r.stalled_paths << "," << (r.incomplete ? 1 : 0) << ","
                << r.wall_seconds << "\n";
            (ord == 0 ? sum_plus : sum_pm) += r.wall_seconds;
        }
        ++per_n_counter;
    }
    std::cout << "total wall time: plus_first " << sum_plus << " s, pm_first " << sum_pm
              << " s";
    if (sum_plus > 0) std::cout << " (ratio " << sum_pm / sum_plus << ")";
    std::cout << "\nwrote " << csv << "\n";
    return kExitOk;
}

int cmd_check(const std::string& in) {
    auto sys = load_system(in);
    if (std::holds_alternative<FewnomialSystem>(sys)) {
        const auto& F = std::get<FewnomialSystem>(sys);
        validate_fewnomial(F);
        HypothesisFlags flags = check_theorem_hypotheses(F);
        std::cout << "fewnomial system: n=" << F.n << " ell=" << F.ell << "\n"
                  << "interior_exponent=" << (flags.interior_exponent ? "true" : "false")
                  << " no_positive_C_kernel="
                  << (flags.no_positive_C_kernel ? "true" : "false") << "\n";
        return kExitOk;
    }
    const auto& G = std::get<GaleSystem>(sys);
    Chamber ch = build_chamber(G.forms, G.ell);
    std::cout << "gale system: n=" << G.n << " ell=" << G.ell
              << " chamber=" << (ch.bounded ? "bounded" : "unbounded")
              << " vertices=" << ch.vertices.size() << " edges=" << ch.edges.size()
              << "\n";
    for (const auto& w : ch.warnings) std::cout << "warning: " << w << "\n";
    AssumptionReport rep = check_assumptions(ch, G.B);
    std::cout << "simple_vertices=" << (rep.simple_vertices ? "true" : "false")
              << " faces_nonneg_kernel_ok="
              << (rep.faces_nonneg_kernel_ok ? "true" : "false") << "\n";
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    FaceReport faces = classify_faces(ch, G.B);
    std::cout << "M0=" << faces.M0 << " M1=" << faces.M1 << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gale duality tools for fewnomial systems"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (paths are run sequentially)");

    std::string in, out, basis_file, sols_file, cert, dir = "suite", csv = "bench.csv";
    std::vector<std::size_t> params, fvec, mcounts, ns;
    bool do_compactify = false, show_forms = false, no_refine = false, as_json = false;
    long monomial = -1;
    int iters = 2;
    std::size_t count = 10;
    std::uint64_t seed = 0;
    TrackerConfig cfg;

    auto* t = app.add_subcommand("transform", "fewnomial system -> Gale system");
    t->add_option("-i,--input", in)->required();
    t->add_option("-o,--output", out);
    t->add_option("--param-cols", params, "parameter monomial columns");
    t->add_option("--basis", basis_file, "JSON file with a forced kernel basis");
    t->add_flag("--compactify", do_compactify);
    t->add_flag("--print-forms", show_forms, "print the three master-function forms");

    auto* s = app.add_subcommand("solve", "Khovanskii-Rolle continuation on a Gale system");
    s->add_option("-i,--input", in)->required();
    s->add_option("-o,--output", out);
    add_tracker_flags(s, cfg);

    auto* u = app.add_subcommand("unwrap", "Gale solutions -> positive fewnomial solutions");
    u->add_option("-i,--input", in, "fewnomial system file")->required();
    u->add_option("-s,--solutions", sols_file, "gale solutions JSON")->required();
    u->add_option("-o,--output", out);
    u->add_option("--param-cols", params, "parameter columns used by the transform");
    u->add_option("--basis", basis_file, "basis file used by the transform");
    u->add_flag("--no-refine", no_refine, "skip Newton refinement");
    u->add_option("--iters", iters, "Newton iterations");
    u->add_option("--precision", cfg.precision_bits);
    u->add_option("--emit-cert", cert, "write alphaCertified input files at this path");

    auto* p = app.add_subcommand("pipeline", "transform + solve + unwrap");
    p->add_option("-i,--input", in)->required();
    p->add_option("-o,--output", out);
    p->add_option("--param-cols", params);
    p->add_option("--basis", basis_file, "JSON file with a forced kernel basis");
    p->add_flag("--no-refine", no_refine);
    p->add_option("--iters", iters);
    p->add_option("--emit-cert", cert);
    add_tracker_flags(p, cfg);

    auto* b = app.add_subcommand("bounds", "solution-count bounds and hypothesis checks");
    b->add_option("-i,--input", in)->required();
    b->add_option("--monomial", monomial, "distinguished monomial column (default: constant)");
    b->add_option("--f-vector", fvec, "face counts of the chamber, length ell");
    b->add_option("--m-counts", mcounts, "M_d counts from classify_faces");
    b->add_flag("--json", as_json);

    auto* g = app.add_subcommand("gen", "generate a random Gale test suite");
    g->add_option("-o,--out", dir, "output directory");
    g->add_option("-n", ns, "values of n");
    g->add_option("--count", count, "instances per n");
    g->add_option("--seed", seed);

    auto* be = app.add_subcommand("bench", "run the suite and archive counts/timings");
    be->add_option("-o,--csv", csv, "output CSV");
    be->add_option("-n", ns, "values of n");
    be->add_option("--count", count, "instances per n");
    be->add_option("--seed", seed);
    add_tracker_flags(be, cfg);

    auto* c = app.add_subcommand("check", "validate a system file and its assumptions");
    c->add_option("-i,--input", in)->required();

    CLI11_PARSE(app, argc, argv);
    if (threads < 1) {
        std::cerr << "error: --threads must be positive\n";
        return kExitInputError;
    }

    try {
        if (t->parsed())
            return cmd_transform(in, out, params, basis_file, do_compactify, show_forms);
        if (s->parsed()) return cmd_solve(in, out, cfg);
        if (u->parsed()) {
            std::vector<IntVector> basis;
            if (!basis_file.empty()) basis = load_basis_file(basis_file);
            return cmd_unwrap(in, sols_file, out, !no_refine, iters, cfg.precision_bits,
                              cert, params, basis);
        }
        if (p->parsed()) {
            PipelineOptions opt;
            opt.param_cols = params;
            if (!basis_file.empty()) opt.forced_basis = load_basis_file(basis_file);
            opt.tracker = cfg;
            opt.refine = !no_refine;
            opt.refine_iters = iters;
            return cmd_pipeline(in, out, opt, cert);
        }
        if (b->parsed()) return cmd_bounds(in, monomial, fvec, mcounts, as_json);
        if (g->parsed()) return cmd_gen(dir, ns, count, seed);
        if (be->parsed()) return cmd_bench(csv, ns, count, seed, cfg);
        if (c->parsed()) return cmd_check(in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
