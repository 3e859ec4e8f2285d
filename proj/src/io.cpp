#include "gale/io.hpp"

#include <fstream>

namespace gale {

namespace {

Json rat_matrix_json(const RatMatrix& M) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(rat_str(M(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json int_matrix_json(const IntMatrix& M) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

RatMatrix rat_matrix_from(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty matrix");
    RatMatrix M(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != M.cols()) throw ParseError("ragged matrix");
        for (std::size_t k = 0; k < M.cols(); ++k)
            M(i, k) = parse_rat(j[i][k].get<std::string>());
    }
    return M;
}

IntMatrix int_matrix_from(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty matrix");
    IntMatrix M(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != M.cols()) throw ParseError("ragged matrix");
        for (std::size_t k = 0; k < M.cols(); ++k) {
            const Json& cell = j[i][k];
            M(i, k) = cell.is_string() ? Int(cell.get<std::string>())
                                       : Int(cell.get<long long>());
        }
    }
    return M;
}

void check_version(const Json& j) {
    if (!j.contains("format_version")) throw ParseError("missing format_version");
    if (j["format_version"].get<int>() != kFormatVersion)
        throw ParseError("unsupported format_version");
}

}  // namespace

std::string rat_str(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rat parse_rat(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        Rat q(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        return q;
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + s);
    }
}

Json to_json(const FewnomialSystem& F) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "fewnomial";
    j["n"] = F.n;
    j["ell"] = F.ell;
    j["A"] = int_matrix_json(F.A);
    j["C"] = rat_matrix_json(F.C);
    Json b = Json::array();
    for (const auto& v : F.b) b.push_back(rat_str(v));
    j["b"] = b;
    return j;
}

Json to_json(const GaleSystem& G) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "gale";
    j["n"] = G.n;
    j["ell"] = G.ell;
    Json forms = Json::array();
    for (const auto& f : G.forms) {
        Json e;
        Json lin = Json::array();
        for (const auto& c : f.linear) lin.push_back(rat_str(c));
        e["linear"] = lin;
        e["constant"] = rat_str(f.constant);
        forms.push_back(e);
    }
    j["forms"] = forms;
    j["B"] = int_matrix_json(G.B);
    j["compactified"] = G.compactified;
    j["perm"] = G.perm;
    Json shift = Json::array();
    for (const auto& v : G.shift) shift.push_back(rat_str(v));
    j["shift"] = shift;
    return j;
}

FewnomialSystem fewnomial_from_json(const Json& j) {
    check_version(j);
    if (j.at("type") != "fewnomial") throw ParseError("not a fewnomial system file");
    FewnomialSystem F;
    F.n = j.at("n").get<std::size_t>();
    F.ell = j.at("ell").get<std::size_t>();
    F.A = int_matrix_from(j.at("A"));
    F.C = rat_matrix_from(j.at("C"));
    for (const auto& v : j.at("b")) F.b.push_back(parse_rat(v.get<std::string>()));
    validate_fewnomial(F);
    return F;
}

GaleSystem gale_from_json(const Json& j) {
    check_version(j);
    if (j.at("type") != "gale") throw ParseError("not a gale system file");
    GaleSystem G;
    G.n = j.at("n").get<std::size_t>();
    G.ell = j.at("ell").get<std::size_t>();
    for (const auto& e : j.at("forms")) {
        AffineForm f;
        for (const auto& c : e.at("linear")) f.linear.push_back(parse_rat(c.get<std::string>()));
        f.constant = parse_rat(e.at("constant").get<std::string>());
        G.forms.push_back(std::move(f));
    }
    G.B = int_matrix_from(j.at("B"));
    G.compactified = j.value("compactified", false);
    if (j.contains("perm")) G.perm = j["perm"].get<std::vector<std::size_t>>();
    if (G.perm.empty()) {
        G.perm.resize(G.forms.size());
        for (std::size_t k = 0; k < G.perm.size(); ++k) G.perm[k] = k;
    }
    if (j.contains("shift"))
        for (const auto& v : j["shift"]) G.shift.push_back(parse_rat(v.get<std::string>()));
    if (G.B.rows() != G.forms.size() || G.B.cols() != G.ell)
        throw ParseError("B shape does not match the forms");
    return G;
}

std::variant<FewnomialSystem, GaleSystem> system_from_json(const Json& j) {
    if (!j.contains("type")) throw ParseError("missing type field");
    if (j["type"] == "fewnomial") return fewnomial_from_json(j);
    if (j["type"] == "gale") return gale_from_json(j);
    throw ParseError("unknown system type");
}

std::variant<FewnomialSystem, GaleSystem> load_system(const std::string& path) {
    return system_from_json(load_json(path));
}

void save_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

namespace {

Json point_json(const std::vector<BigFloat>& p, int digits) {
    Json a = Json::array();
    for (const auto& c : p) a.push_back(c.str(digits));
    return a;
}

}  // namespace

Json solutions_to_json(const SolutionSet& sol, int precision_bits) {
    int digits = bits_to_digits10(precision_bits);
    Json j;
    j["format_version"] = kFormatVersion;
    j["type"] = "gale_solutions";
    j["precision_bits"] = precision_bits;
    Json pts = Json::array(), res = Json::array();
    for (std::size_t i = 0; i < sol.solutions.size(); ++i) {
        pts.push_back(point_json(sol.solutions[i], digits));
        res.push_back(sol.s2[i].residual.str(6));
    }
    j["points"] = pts;
    j["residuals"] = res;
    const SolveReport& r = sol.report;
    j["report"] = Json{{"s0", r.n_s0},
                       {"t1", r.n_t1},
                       {"t2", r.n_t2},
                       {"s1", r.n_s1},
                       {"s2", r.n_s2},
                       {"kr_inequality_ok", r.kr_inequality_ok},
                       {"discovery_ok", r.discovery_ok},
                       {"incomplete", r.incomplete},
                       {"stalled_paths", r.stalled_paths},
                       {"path_errors", r.path_errors},
                       {"wall_seconds", r.wall_seconds}};
    return j;
}

std::vector<std::vector<BigFloat>> points_from_json(const Json& j, int precision_bits) {
    PrecisionGuard guard(precision_bits);
    std::vector<std::vector<BigFloat>> out;
    for (const auto& row : j.at("points")) {
        std::vector<BigFloat> p;
        for (const auto& c : row) p.emplace_back(c.get<std::string>());
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace gale
