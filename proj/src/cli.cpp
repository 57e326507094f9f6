#include "circpoly/cli.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "circpoly/cone.hpp"
#include "circpoly/hilbert.hpp"
#include "circpoly/intmat.hpp"
#include "circpoly/lift.hpp"
#include "circpoly/poisson.hpp"
#include "circpoly/weights.hpp"
#include "json.hpp"

namespace circpoly {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string without_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

Rat parse_rational_ext(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument&) {
    }
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number: " + s);
    }
    if (pos != s.size() || !std::isfinite(v))
        throw std::invalid_argument("cannot parse number: " + s);
    return rat_from_double(v);
}

std::vector<Int> parse_weights(const std::string& csv) {
    std::vector<Int> out;
    for (const std::string& part : split(csv, ',')) {
        const std::string t = without_spaces(part);
        try {
            out.emplace_back(t, 10);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid weight: \"" + part + "\"");
        }
    }
    return out;
}

unsigned parse_h(const std::string& csv, int k) {
    unsigned h = 0;
    if (without_spaces(csv).empty()) return 0;
    for (const std::string& part : split(csv, ',')) {
        const std::string t = without_spaces(part);
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(t, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid index in --h: \"" + part + "\"");
        }
        if (pos != t.size()) throw std::invalid_argument("invalid index in --h: \"" + part + "\"");
        if (v < 1 || v > k) throw std::invalid_argument("--h index out of range: " + t);
        h |= 1u << (v - 1);
    }
    return h;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
}

Rat rat_of_json(const Json& v) {
    if (v.is_string()) return parse_rational_ext(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    throw std::invalid_argument("matrix entries must be rational strings or integers");
}

RatMat parse_rat_matrix(const Json& j, int k, const std::string& what) {
    const std::string shape =
        what + " must be a " + std::to_string(k) + "x" + std::to_string(k) + " matrix";
    if (!j.is_array() || static_cast<int>(j.size()) != k) throw std::invalid_argument(shape);
    RatMat m(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != k)
            throw std::invalid_argument(shape);
        for (int c = 0; c < k; ++c) m[i][c] = rat_of_json(j[i][c]);
    }
    return m;
}

IntMat parse_int_matrix(const Json& j, int k, const std::string& what) {
    RatMat q = parse_rat_matrix(j, k, what);
    IntMat m(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c) {
            if (q[i][c].get_den() != 1)
                throw std::invalid_argument(what + " entries must be integers");
            m[i][c] = q[i][c].get_num();
        }
    return m;
}

HomPoint parse_hom_point(const Json& j, int k) {
    const std::string shape = "HomPoint file must hold a " + std::to_string(k) + "x" +
                              std::to_string(k) + " matrix of complex literals";
    if (!j.is_array() || static_cast<int>(j.size()) != k) throw std::invalid_argument(shape);
    HomPoint p(k);
    for (int i = 0; i < k; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != k)
            throw std::invalid_argument(shape);
        for (int c = 0; c < k; ++c) {
            const Json& v = j[i][c];
            if (v.is_string())
                p.at(i, c) = parse_complex_literal(v.get<std::string>()).to_complex();
            else if (v.is_number())
                p.at(i, c) = Complex(v.get<double>(), 0.0);
            else
                throw std::invalid_argument(shape);
        }
    }
    return p;
}

std::string ij_name(const char* base, int i, int j) {
    return std::string(base) + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

Json str_vec(const std::vector<Int>& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

Json int_matrix_json(const IntMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json rj = Json::array();
        for (const Int& x : row) rj.push_back(x.get_str());
        rows.push_back(std::move(rj));
    }
    return rows;
}

Json rat_matrix_json(const RatMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json rj = Json::array();
        for (const Rat& x : row) rj.push_back(rat_str(x));
        rows.push_back(std::move(rj));
    }
    return rows;
}

Json complex_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json hom_json(const HomPoint& p) {
    Json rows = Json::array();
    for (int i = 0; i < p.k; ++i) {
        Json row = Json::array();
        for (int j = 0; j < p.k; ++j) row.push_back(complex_json(p.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json lattice_json(const std::string& label, const LatticePoint& v) {
    Json g;
    g["label"] = label;
    g["a"] = str_vec(v.a);
    g["b"] = str_vec(v.b);
    g["point"] = v.str();
    return g;
}

Json pair_json(int a, int b) {
    if (a < 0) return nullptr;
    return Json::array({a + 1, b + 1});
}

Json pair_witness(const PairResult& r) {
    Json w;
    w["pair_a"] = pair_json(r.p, r.q);
    w["pair_b"] = pair_json(r.s, r.t);
    return w;
}

Json triple_witness(const TripleResult& r) {
    Json w;
    w["pair_a"] = pair_json(r.p, r.q);
    w["pair_b"] = pair_json(r.s, r.t);
    w["pair_c"] = pair_json(r.u, r.v);
    return w;
}

Json skeleton(const std::string& command) {
    Json r;
    r["schema"] = 1;
    r["command"] = command;
    r["inputs"] = Json::object();
    r["results"] = Json::object();
    r["checks"] = Json::array();
    return r;
}

void add_check(Json& r, const std::string& name, bool pass, Json witness = nullptr) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    c["witness"] = std::move(witness);
    r["checks"].push_back(std::move(c));
}

int finish(Json& r, std::ostream& out) {
    bool ok = true;
    for (const auto& c : r["checks"]) ok = ok && c["pass"].get<bool>();
    out << r.dump(2) << "\n";
    return ok ? 0 : 1;
}

Poly generator_monomial(const WeightSystem& ws, int i, int j) {
    const LatticePoint v = generator(ws, i, j);
    Exponent e(ws.k());
    for (int m = 0; m < ws.k(); ++m) {
        e.a[m] = v.a[m].get_si();
        e.b[m] = v.b[m].get_si();
    }
    return Poly::monomial(ws.k(), e, GaussianRational(Rat(1)));
}

int cmd_analyze(const WeightSystem& ws, std::ostream& out) {
    Json r = skeleton("analyze");
    r["inputs"]["weights"] = str_vec(ws.weights());
    Json& res = r["results"];
    res["k"] = ws.k();
    res["d"] = str_vec(ws.cofactor_gcds());
    res["minimal"] = ws.minimal();
    res["cofactor_product"] = ws.cofactor_product().get_str();
    Json units = Json::array();
    for (int i = 0; i < ws.k(); ++i)
        if ((ws.squarefree_mask() >> i) & 1) units.push_back(i + 1);
    res["unit_indices"] = units;
    if (ws.minimal()) {
        Json gens = Json::array();
        for (int i = 0; i < ws.k(); ++i)
            for (int j = 0; j < ws.k(); ++j)
                gens.push_back(lattice_json(ij_name("v", i, j), generator(ws, i, j)));
        res["generators"] = gens;
        Json basis = Json::array();
        for (int i = 0; i < ws.k(); ++i)
            basis.push_back(lattice_json("ell_" + std::to_string(i + 1), basis_ell(ws, i)));
        for (int i = 0; i + 1 < ws.k(); ++i)
            basis.push_back(lattice_json("eta_" + std::to_string(i + 1), basis_eta(ws, i)));
        res["basis"] = basis;
    }
    return finish(r, out);
}

int cmd_faces(const WeightSystem& ws, bool dot, std::ostream& out) {
    if (dot) {
        FaceGraph g = face_graph(ws);
        out << "graph faces {\n";
        for (const auto& n : g.nodes) out << "  \"" << ij_name("v", n.first, n.second) << "\";\n";
        for (const auto& e : g.edges)
            out << "  \"" << ij_name("v", e.first.first, e.first.second) << "\" -- \""
                << ij_name("v", e.second.first, e.second.second) << "\";\n";
        out << "}\n";
        return 0;
    }
    Json r = skeleton("faces");
    r["inputs"]["weights"] = str_vec(ws.weights());
    const int k = ws.k();
    std::vector<Int> counts(2 * k, 0);
    Int total = 0;
    for (const Face& f : enumerate_faces(ws)) {
        counts[f.dim()] += 1;
        total += 1;
    }
    bool match = true;
    for (int d = 0; d < 2 * k; ++d) match = match && counts[d] == face_count(k, d);
    Json& res = r["results"];
    res["counts_by_dim"] = str_vec(counts);
    res["total"] = total.get_str();
    add_check(r, "counts-match-formula", match);
    return finish(r, out);
}

int cmd_fk(const WeightSystem& ws, bool kernel, std::ostream& out) {
    Json r = skeleton("fk");
    r["inputs"]["weights"] = str_vec(ws.weights());
    const FkMap fk = fk_matrix(ws);
    const int k = ws.k();
    Json& res = r["results"];
    res["k"] = k;
    Json rows = Json::array();
    for (int i = 0; i + 1 < k; ++i) rows.push_back("eta_" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i) rows.push_back("ell_" + std::to_string(i + 1));
    res["row_labels"] = rows;
    Json cols = Json::array();
    for (const IndexPair& lb : fk.labels) cols.push_back(ij_name("e", lb.first, lb.second));
    res["column_labels"] = cols;
    res["matrix"] = int_matrix_json(fk.matrix);
    if (kernel) {
        const IntMat ker = fk_kernel(ws);
        Json kj;
        kj["rank"] = static_cast<int>(ker.empty() ? 0 : ker[0].size());
        kj["basis"] = int_matrix_json(ker);
        kj["hnf"] = int_matrix_json(hermite_normal_form(ker));
        res["kernel"] = std::move(kj);
    }
    return finish(r, out);
}

enum class CliKind { standard, epsilon, epsilon_delta, face, linear, quadratic, mixed };

CliKind parse_kind(const std::string& s) {
    if (s == "standard") return CliKind::standard;
    if (s == "epsilon") return CliKind::epsilon;
    if (s == "epsilon_delta") return CliKind::epsilon_delta;
    if (s == "face") return CliKind::face;
    if (s == "linear") return CliKind::linear;
    if (s == "quadratic") return CliKind::quadratic;
    if (s == "mixed") return CliKind::mixed;
    throw std::invalid_argument(
        "unknown kind: " + s +
        " (expected standard|epsilon|epsilon_delta|face|linear|quadratic|mixed)");
}

bool lift_kind(CliKind k) {
    return k == CliKind::linear || k == CliKind::quadratic || k == CliKind::mixed;
}

struct BracketArgs {
    std::string weights, kind, check, eps_path, delta_path, h_csv, eps_a_path, eps_b_path;
};

int cmd_bracket(const WeightSystem& ws, const BracketArgs& a, std::ostream& out) {
    const int k = ws.k();
    Json r = skeleton("bracket");
    r["inputs"]["weights"] = str_vec(ws.weights());
    r["inputs"]["check"] = a.check;

    if (a.check == "intertwine") {
        if (a.eps_a_path.empty() || a.eps_b_path.empty())
            throw std::invalid_argument("intertwine requires --epsilon-a and --epsilon-b");
        const RatMat ea = parse_rat_matrix(load_json_file(a.eps_a_path), k, "epsilon-a");
        const RatMat eb = parse_rat_matrix(load_json_file(a.eps_b_path), k, "epsilon-b");
        r["inputs"]["epsilon_a"] = rat_matrix_json(ea);
        r["inputs"]["epsilon_b"] = rat_matrix_json(eb);
        const TripleResult t =
            intertwine_check(ws, LiftSpec::linear(ws, ea), LiftSpec::quadratic(ws, eb));
        add_check(r, "intertwine", t.ok, t.ok ? Json(nullptr) : triple_witness(t));
        return finish(r, out);
    }

    if (a.kind.empty()) throw std::invalid_argument("--kind is required for --check " + a.check);
    const CliKind kind = parse_kind(a.kind);
    r["inputs"]["kind"] = a.kind;

    RatMat eps;
    if (kind == CliKind::standard) {
        if (!a.eps_path.empty())
            throw std::invalid_argument("the standard kind takes no --epsilon");
    } else {
        if (a.eps_path.empty())
            throw std::invalid_argument("--epsilon is required for kind " + a.kind);
        eps = parse_rat_matrix(load_json_file(a.eps_path), k, "epsilon");
        r["inputs"]["epsilon"] = rat_matrix_json(eps);
    }

    IntMat delta;
    if (!a.delta_path.empty()) {
        if (kind != CliKind::epsilon_delta)
            throw std::invalid_argument("--delta applies to the epsilon_delta kind only");
        delta = parse_int_matrix(load_json_file(a.delta_path), k, "delta");
        r["inputs"]["delta"] = int_matrix_json(delta);
    } else if (kind == CliKind::epsilon_delta) {
        delta = IntMat(k, std::vector<Int>(k, 0));
    }

    unsigned h = 0;
    if (!a.h_csv.empty()) {
        if (kind != CliKind::face && kind != CliKind::mixed)
            throw std::invalid_argument("--h applies to the face and mixed kinds only");
        h = parse_h(a.h_csv, k);
        Json hj = Json::array();
        for (int i = 0; i < k; ++i)
            if ((h >> i) & 1) hj.push_back(i + 1);
        r["inputs"]["h"] = hj;
    }

    auto downstairs = [&]() -> BracketSpec {
        switch (kind) {
            case CliKind::standard:
                return BracketSpec::standard(ws);
            case CliKind::epsilon:
                return BracketSpec::epsilon(ws, eps);
            case CliKind::epsilon_delta:
                return BracketSpec::epsilon_delta(ws, eps, delta);
            case CliKind::face:
                return BracketSpec::face(ws, eps, h);
            default:
                throw std::logic_error("not a polynomial bracket kind");
        }
    };
    auto upstairs = [&]() -> LiftSpec {
        switch (kind) {
            case CliKind::linear:
                return LiftSpec::linear(ws, eps);
            case CliKind::quadratic:
                return LiftSpec::quadratic(ws, eps);
            case CliKind::mixed:
                return LiftSpec::mixed(ws, eps, h);
            default:
                throw std::logic_error("not a lift kind");
        }
    };

    if (a.check == "jacobi") {
        if (lift_kind(kind)) {
            const TripleResult t = check_jacobi_lift(ws, upstairs());
            add_check(r, "jacobi", t.ok, t.ok ? Json(nullptr) : triple_witness(t));
        } else {
            const BracketSpec spec = downstairs();
            const CompatResult c = jacobi_compat_check(ws, spec.eps, spec.delta);
            Json w = nullptr;
            if (!c.ok) {
                w = Json::object();
                w["reason"] = c.reason;
                w["p"] = c.p + 1;
                w["q"] = c.q + 1;
                w["r"] = c.r >= 0 ? Json(c.r + 1) : Json(nullptr);
            }
            add_check(r, "jacobi", c.ok, std::move(w));
        }
    } else if (a.check == "relate") {
        LiftSpec ls;
        BracketSpec bs;
        switch (kind) {
            case CliKind::face:
            case CliKind::mixed:
                ls = LiftSpec::mixed(ws, eps, h);
                bs = BracketSpec::face(ws, eps, h);
                break;
            case CliKind::linear:
                ls = LiftSpec::linear(ws, eps);
                bs = BracketSpec::face(ws, eps, ws.squarefree_mask());
                break;
            case CliKind::quadratic:
            case CliKind::epsilon_delta:
                for (const auto& row : delta)
                    for (const Int& x : row)
                        if (x != 0) throw std::invalid_argument("relate requires a zero delta");
                ls = LiftSpec::quadratic(ws, eps);
                bs = BracketSpec::epsilon_delta(ws, eps, IntMat(k, std::vector<Int>(k, 0)));
                break;
            default:
                throw std::invalid_argument(
                    "relate supports kinds face, mixed, linear, quadratic, epsilon_delta");
        }
        const PairResult p = check_fk_related(ws, ls, bs);
        add_check(r, "relate", p.ok, p.ok ? Json(nullptr) : pair_witness(p));
    } else if (a.check == "reality") {
        if (!lift_kind(kind))
            throw std::invalid_argument(
                "reality applies to the lift kinds linear, quadratic, mixed");
        const PairResult p = reality_check(ws, upstairs());
        add_check(r, "reality", p.ok, p.ok ? Json(nullptr) : pair_witness(p));
    } else if (a.check == "invariance") {
        if (lift_kind(kind))
            throw std::invalid_argument(
                "invariance applies to the polynomial bracket kinds");
        const BracketSpec spec = downstairs();
        require_minimal(ws);
        std::vector<Poly> gens;
        gens.reserve(static_cast<size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) gens.push_back(generator_monomial(ws, i, j));
        PairResult p;
        for (int g1 = 0; g1 < k * k && p.ok; ++g1)
            for (int g2 = 0; g2 < k * k && p.ok; ++g2)
                if (!invariance_check(ws, spec, gens[g1], gens[g2]))
                    p = {false, g1 / k, g1 % k, g2 / k, g2 % k};
        add_check(r, "invariance", p.ok, p.ok ? Json(nullptr) : pair_witness(p));
    } else {
        throw std::invalid_argument(
            "unknown check: " + a.check +
            " (expected jacobi|relate|reality|intertwine|invariance)");
    }
    return finish(r, out);
}

struct OrbitArgs {
    std::string weights, z, w, reconstruct;
    double tol = 1e-9;
};

int cmd_orbit(const WeightSystem& ws, const OrbitArgs& a, std::ostream& out) {
    const int k = ws.k();
    Json r = skeleton("orbit");
    r["inputs"]["weights"] = str_vec(ws.weights());
    r["inputs"]["tol"] = a.tol;
    if (a.z.empty() && a.w.empty() && a.reconstruct.empty())
        throw std::invalid_argument("provide --z and --w, or --reconstruct");
    Json& res = r["results"];

    std::vector<Complex> vz, vw;
    if (!a.z.empty()) {
        vz = parse_complex_list(a.z);
        if (static_cast<int>(vz.size()) != k)
            throw std::invalid_argument("--z must list k coordinates");
        r["inputs"]["z"] = a.z;
        res["u_z"] = hom_json(hilbert_eval(ws, vz));
    }
    if (!a.w.empty()) {
        vw = parse_complex_list(a.w);
        if (static_cast<int>(vw.size()) != k)
            throw std::invalid_argument("--w must list k coordinates");
        r["inputs"]["w"] = a.w;
        res["u_w"] = hom_json(hilbert_eval(ws, vw));
    }
    if (!a.z.empty() && !a.w.empty()) res["same_orbit"] = same_orbit(ws, vz, vw, a.tol);

    if (!a.reconstruct.empty()) {
        r["inputs"]["reconstruct"] = a.reconstruct;
        const HomPoint p = parse_hom_point(load_json_file(a.reconstruct), k);
        const HomCheck hc = check_hom_conditions(ws, p, a.tol);
        add_check(r, "hom-conditions", hc.ok,
                  hc.ok ? Json(nullptr) : Json{{"reason", hc.reason}});
        if (hc.ok) {
            const std::vector<Complex> rep = reconstruct_orbit(ws, p, a.tol);
            Json rj = Json::array();
            for (const Complex& c : rep) rj.push_back(complex_json(c));
            res["representative"] = std::move(rj);
            const HomPoint u = hilbert_eval(ws, rep);
            double worst = 0;
            int wi = -1, wj = -1;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    const double dv = std::abs(u.at(i, j) - p.at(i, j));
                    if (dv > worst) {
                        worst = dv;
                        wi = i;
                        wj = j;
                    }
                }
            const bool ok = worst <= a.tol;
            add_check(r, "reconstruction-round-trip", ok,
                      ok ? Json(nullptr) : Json{{"i", wi + 1}, {"j", wj + 1}, {"error", worst}});
        }
    }
    return finish(r, out);
}

}  // namespace

GaussianRational parse_complex_literal(const std::string& raw) {
    const std::string s = without_spaces(raw);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    size_t sep = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        const char c = s[i];
        if (c != '+' && c != '-') continue;
        const char prev = s[i - 1];
        if (prev == 'e' || prev == 'E' || prev == '+' || prev == '-' || prev == '/') continue;
        sep = i;
    }
    auto imag_coeff = [](std::string t) -> Rat {
        if (!t.empty() && t.front() == '+') t.erase(t.begin());
        if (t.empty()) return Rat(1);
        if (t == "-") return Rat(-1);
        return parse_rational_ext(t);
    };
    if (sep == std::string::npos) {
        if (s.back() == 'i') return {Rat(0), imag_coeff(s.substr(0, s.size() - 1))};
        return {parse_rational_ext(s), Rat(0)};
    }
    if (s.back() != 'i')
        throw std::invalid_argument("complex literal must end with i: " + raw);
    return {parse_rational_ext(s.substr(0, sep)),
            imag_coeff(s.substr(sep, s.size() - sep - 1))};
}

std::vector<Complex> parse_complex_list(const std::string& csv) {
    std::vector<Complex> out;
    for (const std::string& part : split(csv, ','))
        out.push_back(parse_complex_literal(part).to_complex());
    return out;
}

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;

    CLI::App app{"combinatorics and bracket families of a weighted circle action"};
    app.name("circpoly");
    app.require_subcommand(1);

    std::string an_weights;
    CLI::App* analyze =
        app.add_subcommand("analyze", "cofactor gcds, minimality, generators, lattice basis");
    analyze->add_option("--weights", an_weights, "comma-separated positive integers")->required();

    std::string fa_weights;
    bool fa_dot = false;
    CLI::App* faces =
        app.add_subcommand("faces", "face counts by dimension, optionally a DOT graph");
    faces->add_option("--weights", fa_weights, "comma-separated positive integers")->required();
    faces->add_flag("--dot", fa_dot, "emit a Graphviz graph of the generators instead of JSON");

    std::string fkw;
    bool fk_kern = false;
    CLI::App* fkcmd = app.add_subcommand("fk", "matrix of the generator labeling map");
    fkcmd->add_option("--weights", fkw, "comma-separated positive integers")->required();
    fkcmd->add_flag("--kernel", fk_kern,
                    "include a kernel lattice basis and its Hermite normal form");

    BracketArgs br;
    CLI::App* bracket = app.add_subcommand("bracket", "check a bracket family");
    // long-only help so --h stays available
    bracket->set_help_flag("--help", "print help");
    bracket->add_option("--weights", br.weights, "comma-separated positive integers")->required();
    bracket->add_option("--kind", br.kind,
                        "standard|epsilon|epsilon_delta|face|linear|quadratic|mixed");
    bracket->add_option("--epsilon", br.eps_path, "JSON file: k x k matrix of rational strings");
    bracket->add_option("--delta", br.delta_path, "JSON file: k x k integer matrix");
    bracket->add_option("--h", br.h_csv, "comma-separated 1-based indices");
    bracket->add_option("--check", br.check, "jacobi|relate|reality|intertwine|invariance")
        ->required();
    bracket->add_option("--epsilon-a", br.eps_a_path,
                        "JSON file: eps of the linear family (intertwine)");
    bracket->add_option("--epsilon-b", br.eps_b_path,
                        "JSON file: eps of the quadratic family (intertwine)");

    OrbitArgs orb;
    CLI::App* orbit = app.add_subcommand("orbit", "orbit membership and reconstruction");
    orbit->add_option("--weights", orb.weights, "comma-separated positive integers")->required();
    orbit->add_option("--z", orb.z, "comma-separated complex literals like 1+2i");
    orbit->add_option("--w", orb.w, "comma-separated complex literals");
    orbit->add_option("--reconstruct", orb.reconstruct,
                      "JSON file: k x k matrix of complex literals");
    orbit->add_option("--tol", orb.tol, "comparison tolerance")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("circpoly");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    try {
        int code = 2;
        if (analyze->parsed())
            code = cmd_analyze(WeightSystem(parse_weights(an_weights)), out);
        else if (faces->parsed())
            code = cmd_faces(WeightSystem(parse_weights(fa_weights)), fa_dot, out);
        else if (fkcmd->parsed())
            code = cmd_fk(WeightSystem(parse_weights(fkw)), fk_kern, out);
        else if (bracket->parsed())
            code = cmd_bracket(WeightSystem(parse_weights(br.weights)), br, out);
        else if (orbit->parsed())
            code = cmd_orbit(WeightSystem(parse_weights(orb.weights)), orb, out);
        return {code, out.str(), err.str()};
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return {2, out.str(), err.str()};
    }
}

}  // namespace circpoly
