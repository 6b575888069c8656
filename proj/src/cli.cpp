#include "puiseux/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "puiseux/equimultiple.hpp"
#include "puiseux/galois.hpp"
#include "puiseux/lattice.hpp"
#include "puiseux/parser.hpp"
#include "puiseux/render.hpp"
#include "puiseux/tangent_cone.hpp"
#include "puiseux/transforms.hpp"

namespace puiseux::cli {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string series_text;
    std::string poly_text;
    bool json_mode = false;
    unsigned max_root_order = 360;
    unsigned long orbit_bound = 4096;
};

unsigned long env_ulong(const char* name, unsigned long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoul(v);
    } catch (...) {
        return fallback;
    }
}

void add_common(CLI::App* cmd, CommonOpts& o, bool series, bool poly) {
    if (series) cmd->add_option("--series", o.series_text, "series expression");
    if (poly) cmd->add_option("--poly", o.poly_text, "polynomial expression (Z allowed)");
    cmd->add_flag("--json", o.json_mode, "emit a single JSON object");
    cmd->add_option("--max-root-order", o.max_root_order,
                    "largest allowed session root order L");
    cmd->add_option("--orbit-bound", o.orbit_bound, "largest allowed orbit size m^2");
}

struct Input {
    PuiseuxPoly series;
    SurfacePoly poly;
    bool has_series = false;
    Session session;
};

Input read_input(const CommonOpts& o, bool series_required = true) {
    Input in;
    if (!o.series_text.empty()) {
        ParsedSeries p = parse_series(o.series_text, o.max_root_order);
        in.series = p.value;
        in.session = p.session;
        in.has_series = true;
    } else if (!o.poly_text.empty()) {
        ParsedSurfacePoly p = parse_surface_poly(o.poly_text, o.max_root_order);
        in.poly = p.value;
        in.session = p.session;
    } else {
        throw DomainError(series_required ? "missing --series" : "missing --series or --poly");
    }
    return in;
}

void require_orbit_bound(unsigned m, unsigned long bound) {
    unsigned long sq = static_cast<unsigned long>(m) * m;
    if (sq > bound)
        throw GuardrailError("orbit size " + std::to_string(sq) +
                             " exceeds the configured bound " + std::to_string(bound));
}

json session_json(const Session& s) { return json{{"m", s.m}, {"L", s.L}}; }

json exps_json(const std::vector<Exp2>& es) {
    json a = json::array();
    for (const Exp2& e : es) a.push_back(json::array({e.i, e.j}));
    return a;
}

json surface_json(const SurfacePoly& F) {
    json coeffs = json::array();
    for (auto it = F.coeffs().rbegin(); it != F.coeffs().rend(); ++it)
        coeffs.push_back(json{{"z", it->first}, {"value", render(it->second)}});
    return json{{"degree", F.is_zero() ? 0 : F.degree()},
                {"polynomial", render(F)},
                {"coefficients", coeffs}};
}

struct Emitter {
    std::string command;
    json input;
    json session;
    json result;
    std::vector<std::string> warnings;
    bool json_mode;

    void print(std::ostream& out, const std::string& text) const {
        if (json_mode) {
            json j{{"command", command},
                   {"input", input},
                   {"session", session},
                   {"result", result},
                   {"warnings", warnings}};
            out << j.dump(2) << "\n";
        } else {
            out << text;
        }
    }
};

std::string rat_str(const Rat& r) { return render(r); }

std::string transversal_str(Transversality t) {
    switch (t) {
        case Transversality::strictly: return "strictly";
        case Transversality::tangentially: return "tangentially";
        case Transversality::non_transversal: return "non-transversal";
    }
    return "?";
}

// ---- analyze ---------------------------------------------------------------

void cmd_analyze(const CommonOpts& o, std::ostream& out) {
    Input in = read_input(o);
    if (in.series.is_zero()) throw DomainError("analyze: the series is zero");
    require_orbit_bound(in.series.m(), o.orbit_bound);
    SurfaceInvariants inv = surface_invariants(in.series);
    auto [disc, qo] = discriminant_and_qo_test(in.series);
    (void)disc;

    Emitter e;
    e.command = "analyze";
    e.json_mode = o.json_mode;
    e.input = json{{"series", o.series_text}};
    e.session = session_json(in.session);
    e.result = json{{"nu", rat_str(inv.nu)},
                    {"d", inv.d},
                    {"degree", inv.degree},
                    {"multiplicity", inv.multiplicity},
                    {"transversal", !(inv.nu < 1)},
                    {"transversality", transversal_str(inv.transversal)},
                    {"quasi_ordinary", qo}};
    std::ostringstream t;
    t << "nu = " << rat_str(inv.nu) << "\n"
      << "d = " << inv.d << "\n"
      << "degree = " << inv.degree << "\n"
      << "multiplicity = " << inv.multiplicity << "\n"
      << "transversal = " << (!(inv.nu < 1) ? "true" : "false") << " ("
      << transversal_str(inv.transversal) << ")\n"
      << "quasi_ordinary = " << (qo ? "true" : "false") << "\n";
    e.print(out, t.str());
}

// ---- minpoly ---------------------------------------------------------------

void cmd_minpoly(const CommonOpts& o, std::ostream& out) {
    Input in = read_input(o);
    if (in.series.is_zero()) throw DomainError("minpoly: the series is zero");
    require_orbit_bound(in.series.m(), o.orbit_bound);
    SurfacePoly F = minimal_polynomial(in.series);

    Emitter e;
    e.command = "minpoly";
    e.json_mode = o.json_mode;
    e.input = json{{"series", o.series_text}};
    e.session = session_json(in.session);
    e.result = surface_json(F);
    std::ostringstream t;
    t << "degree = " << F.degree() << "\n" << render(F) << "\n";
    e.print(out, t.str());
}

// ---- tangent-cone ----------------------------------------------------------

json planes_json(const std::vector<PlaneFactor>& planes) {
    json a = json::array();
    for (const PlaneFactor& p : planes) {
        json e;
        switch (p.axis) {
            case PlaneFactor::Axis::X: e["plane"] = "X"; break;
            case PlaneFactor::Axis::Y: e["plane"] = "Y"; break;
            case PlaneFactor::Axis::Slant:
                e["plane"] = render(PuiseuxPoly::variable_x(1) -
                                    PuiseuxPoly::variable_y(1).scaled(p.beta));
                e["beta"] = render(p.beta);
                break;
        }
        e["exponent"] = p.exponent;
        a.push_back(e);
    }
    return a;
}

void cmd_tangent_cone(const CommonOpts& o, std::ostream& out) {
    Input in = read_input(o);
    if (in.series.is_zero()) throw DomainError("tangent-cone: the series is zero");
    require_orbit_bound(in.series.m(), o.orbit_bound);
    PuiseuxPoly stripped = in.series.strip_integral();
    if (stripped.is_zero())
        throw DomainError("tangent-cone: series has only integral-exponent terms");
    TangentConeReport rep = tangent_cone(stripped);

    Emitter e;
    e.command = "tangent-cone";
    e.json_mode = o.json_mode;
    e.input = json{{"series", o.series_text}};
    e.session = session_json(in.session);
    json unres = json::array();
    for (const auto& u : rep.unresolved)
        unres.push_back(json{{"factor", render(u.factor)}, {"exponent", u.exponent}});
    const char* case_name = rep.cone_case == ConeCase::A   ? "A"
                            : rep.cone_case == ConeCase::B ? "B"
                                                           : "C";
    e.result = json{{"case", case_name},
                    {"multiplicity", rep.invariants.multiplicity},
                    {"cone", render(rep.cone)},
                    {"unit", render(rep.unit)},
                    {"planes", planes_json(rep.planes)},
                    {"unresolved", unres},
                    {"power", rep.power}};
    if (!(in.series == stripped)) e.warnings.push_back("integral-exponent terms were stripped");
    std::ostringstream t;
    t << "case = " << case_name << "\n"
      << "multiplicity = " << rep.invariants.multiplicity << "\n"
      << "cone = " << render(rep.cone) << "\n";
    if (!rep.planes.empty()) {
        t << "planes:";
        for (const PlaneFactor& p : rep.planes) {
            std::string plane = p.axis == PlaneFactor::Axis::X   ? "X"
                                : p.axis == PlaneFactor::Axis::Y ? "Y"
                                                                 : render(PuiseuxPoly::variable_x(1) -
                                                                          PuiseuxPoly::variable_y(1).scaled(p.beta));
            t << " (" << plane << ")^" << p.exponent;
        }
        t << "\n";
    }
    for (const auto& u : rep.unresolved)
        t << "unresolved: (" << render(u.factor) << ")^" << u.exponent << "\n";
    if (rep.cone_case == ConeCase::B) t << "power = " << rep.power << "\n";
    e.print(out, t.str());
}

// ---- privileged ------------------------------------------------------------

void cmd_privileged(const CommonOpts& o, const std::string& order_name, bool all_minimal,
                    std::ostream& out) {
    Input in = read_input(o);
    if (in.series.is_zero()) throw DomainError("privileged: the series is zero");
    Emitter e;
    e.command = "privileged";
    e.json_mode = o.json_mode;
    e.input = json{{"series", o.series_text}};
    e.session = session_json(in.session);
    std::ostringstream t;
    if (all_minimal) {
        auto sets = minimal_privileged_sets(in.series);
        json a = json::array();
        for (const auto& s : sets) a.push_back(exps_json(s));
        e.result = json{{"minimal_sets", a}};
        t << "minimal privileged sets (" << sets.size() << "):\n";
        for (const auto& s : sets) {
            t << " ";
            for (const Exp2& x : s) t << " (" << x.i << "," << x.j << ")";
            t << "\n";
        }
    } else {
        MonomialOrder ord = MonomialOrder::parse(order_name);
        auto exps = extract_privileged(in.series, ord);
        e.result = json{{"order", ord.name()}, {"exponents", exps_json(exps)}};
        t << "privileged exponents (" << ord.name() << "):";
        for (const Exp2& x : exps) t << " (" << x.i << "," << x.j << ")";
        t << "\n";
    }
    e.print(out, t.str());
}

// ---- equimultiple ----------------------------------------------------------

void cmd_equimultiple(const CommonOpts& o, const std::string& candidate_text, bool find,
                      std::ostream& out) {
    Input in = read_input(o);
    if (in.series.is_zero()) throw DomainError("equimultiple: the series is zero");
    Emitter e;
    e.command = "equimultiple";
    e.json_mode = o.json_mode;
    e.input = json{{"series", o.series_text}};
    e.session = session_json(in.session);
    std::ostringstream t;

    if (!candidate_text.empty()) {
        e.input["candidate"] = candidate_text;
        PuiseuxPoly c = parse_series(candidate_text, o.max_root_order).value;
        require_orbit_bound(in.series.m(), o.orbit_bound);
        SurfacePoly F = minimal_polynomial(in.series);
        long long mult = multiplicity(in.series);
        bool oracle = is_equimultiple_oracle(F, c, mult);
        bool transversal = !(in.series.order() < 1);
        json criterion = nullptr;
        bool verdict = oracle;
        if (transversal) {
            bool crit = is_equimultiple_criterion(in.series, c);
            criterion = crit;
            verdict = crit;
        }
        e.result = json{{"equimultiple", verdict},
                        {"criterion", criterion},
                        {"oracle", oracle},
                        {"multiplicity", mult}};
        t << "equimultiple = " << (verdict ? "true" : "false") << "\n";
    } else if (find) {
        require_orbit_bound(in.series.m(), o.orbit_bound);
        EquimultipleReport rep = find_equimultiple(in.series);
        json curves = json::array();
        for (const CurvePrime& c : rep.curves)
            curves.push_back(json{{"generator", render(c.generator)}, {"composite", c.composite}});
        json verdict = nullptr;
        if (rep.verdict) {
            if (rep.verdict->axis_form)
                verdict = json{{"form", "x_lambda_unit"},
                               {"axis", std::string(1, rep.verdict->axis)},
                               {"lambda", rat_str(rep.verdict->lambda)}};
            else
                verdict = json{{"form", "no_height_one_curves"}};
        }
        e.result = json{{"transversal", rep.transversal},
                        {"max_divisor", render(rep.max_divisor)},
                        {"curves", curves},
                        {"verdict", verdict}};
        t << "transversal = " << (rep.transversal ? "true" : "false") << "\n";
        t << "max_divisor = " << render(rep.max_divisor) << "\n";
        for (const CurvePrime& c : rep.curves)
            t << "curve: (Z, " << render(c.generator) << ")" << (c.composite ? " [composite]" : "")
              << "\n";
        if (rep.verdict && !rep.verdict->axis_form) t << "no height-one curves\n";
    } else {
        throw DomainError("equimultiple: pass --candidate EXPR or --find");
    }
    e.print(out, t.str());
}

// ---- tchirnhausen ----------------------------------------------------------

void cmd_tchirnhausen(const CommonOpts& o, std::ostream& out) {
    Input in = read_input(o, false);
    SurfacePoly F;
    if (in.has_series) {
        if (in.series.is_zero()) throw DomainError("tchirnhausen: the series is zero");
        require_orbit_bound(in.series.m(), o.orbit_bound);
        F = minimal_polynomial(in.series);
    } else {
        F = in.poly;
    }
    SurfacePoly G = tchirnhausen(F);
    Emitter e;
    e.command = "tchirnhausen";
    e.json_mode = o.json_mode;
    e.input = in.has_series ? json{{"series", o.series_text}} : json{{"poly", o.poly_text}};
    e.session = session_json(in.session);
    e.result = surface_json(G);
    e.print(out, render(G) + "\n");
}

// ---- transversalize --------------------------------------------------------

void cmd_transversalize(const CommonOpts& o, const std::string& prec_text, std::ostream& out) {
    Input in = read_input(o);
    if (in.series.is_zero()) throw DomainError("transversalize: the series is zero");
    Rat prec;
    try {
        std::string p = prec_text;
        auto slash = p.find('/');
        if (slash == std::string::npos)
            prec = make_rat(Int(p), Int(1));
        else
            prec = make_rat(Int(p.substr(0, slash)), Int(p.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DomainError("transversalize: --prec must be a positive rational");
    }
    NontransversalVerdict v = classify_nontransversal(in.series);
    if (!v.axis_form)
        throw DomainError("transversalize: series is not of the form X^lambda * unit");
    TruncatedSeries eta = transversalize(in.series, prec);

    Emitter e;
    e.command = "transversalize";
    e.json_mode = o.json_mode;
    e.input = json{{"series", o.series_text}, {"prec", prec_text}};
    e.session = session_json(in.session);
    e.result = json{{"eta", render(eta.body)},
                    {"precision", rat_str(eta.precision)},
                    {"axis", std::string(1, v.axis)},
                    {"lambda", rat_str(v.lambda)}};
    std::ostringstream t;
    t << "eta = " << render(eta.body) << " + O(order " << rat_str(eta.precision) << ")\n";
    e.print(out, t.str());
}

// ---- transform -------------------------------------------------------------

void cmd_transform(const CommonOpts& o, const std::string& kind, const std::string& chart,
                   const std::string& center, bool validate, const std::string& xi_text,
                   const std::string& eta_text, std::ostream& out) {
    Input in = read_input(o, false);
    SurfacePoly F;
    if (in.has_series) {
        if (in.series.is_zero()) throw DomainError("transform: the series is zero");
        require_orbit_bound(in.series.m(), o.orbit_bound);
        F = minimal_polynomial(in.series);
    } else {
        F = in.poly;
    }

    TransformSpec spec;
    if (kind == "quad")
        spec.kind = TransformSpec::Kind::quadratic;
    else if (kind == "monoidal")
        spec.kind = TransformSpec::Kind::monoidal;
    else
        throw DomainError("transform: kind must be quad or monoidal");
    if (chart == "X")
        spec.chart = TransformSpec::Chart::X;
    else if (chart == "Y")
        spec.chart = TransformSpec::Chart::Y;
    else if (chart == "Z")
        spec.chart = TransformSpec::Chart::Z;
    else
        throw DomainError("transform: --chart must be X, Y or Z");
    if (spec.kind == TransformSpec::Kind::monoidal) {
        std::string c = center;
        c.erase(std::remove_if(c.begin(), c.end(),
                               [](char ch) { return ch == '(' || ch == ')' || ch == ' '; }),
                c.end());
        if (c == "X,Z" || c == "X")
            spec.center = TransformSpec::Center::XZ;
        else if (c == "Y,Z" || c == "Y")
            spec.center = TransformSpec::Center::YZ;
        else
            throw DomainError("transform: --center must be (X,Z) or (Y,Z)");
    }
    spec.validate = validate;
    if (!xi_text.empty() || !eta_text.empty()) {
        CycElem xi = xi_text.empty() ? CycElem::zero(1)
                                     : parse_coefficient(xi_text, o.max_root_order);
        CycElem eta = eta_text.empty() ? CycElem::zero(1)
                                       : parse_coefficient(eta_text, o.max_root_order);
        spec.translation = {xi, eta};
    }

    SurfacePoly G = spec.kind == TransformSpec::Kind::quadratic ? quadratic_transform(F, spec)
                                                                : monoidal_transform(F, spec);
    Emitter e;
    e.command = "transform";
    e.json_mode = o.json_mode;
    e.input = in.has_series ? json{{"series", o.series_text}} : json{{"poly", o.poly_text}};
    e.input["kind"] = kind;
    e.input["chart"] = chart;
    if (spec.kind == TransformSpec::Kind::monoidal) e.input["center"] = center;
    e.session = session_json(in.session);
    e.result = surface_json(G);
    e.print(out, render(G) + "\n");
}

// ---- qo-test ---------------------------------------------------------------

void cmd_qo_test(const CommonOpts& o, std::ostream& out) {
    Input in = read_input(o);
    if (in.series.is_zero()) throw DomainError("qo-test: the series is zero");
    require_orbit_bound(in.series.m(), o.orbit_bound);
    auto [D, qo] = discriminant_and_qo_test(in.series);
    json dom = nullptr;
    if (qo && !D.is_zero()) {
        long long mi = -1, mj = -1;
        for (const auto& [e, c] : D.terms()) {
            mi = mi < 0 ? e.i : std::min(mi, e.i);
            mj = mj < 0 ? e.j : std::min(mj, e.j);
        }
        dom = json{{"x", rat_str(make_rat(mi, D.m()))}, {"y", rat_str(make_rat(mj, D.m()))}};
    }
    Emitter e;
    e.command = "qo-test";
    e.json_mode = o.json_mode;
    e.input = json{{"series", o.series_text}};
    e.session = session_json(in.session);
    e.result = json{{"quasi_ordinary", qo}, {"dominant_exponent", dom}};
    std::ostringstream t;
    t << "quasi_ordinary = " << (qo ? "true" : "false") << "\n";
    if (!dom.is_null())
        t << "dominant exponent: X^" << dom["x"].get<std::string>() << " Y^"
          << dom["y"].get<std::string>() << "\n";
    e.print(out, t.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of algebroid surfaces defined by Puiseux series"};
    app.require_subcommand(1);

    CommonOpts common;
    common.max_root_order =
        static_cast<unsigned>(env_ulong("PUISEUX_MAX_ROOT_ORDER", 360));
    common.orbit_bound = env_ulong("PUISEUX_ORBIT_BOUND", 4096);

    auto* analyze = app.add_subcommand("analyze", "degree, order, multiplicity, qo flag");
    add_common(analyze, common, true, false);

    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of the series");
    add_common(minpoly, common, true, false);

    auto* tcone = app.add_subcommand("tangent-cone", "tangent cone decomposition");
    add_common(tcone, common, true, false);

    auto* priv = app.add_subcommand("privileged", "privileged exponent sets");
    add_common(priv, common, true, false);
    std::string order_name = "grlex";
    bool all_minimal = false;
    priv->add_option("--order", order_name, "grlex | grevlex | lex | invlex");
    priv->add_flag("--all-minimal", all_minimal, "enumerate all minimal privileged sets");

    auto* equi = app.add_subcommand("equimultiple", "equimultiple locus");
    add_common(equi, common, true, false);
    std::string candidate;
    bool find = false;
    equi->add_option("--candidate", candidate, "curve generator c(X,Y) to test");
    equi->add_flag("--find", find, "compute the equimultiple curves");

    auto* tchirn = app.add_subcommand("tchirnhausen", "kill the Z^{n-1} coefficient");
    add_common(tchirn, common, true, true);

    auto* trans = app.add_subcommand("transversalize", "transversal re-parametrization");
    add_common(trans, common, true, false);
    std::string prec = "5";
    trans->add_option("--prec", prec, "truncation precision (positive rational)")->required();

    auto* transform = app.add_subcommand("transform", "quadratic or monoidal blow-up chart");
    add_common(transform, common, true, true);
    std::string kind;
    std::string chart = "Z";
    std::string center = "(X,Z)";
    std::string xi_text, eta_text;
    bool validate = false;
    transform->add_option("kind", kind, "quad | monoidal")->required();
    transform->add_option("--chart", chart, "X | Y | Z");
    transform->add_option("--center", center, "(X,Z) | (Y,Z)");
    transform->add_flag("--validate", validate, "check permissibility first");
    transform->add_option("--xi", xi_text, "translation Z -> Z + xi X + eta Y");
    transform->add_option("--eta", eta_text, "translation Z -> Z + xi X + eta Y");

    auto* qo = app.add_subcommand("qo-test", "quasi-ordinary discriminant test");
    add_common(qo, common, true, false);

    std::vector<const char*> argv;
    argv.push_back("puiseux");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) cmd_analyze(common, out);
        else if (minpoly->parsed()) cmd_minpoly(common, out);
        else if (tcone->parsed()) cmd_tangent_cone(common, out);
        else if (priv->parsed()) cmd_privileged(common, order_name, all_minimal, out);
        else if (equi->parsed()) cmd_equimultiple(common, candidate, find, out);
        else if (tchirn->parsed()) cmd_tchirnhausen(common, out);
        else if (trans->parsed()) cmd_transversalize(common, prec, out);
        else if (transform->parsed())
            cmd_transform(common, kind, chart, center, validate, xi_text, eta_text, out);
        else if (qo->parsed()) cmd_qo_test(common, out);
        else {
            err << "unknown command\n";
            return 2;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const GuardrailError& e) {
        err << "guardrail: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace puiseux::cli
