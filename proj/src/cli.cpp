#include "efb/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "efb/errors.hpp"
#include "efb/harness.hpp"
#include "efb/json_io.hpp"

namespace efb {

namespace {

struct Options {
    int m = 0;
    bool m_given = false;
    std::string field = "Q";
    bool field_given = false;
    bool precompute = false;
    std::string input;
    std::string inline_json;
    std::string basis = "gamma";
    std::string format = "json";
    int dim = 0;
    bool evaluate = false;
    std::uint64_t seed = 1;
    std::size_t trials = 20;
    bool parallel = false;
};

ReadOptions read_options(const Options& o) {
    ReadOptions r;
    if (o.m_given) r.expect_m = o.m;
    if (o.field_given) r.field = parse_field(o.field);
    return r;
}

Json read_input(const Options& o, std::istream& in) {
    std::string text;
    if (!o.inline_json.empty()) {
        text = o.inline_json;
    } else if (!o.input.empty()) {
        std::ifstream f(o.input);
        if (!f) throw ParseError("cannot read input file '" + o.input + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    } else {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void warm(const Options& o, int m) {
    if (o.precompute) precompute_signs(m);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_product(const Options& o, std::istream& in, std::ostream& out) {
    const Json j = read_input(o, in);
    if (!j.is_array() || j.empty()) throw ParseError("product expects a non-empty array of elements");
    ReadOptions ro = read_options(o);
    std::vector<AlgebraElement> xs;
    for (const auto& e : j) {
        xs.push_back(element_from_json(e, ro));
        ro.expect_m = xs.front().m();
        ro.field = xs.front().field();
    }
    warm(o, xs.front().m());
    AlgebraElement p = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) p = p * xs[i];
    emit(out, element_to_json(p));
    return kExitOk;
}

int cmd_annihilator(const Options& o, std::istream& in, std::ostream& out) {
    const Spinor w = spinor_from_json(read_input(o, in), read_options(o));
    warm(o, w.m());
    emit(out, plane_to_json(annihilator(w)));
    return kExitOk;
}

int cmd_subspace(const Options& o, std::istream& in, std::ostream& out) {
    const Json j = read_input(o, in);
    if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer()) throw ParseError("missing integer 'm'");
    const int m = j["m"].get<int>();
    check_m(m);
    if (o.m_given && o.m != m) throw DimensionError("input m differs from --m");
    Field f = o.field_given ? parse_field(o.field) : Field::Q;
    if (j.contains("field")) {
        if (!j["field"].is_string()) throw ParseError("'field' must be a string");
        const Field jf = parse_field(j["field"].get<std::string>());
        if (o.field_given && jf != f) throw FieldError("input field differs from --field");
        f = jf;
    }
    if (!j.contains("vectors") || !j["vectors"].is_array()) throw ParseError("missing array 'vectors'");
    std::vector<WittVector> vs;
    for (const auto& v : j["vectors"]) vs.push_back(vector_from_json(v, m, f));
    warm(o, m);
    emit(out, subspace_to_json(annihilated_subspace(vs, f)));
    return kExitOk;
}

int cmd_expand(const Options& o, std::istream& in, std::ostream& out) {
    const AlgebraElement x = element_from_json(read_input(o, in), read_options(o));
    warm(o, x.m());
    if (o.basis == "gamma")
        emit(out, expansion_to_json(expand_gamma(x)));
    else
        emit(out, expansion_to_json(expand_witt(x)));
    return kExitOk;
}

std::string yes_no(bool b) { return b ? "simple" : "not simple"; }

void report_table(std::ostream& out, const SimplicityReport& r, const Spinor& w) {
    auto row = [&](const std::string& k, const std::string& v) { out << std::left << std::setw(20) << k << v << "\n"; };
    row("m", std::to_string(w.m()));
    row("support", std::to_string(w.support_size()));
    row("nullity", std::to_string(r.nullity));
    row("weyl", r.weyl ? "yes" : "no");
    row("direct", yes_no(r.direct));
    row("cartan-chevalley", yes_no(r.cartan_chevalley));
    row("generalized", yes_no(r.generalized));
    row("shortcut", yes_no(r.shortcut));
    row("constraints", std::to_string(r.constraints_generated) + " generated, " + std::to_string(r.constraints_violated) +
                           " violated");
    std::string plane;
    for (const auto& v : r.candidate.vectors) plane += (plane.empty() ? "" : ", ") + vector_text(v);
    row(r.direct ? "annihilator" : "completion", "{" + plane + "}");
    out << "fock phi   k_m   min grade\n";
    for (std::size_t c = 0; c < r.generalized_detail.k_m.size(); ++c)
        out << std::left << std::setw(11) << c << std::setw(6) << r.generalized_detail.k_m[c]
            << (r.generalized_detail.min_grade[c] < 0 ? std::string("-") : std::to_string(r.generalized_detail.min_grade[c])) << "\n";
}

int cmd_simplicity(const Options& o, std::istream& in, std::ostream& out) {
    const Spinor w = spinor_from_json(read_input(o, in), read_options(o));
    warm(o, w.m());
    const SimplicityReport r = report(w);
    if (o.format == "table")
        report_table(out, r, w);
    else
        emit(out, report_to_json(r, w));
    return kExitOk;
}

int cmd_constraints(const Options& o, std::istream& in, std::ostream& out) {
    if (!o.evaluate) {
        out << constraint_count(o.dim) << "\n";
        return kExitOk;
    }
    ReadOptions ro = read_options(o);
    if (o.dim % 2 != 0) throw DimensionError("total dimension must be even");
    ro.expect_m = o.dim / 2;
    const Spinor w = spinor_from_json(read_input(o, in), ro);
    warm(o, w.m());
    Json values = Json::array();
    std::size_t violated = 0;
    for (const auto& v : evaluate_constraints(w)) {
        if (!v.value.is_zero()) ++violated;
        values.push_back(Json{{"word", gamma_word(v.subset)}, {"value", v.value.str()}});
    }
    emit(out, Json{{"dim", o.dim}, {"count", constraint_count(o.dim)}, {"violated", violated}, {"values", values}});
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (!o.m_given) throw ParseError("verify needs --m");
    const auto res = run_suite(o.m, o.seed, o.trials, o.parallel);
    out << ledger(res);
    for (const auto& r : res)
        if (!r.passed()) return kExitDomain;
    return kExitOk;
}

void report_error(std::ostream& err, const std::string& code, const std::string& what) {
    err << Json{{"error", code}, {"message", what}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact arithmetic for Cl(m,m) in the extended Fock basis", "efbtool"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* mopt = app.add_option("--m", o.m, "number of Witt pairs");
    auto* fopt = app.add_option("--field", o.field, "Q or Qi")->check(CLI::IsMember({"Q", "Qi"}));
    app.add_flag("--precompute-signs", o.precompute, "fill the product sign table before computing");
    app.add_option("-i,--input", o.input, "read JSON input from a file (default stdin)");
    app.add_option("--json", o.inline_json, "inline JSON input");

    auto* product = app.add_subcommand("product", "multiply a JSON array of elements left to right");
    auto* annih = app.add_subcommand("annihilator", "basis of M(w) for a spinor");
    auto* subspace = app.add_subcommand("subspace", "spinors annihilated by a totally null set of vectors");
    auto* expand = app.add_subcommand("expand", "multivector expansion of an element");
    expand->add_option("--basis", o.basis, "gamma or witt")->check(CLI::IsMember({"gamma", "witt"}));
    auto* simp = app.add_subcommand("simplicity", "simplicity report for a spinor");
    simp->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    auto* cons = app.add_subcommand("constraints", "count, or evaluate on a spinor, the bilinear simplicity constraints");
    cons->add_option("--dim", o.dim, "total dimension 2m")->required();
    cons->add_flag("--evaluate", o.evaluate, "evaluate every constraint on the input spinor");
    auto* verify = app.add_subcommand("verify", "run the property suite and print the ledger");
    verify->add_option("--seed", o.seed, "master seed");
    verify->add_option("--trials", o.trials, "random trials per check");
    verify->add_flag("--parallel", o.parallel, "run independent checks on several threads");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, "malformed_input", e.what());
        return kExitMalformed;
    }
    o.m_given = mopt->count() > 0;
    o.field_given = fopt->count() > 0;

    try {
        if (o.m_given) {
            if (verify->parsed()) {
                if (o.m < 1 || o.m > kMaxVerifyM) throw RangeError("verify runs for 1 <= m <= 6");
            } else {
                check_m(o.m);
            }
        }
        if (product->parsed()) return cmd_product(o, in, out);
        if (annih->parsed()) return cmd_annihilator(o, in, out);
        if (subspace->parsed()) return cmd_subspace(o, in, out);
        if (expand->parsed()) return cmd_expand(o, in, out);
        if (simp->parsed()) return cmd_simplicity(o, in, out);
        if (cons->parsed()) return cmd_constraints(o, in, out);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const ParseError& e) {
        report_error(err, e.code(), e.what());
        return kExitMalformed;
    } catch (const Error& e) {
        report_error(err, e.code(), e.what());
        return kExitDomain;
    } catch (const Json::exception& e) {
        report_error(err, "malformed_input", e.what());
        return kExitMalformed;
    }
    return kExitMalformed;
}

}  // namespace efb
