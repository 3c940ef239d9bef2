#include "efb/json_io.hpp"

#include "efb/errors.hpp"

namespace efb {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

int read_m(const Json& j, const ReadOptions& opt) {
    const Json& v = member(j, "m");
    if (!v.is_number_integer()) throw ParseError("'m' must be an integer");
    const int m = v.get<int>();
    check_m(m);
    if (opt.expect_m && *opt.expect_m != m)
        throw DimensionError("input has m = " + std::to_string(m) + ", expected " + std::to_string(*opt.expect_m));
    return m;
}

Field read_field(const Json& j, const ReadOptions& opt) {
    if (!j.contains("field")) return opt.field.value_or(Field::Q);
    if (!j["field"].is_string()) throw ParseError("'field' must be a string");
    const Field f = parse_field(j["field"].get<std::string>());
    if (opt.field && *opt.field != f) throw FieldError("input field differs from --field");
    return f;
}

Mask read_signature(const Json& j, int m) {
    if (!j.is_array()) throw ParseError("signature must be an array of +1/-1");
    if (j.size() != static_cast<std::size_t>(m)) throw DimensionError("signature length differs from m");
    std::vector<int> values;
    for (const auto& x : j) {
        if (!x.is_number_integer() || (x.get<int>() != 1 && x.get<int>() != -1))
            throw ParseError("signature entries must be +1 or -1");
        values.push_back(x.get<int>());
    }
    return signature_from_values(values);
}

Json signature_json(Mask s, int m) {
    Json a = Json::array();
    for (int v : signature_values(s, m)) a.push_back(v);
    return a;
}

}  // namespace

Scalar scalar_from_json(const Json& j, Field field) {
    Scalar s;
    if (j.is_string())
        s = Scalar::parse(j.get<std::string>());
    else if (j.is_number_integer())
        s = Scalar(j.get<long>());
    else
        throw ParseError("scalar must be a string or an integer");
    if (field == Field::Q && !s.is_real()) throw FieldError("complex scalar in a real input");
    return s;
}

Json element_to_json(const AlgebraElement& x) {
    Json terms = Json::array();
    for (const auto& [key, c] : x.terms()) {
        const EFBIndex ix = key_index(key, x.m());
        terms.push_back(Json{{"a", signature_json(ix.a, x.m())}, {"b", signature_json(ix.b, x.m())}, {"c", c.str()}});
    }
    return Json{{"m", x.m()}, {"field", field_name(x.field())}, {"terms", terms}};
}

AlgebraElement element_from_json(const Json& j, const ReadOptions& opt) {
    const int m = read_m(j, opt);
    const Field f = read_field(j, opt);
    const Json& terms = member(j, "terms");
    if (!terms.is_array()) throw ParseError("'terms' must be an array");
    std::vector<AlgebraElement::Term> t;
    for (const auto& term : terms) {
        const Mask a = read_signature(member(term, "a"), m);
        const Mask b = read_signature(member(term, "b"), m);
        t.emplace_back(index_key({a, b}, m), scalar_from_json(member(term, "c"), f));
    }
    return AlgebraElement::from_terms(m, f, std::move(t));
}

Json spinor_to_json(const Spinor& w) {
    Json xi = Json::object();
    for (Mask a = 0; a < w.dim(); ++a)
        if (!w[a].is_zero()) xi[std::to_string(a)] = w[a].str();
    return Json{{"m", w.m()}, {"field", field_name(w.field())}, {"xi", xi}};
}

Spinor spinor_from_json(const Json& j, const ReadOptions& opt) {
    const int m = read_m(j, opt);
    const Field f = read_field(j, opt);
    const Json& xi = member(j, "xi");
    if (!xi.is_object()) throw ParseError("'xi' must be an object keyed by mask");
    Spinor w(m, f);
    for (const auto& [key, val] : xi.items()) {
        std::size_t pos = 0;
        unsigned long mask = 0;
        try {
            mask = std::stoul(key, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad mask '" + key + "'");
        }
        if (pos != key.size()) throw ParseError("bad mask '" + key + "'");
        if (mask > full_mask(m)) throw RangeError("mask " + key + " has bits beyond m");
        w[static_cast<Mask>(mask)] = scalar_from_json(val, f);
    }
    return w;
}

Json vector_to_json(const WittVector& v) {
    Json a = Json::array(), b = Json::array();
    for (const auto& x : v.alpha) a.push_back(x.str());
    for (const auto& x : v.beta) b.push_back(x.str());
    return Json{{"alpha", a}, {"beta", b}, {"text", vector_text(v)}};
}

WittVector vector_from_json(const Json& j, int m, Field field) {
    const Json& a = member(j, "alpha");
    const Json& b = member(j, "beta");
    if (!a.is_array() || !b.is_array()) throw ParseError("'alpha' and 'beta' must be arrays");
    if (a.size() != static_cast<std::size_t>(m) || b.size() != static_cast<std::size_t>(m))
        throw DimensionError("vector length differs from m");
    WittVector v(m);
    for (int i = 0; i < m; ++i) {
        v.alpha[static_cast<std::size_t>(i)] = scalar_from_json(a[static_cast<std::size_t>(i)], field);
        v.beta[static_cast<std::size_t>(i)] = scalar_from_json(b[static_cast<std::size_t>(i)], field);
    }
    return v;
}

std::string vector_text(const WittVector& v) {
    std::string s;
    auto add = [&](const Scalar& c, const std::string& name) {
        if (c.is_zero()) return;
        std::string cs = c.str();
        bool neg = c.is_real() && sgn(c.re()) < 0;
        if (neg) cs = (-c).str();
        if (!s.empty())
            s += neg ? " - " : " + ";
        else if (neg)
            s += "-";
        if (cs == "1")
            s += name;
        else if (c.is_real())
            s += cs + "*" + name;
        else
            s += "(" + cs + ")*" + name;
    };
    for (int i = 0; i < v.m(); ++i) {
        add(v.alpha[static_cast<std::size_t>(i)], "p" + std::to_string(i + 1));
        add(v.beta[static_cast<std::size_t>(i)], "q" + std::to_string(i + 1));
    }
    return s.empty() ? "0" : s;
}

Json plane_to_json(const TNPBasis& t) {
    Json vs = Json::array();
    for (const auto& v : t.vectors) vs.push_back(vector_to_json(v));
    return Json{{"m", t.m}, {"dim", t.dim()}, {"vectors", vs}};
}

Json subspace_to_json(const SpinorSubspace& s) {
    Json basis = Json::array();
    for (const auto& b : s.basis) {
        Json xi = Json::object();
        for (Mask a = 0; a < b.size(); ++a)
            if (!b[a].is_zero()) xi[std::to_string(a)] = b[a].str();
        basis.push_back(xi);
    }
    return Json{{"m", s.m}, {"dim", s.dim()}, {"basis", basis}};
}

Json expansion_to_json(const GammaExpansion& e) {
    Json out = Json::array();
    for (const auto& [s, c] : e.coeffs) out.push_back(Json{{"word", gamma_word(s)}, {"coeff", c.str()}});
    return out;
}

Json expansion_to_json(const WittExpansion& e) {
    Json out = Json::array();
    for (const auto& [k, c] : e.coeffs) out.push_back(Json{{"word", witt_word(key_index(k, e.m), e.m)}, {"coeff", c.str()}});
    return out;
}

Json report_to_json(const SimplicityReport& r, const Spinor& w) {
    return Json{{"spinor", spinor_to_json(w)},
                {"nullity", r.nullity},
                {"weyl", r.weyl},
                {"simple", r.direct},
                {"verdicts", {{"direct", r.direct}, {"cartan_chevalley", r.cartan_chevalley}, {"generalized", r.generalized}, {"shortcut", r.shortcut}}},
                {"candidate", plane_to_json(r.candidate)},
                {"k_m", r.generalized_detail.k_m},
                {"min_grade", r.generalized_detail.min_grade},
                {"constraints", {{"generated", r.constraints_generated}, {"violated", r.constraints_violated}}}};
}

}  // namespace efb
