#include "lgl/json_io.hpp"

#include <stdexcept>

namespace lgl::io {

namespace {

json rat_to_json(const mpq_class& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

mpq_class rat_from_json(const json& j) {
    mpz_class num(j.at("num").get<std::string>());
    mpz_class den(j.at("den").get<std::string>());
    if (sgn(den) == 0) throw std::invalid_argument("scalar JSON: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

json to_json(const gaussian_rational& v) {
    return json{{"re", rat_to_json(v.re())}, {"im", rat_to_json(v.im())}};
}

gaussian_rational gr_from_json(const json& j) {
    return gaussian_rational(rat_from_json(j.at("re")), rat_from_json(j.at("im")));
}

json to_json(const exponent& k) { return json(k.entries()); }

exponent exponent_from_json(const json& j) {
    return exponent(j.get<std::vector<std::int64_t>>());
}

json to_json(const index_set& s) { return json(std::vector<int>(s.begin(), s.end())); }

index_set index_set_from_json(const json& j) {
    auto v = j.get<std::vector<int>>();
    return index_set(v.begin(), v.end());
}

json to_json(const laurent_poly& f) {
    json terms = json::array();
    for (const auto& [k, c] : f.terms())
        terms.push_back(json{{"exps", to_json(k)}, {"coeff", to_json(c)}});
    return json{{"n", f.var_count()}, {"terms", terms}};
}

laurent_poly poly_from_json(const json& j) {
    laurent_poly f(j.at("n").get<int>());
    for (const json& t : j.at("terms"))
        f.add_term(exponent_from_json(t.at("exps")), gr_from_json(t.at("coeff")));
    return f;
}

json to_json(const alpha_param& alpha) {
    json out = json::array();
    for (const gaussian_rational& v : alpha.entries()) out.push_back(to_json(v));
    return out;
}

alpha_param alpha_from_json(const json& j) {
    std::vector<gaussian_rational> entries;
    for (const json& e : j) entries.push_back(gr_from_json(e));
    return alpha_param::from_normalized(std::move(entries));
}

std::vector<gaussian_rational> raw_alpha_from_json(const json& j) {
    std::vector<gaussian_rational> out;
    for (const json& e : j) {
        if (e.is_string())
            out.push_back(gaussian_rational::parse(e.get<std::string>()));
        else
            out.push_back(gr_from_json(e));
    }
    return out;
}

json to_json(const uword& w) {
    json factors = json::array();
    for (const matrix_unit& u : w.factors()) factors.push_back(json::array({u.row, u.col}));
    return json{{"prefactor", to_json(w.prefactor())}, {"factors", factors}};
}

uword uword_from_json(const json& j) {
    const json& src = j.contains("word") ? j.at("word") : j;
    std::vector<matrix_unit> factors;
    for (const json& f : src.at("factors"))
        factors.push_back(matrix_unit{f.at(0).get<int>(), f.at(1).get<int>()});
    return uword(gr_from_json(src.at("prefactor")), std::move(factors));
}

json to_json(const module_id& id) {
    json out{{"alpha", to_json(id.alpha)}, {"m", id.m}};
    switch (id.kind) {
        case module_kind::V: out["kind"] = "V"; break;
        case module_kind::L: out["kind"] = "L"; break;
        case module_kind::W: out["kind"] = "W"; break;
    }
    if (id.kind == module_kind::L)
        out["j"] = id.j;
    else
        out["J"] = to_json(id.J);
    return out;
}

module_id module_id_from_json(const json& j) {
    alpha_param alpha = alpha_from_json(j.at("alpha"));
    std::int64_t m = j.at("m").get<std::int64_t>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "V") return module_id::make_V(std::move(alpha), m, index_set_from_json(j.at("J")));
    if (kind == "W") return module_id::make_W(std::move(alpha), m, index_set_from_json(j.at("J")));
    if (kind == "L") return module_id::make_L(std::move(alpha), m, j.at("j").get<int>());
    throw std::invalid_argument("module JSON: unknown kind '" + kind + "'");
}

json to_json(const ladder_certificate& cert) {
    json steps = json::array();
    for (const ladder_step& s : cert.steps)
        steps.push_back(json{{"unit", json::array({s.unit.row, s.unit.col})},
                             {"coeff", to_json(s.coeff)},
                             {"exps", to_json(s.after)}});
    return json{{"p", to_json(cert.source)},
                {"q", to_json(cert.target)},
                {"word", to_json(cert.word)},
                {"steps", steps}};
}

ladder_certificate ladder_from_json(const json& j) {
    ladder_certificate cert{exponent_from_json(j.at("p")), exponent_from_json(j.at("q")),
                            uword_from_json(j.at("word")), {}};
    for (const json& s : j.at("steps"))
        cert.steps.push_back({matrix_unit{s.at("unit").at(0).get<int>(),
                                          s.at("unit").at(1).get<int>()},
                              gr_from_json(s.at("coeff")), exponent_from_json(s.at("exps"))});
    return cert;
}

json to_json(const separation_certificate& cert) {
    json ops = json::array();
    for (const sep_op& op : cert.ops) {
        if (std::holds_alternative<sep_root>(op)) {
            ops.push_back(json{{"op", "root"}});
        } else if (const auto* ap = std::get_if<sep_apply>(&op)) {
            ops.push_back(json{{"op", "apply"}, {"a", ap->a}, {"src", ap->src}});
        } else {
            const auto& cb = std::get<sep_combine>(op);
            ops.push_back(json{{"op", "combine"},
                               {"c1", to_json(cb.c1)},
                               {"src1", cb.src1},
                               {"c2", to_json(cb.c2)},
                               {"src2", cb.src2}});
        }
    }
    json terms = json::array();
    for (const isolated_term& t : cert.terms)
        terms.push_back(json{{"exps", to_json(t.exp)},
                             {"coeff", to_json(t.coeff)},
                             {"node", t.node}});
    return json{{"input", to_json(cert.input)}, {"ops", ops}, {"terms", terms}};
}

json hw_to_json(const hw_certificate& cert, const alpha_param& alpha) {
    json lowered;
    int j = static_cast<int>(cert.J.size());
    if (j >= 1)
        lowered = to_json(module_id::make_L(alpha, cert.m, j - 1));
    else
        lowered = nullptr; // L(m,-1) = {0}
    return json{{"vector", to_json(cert.vec)},
                {"weight", weight_to_json(cert.wt)},
                {"lowered_into", lowered}};
}

json to_json(const poset_index& idx) { return json{{"m", idx.m}, {"J", to_json(idx.J)}}; }

json to_json(const axiom_report& report) {
    json ce = json::array();
    for (const axiom_counterexample& c : report.counterexamples) {
        json ms = json::array();
        for (const exponent& k : c.monomials) ms.push_back(to_json(k));
        json is = json::array();
        for (const poset_index& i : c.indices) is.push_back(to_json(i));
        ce.push_back(json{{"axiom", c.axiom}, {"monomials", ms}, {"indices", is}});
    }
    return json{{"axioms",
                 json{{"unit", report.unit},
                      {"monotone", report.monotone},
                      {"product", report.product},
                      {"exhaustive", report.exhaustive},
                      {"strict_product", report.strict_product}}},
                {"checked", report.checked},
                {"counterexamples", ce}};
}

namespace {

json exps_array(const std::set<exponent>& s) {
    json out = json::array();
    for (const exponent& k : s) out.push_back(to_json(k));
    return out;
}

json exps_array(const std::vector<exponent>& s) {
    json out = json::array();
    for (const exponent& k : s) out.push_back(to_json(k));
    return out;
}

} // namespace

json to_json(const reach_report& report) {
    return json{{"start", report.start ? to_json(*report.start) : json(nullptr)},
                {"verdict", report.verdict},
                {"reached", exps_array(report.reached)},
                {"expected", exps_array(report.expected)},
                {"missing", exps_array(report.missing)},
                {"extra", exps_array(report.extra)},
                {"note", report.note}};
}

json to_json(const direct_sum_report& report) {
    json blocks = json::array();
    for (const auto& [J, size] : report.blocks)
        blocks.push_back(json{{"J", to_json(J)}, {"size", size}});
    return json{{"verdict", report.verdict},
                {"j", report.j},
                {"quotient_size", report.quotient_size},
                {"blocks", blocks},
                {"violations", exps_array(report.violations)},
                {"unquotiented_checked", report.checked_unquotiented},
                {"unquotiented_ok", report.unquotiented_ok},
                {"note", report.note}};
}

json to_json(const indecomp_report& report) {
    json floors = json::array();
    for (const floor_fact& f : report.floors)
        floors.push_back(json{{"J", to_json(f.J)},
                              {"generator", to_json(f.gen)},
                              {"floor", to_json(f.floor)},
                              {"ladder_ok", f.ladder_ok}});
    json splits = json::array();
    for (const binomial_fact& s : report.splits)
        splits.push_back(json{{"n1", s.n1}, {"n2", s.n2}, {"lhs", s.lhs}, {"rhs", s.rhs},
                              {"ok", s.ok}});
    json witnesses = json::array();
    for (const pair_witness& w : report.witnesses)
        witnesses.push_back(json{{"J1", to_json(w.J1)},
                                 {"J2", to_json(w.J2)},
                                 {"meet", to_json(w.meet)},
                                 {"generator", to_json(w.gen)}});
    return json{{"mode", report.mode},
                {"verdict", report.verdict},
                {"floors", floors},
                {"splits", splits},
                {"witnesses", witnesses},
                {"note", report.note}};
}

json to_json(const closure_report& report) {
    json violations = json::array();
    for (const closure_violation& v : report.violations)
        violations.push_back(json{{"k", to_json(v.k)},
                                  {"unit", json::array({v.u.row, v.u.col})},
                                  {"image", to_json(v.image)}});
    return json{{"verdict", report.verdict},
                {"members", report.members},
                {"checked", report.checked},
                {"violations", violations}};
}

json to_json(const sweep_config& config) {
    json alphas = json::array();
    for (const auto& raw : config.alphas) {
        json entries = json::array();
        for (const gaussian_rational& v : raw) entries.push_back(to_json(v));
        alphas.push_back(entries);
    }
    return json{{"n", config.ns},
                {"m_range", json::array({config.m_lo, config.m_hi})},
                {"B", config.bound},
                {"alphas", alphas}};
}

sweep_config sweep_config_from_json(const json& j) {
    const json& src = j.contains("config") ? j.at("config") : j;
    sweep_config config;
    config.ns = src.at("n").get<std::vector<int>>();
    config.m_lo = src.at("m_range").at(0).get<std::int64_t>();
    config.m_hi = src.at("m_range").at(1).get<std::int64_t>();
    config.bound = src.at("B").get<std::int64_t>();
    config.alphas.clear();
    if (src.contains("alphas"))
        for (const json& a : src.at("alphas")) config.alphas.push_back(raw_alpha_from_json(a));
    return config;
}

json to_json(const sweep_report& report) {
    json cases = json::array();
    for (const sweep_case& c : report.cases) {
        json entry{{"check", c.check}, {"n", c.n},           {"alpha", to_json(c.alpha)},
                   {"m", c.m},         {"verdict", c.verdict}, {"note", c.note}};
        if (c.J) entry["J"] = to_json(*c.J);
        if (c.j) entry["j"] = *c.j;
        if (c.missing) entry["missing"] = c.missing;
        if (c.extra) entry["extra"] = c.extra;
        if (!c.witness_path.empty()) {
            json steps = json::array();
            for (const ladder_step& s : c.witness_path)
                steps.push_back(json{{"unit", json::array({s.unit.row, s.unit.col})},
                                     {"coeff", to_json(s.coeff)},
                                     {"exps", to_json(s.after)}});
            entry["witness_path"] = steps;
        }
        cases.push_back(entry);
    }
    return json{{"config", to_json(report.config)},
                {"all_pass", report.all_pass},
                {"passed", report.passed},
                {"failed", report.failed},
                {"cases", cases}};
}

json weight_to_json(const weight& w) {
    json out = json::array();
    for (const gaussian_rational& v : w) out.push_back(to_json(v));
    return out;
}

json classification_report(const alpha_param& alpha, const exponent& alpha_shift, std::int64_t m,
                           const index_set& J) {
    json out;
    out["n"] = alpha.size();
    out["alpha"] = to_json(alpha);
    out["alpha_shift"] = to_json(alpha_shift);
    out["m"] = m;
    out["J"] = to_json(J);
    out["module"] = to_json(module_id::make_V(alpha, m, J));

    generator_result gen = generator_of_V(alpha, m, J);
    out["case"] = case_label(gen);
    out["generator"] = nullptr;
    out["zero_module"] = false;
    out["equals_module"] = nullptr;
    if (const auto* cg = std::get_if<cyclic_generator>(&gen)) {
        out["generator"] = to_json(cg->gen);
    } else if (std::holds_alternative<zero_module>(gen)) {
        out["zero_module"] = true;
    } else {
        const auto& eq = std::get<equals_module>(gen);
        out["equals_module"] = to_json(module_id::make_L(alpha, eq.m, eq.j));
    }

    out["finite_dimensional"] = is_finite_dimensional(alpha, m, J);
    std::optional<std::uint64_t> dim = dimension_count(alpha, m, J);
    out["dimension"] = dim ? json(*dim) : json("infinite");
    out["dimension_equals_m_plus_1"] = nullptr;
    if (dim && J.empty()) {
        bool matches = m >= 0 && *dim == static_cast<std::uint64_t>(m) + 1;
        out["dimension_equals_m_plus_1"] = matches;
        if (!matches)
            out["dimension_note"] =
                "monomial count C(m+n-1, n-1) equals m+1 only for n=2; reporting the count";
    }

    if (std::optional<hw_certificate> cert = classify_hw(alpha, m, J)) {
        json hw = hw_to_json(*cert, alpha);
        hw["verified"] = verify_hw(*cert, alpha);
        out["highest_weight"] = hw;
    } else {
        out["highest_weight"] = nullptr;
    }
    return out;
}

} // namespace lgl::io
