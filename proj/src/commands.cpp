#include "tamefield/commands.hpp"

#include <sstream>

namespace tamefield {

namespace {

ValuedField field_from(const CommandOptions& o, const std::string& text) { return parse_field(text, Rational(o.prec)); }

// "40", "-1/2" or "(1, 0)", read as an exponent of t.
OGroupElem exponent_from(const ValuedField& K, const std::string& text) {
    const std::string inner = !text.empty() && text.front() == '(' && text.back() == ')' ? text.substr(1, text.size() - 2)
                                                                                          : text;
    return K.value(parse_element(K, "t^(" + inner + ")")).elem();
}

CommandResult finish(const std::string& command, Json input, Json result, const std::ostringstream& text, int code = 0) {
    return {envelope(command, std::move(input), std::move(result)), text.str(), code};
}

}  // namespace

CommandResult cmd_analyze_extension(const CommandOptions& o, const std::string& field, const std::optional<std::string>& poly,
                                    const std::optional<std::string>& as) {
    if (poly.has_value() == as.has_value()) throw UsageError("give exactly one of --poly and --as");
    auto K = field_from(o, field);
    ExtensionReport r;
    Json input;
    input["field"] = field_json(K);
    if (as) {
        auto a = parse_element(K, *as);
        input["as"] = K.to_string(a);
        r = artin_schreier_analyze(K, a);
    } else {
        auto f = parse_poly(K, *poly);
        input["poly"] = kp_to_string(K, f);
        r = analyze_extension(K, f);
    }
    std::ostringstream out;
    out << "n = " << r.n << ", e = " << r.e << ", f = " << r.f << ", d = " << r.defect << "\n";
    out << "outcome: " << to_string(r.outcome) << " (" << to_string(r.confidence) << ")\n";
    out << "flags:";
    for (const auto& s : r.flags()) out << " " << s;
    out << "\n";
    for (const auto& line : r.certificate) out << "  " << line << "\n";
    return finish("analyze-extension", input, extension_json(K, r), out);
}

CommandResult cmd_classify_field(const CommandOptions& o, const std::string& field) {
    auto K = field_from(o, field);
    auto c = classify_field(K);
    Json input;
    input["field"] = field_json(K);
    std::ostringstream out;
    out << K.name() << "\n";
    for (const auto& name : kFieldProperties) {
        const auto& v = c[name];
        out << "  " << name << ": " << to_string(v.verdict);
        if (!v.witness.empty()) out << " (witness: " << v.witness << ")";
        else if (!v.reason.empty()) out << " (" << v.reason << ")";
        out << "\n";
    }
    return finish("classify-field", input, classification_json(c), out);
}

CommandResult cmd_gauss_value(const CommandOptions& o, const std::string& field, const std::string& mpoly, int nx, int ny) {
    auto K = field_from(o, field);
    auto f = parse_mpoly(K, mpoly, nx, ny);
    auto A = GaussAssignment::standard(K, f.nx, f.ny);
    Json input;
    input["field"] = field_json(K);
    input["mpoly"] = mpoly_to_string(K, f);
    auto result = gauss_json(K, A, f);
    std::ostringstream out;
    out << "vx_i: unit vectors in " << A.ambient.to_string() << "\n";
    out << "value: " << result["value"].get<std::string>() << "\n";
    if (!result["residue"].is_null()) out << "residue: " << result["residue"].get<std::string>() << "\n";
    return finish("gauss-value", input, result, out);
}

CommandResult cmd_hensel_lift(const CommandOptions& o, const std::string& field, const std::string& poly,
                              const std::string& y0, const std::optional<std::string>& target, int max_iterations) {
    auto K = field_from(o, field);
    auto f = parse_poly(K, poly);
    auto z = parse_element(K, y0);
    OGroupElem tgt;
    if (target) tgt = exponent_from(K, *target);
    else if (auto p = K.default_prec()) tgt = *p;
    else throw UsageError("a target is required over rational function fields");
    auto r = hensel_lift(K, f, z, tgt, max_iterations);
    Json input;
    input["field"] = field_json(K);
    input["poly"] = kp_to_string(K, f);
    input["y0"] = K.to_string(z);
    input["target"] = tgt.to_string();
    std::ostringstream out;
    for (const auto& s : r.trace) out << s.iteration << ": v(f(z)) = " << s.residual_value.to_string() << "\n";
    out << "root: " << K.to_string(r.root) << "\n";
    out << "iterations: " << r.iterations << "\n";
    return finish("hensel-lift", input, hensel_json(K, r), out);
}

CommandResult cmd_pcs_trace(const CommandOptions& o, const std::string& field, const std::string& gen,
                            const std::optional<std::string>& poly, int steps) {
    auto K = field_from(o, field);
    PcsPrefix prefix;
    std::optional<Element> as_a;
    const std::string as_prefix = "artin-schreier:";
    if (gen == "geometric") {
        prefix = pcs_geometric(K, steps);
    } else if (gen.rfind(as_prefix, 0) == 0) {
        as_a = parse_element(K, gen.substr(as_prefix.size()));
        prefix = pcs_artin_schreier(K, *as_a, steps);
    } else {
        throw UsageError("the generator must be 'geometric' or 'artin-schreier:<a>'");
    }
    PolyOverK f;
    if (poly) {
        f = parse_poly(K, *poly);
    } else if (as_a) {
        const auto p = static_cast<std::size_t>(K.characteristic());
        std::vector<Element> cs(p + 1, K.zero());
        cs[0] = K.neg(*as_a);
        cs[1] = K.neg(K.one());
        cs[p] = K.one();
        f = kp_make(K, cs);
    } else {
        throw UsageError("a polynomial is required with the geometric generator");
    }
    auto t = pcs_poly_trace(K, prefix, f);
    Json input;
    input["field"] = field_json(K);
    input["generator"] = prefix.generator_name;
    input["poly"] = kp_to_string(K, f);
    input["steps"] = steps;
    std::ostringstream out;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        out << i << ": v(f(a)) = " << t.values[i].to_string();
        if (i < t.gaps.size()) out << ", gap = " << t.gaps[i].to_string();
        out << "\n";
    }
    out << "fit: " << to_string(t.fit.kind);
    if (t.fit.kind != PcsFitKind::NONE) out << " beta = " << t.fit.beta.to_string();
    if (t.fit.kind == PcsFitKind::AFFINE) out << " h = " << t.fit.h.get_str();
    out << "\n";
    return finish("pcs-trace", input, pcs_json(K, prefix, t), out);
}

CommandResult cmd_decide_oag(const CommandOptions&, const std::string& sentence, bool trivial_allowed,
                             const std::optional<std::string>& group) {
    auto f = parse_formula(sentence);
    Json input, result;
    input["sentence"] = to_string(f);
    input["trivial_allowed"] = trivial_allowed;
    auto qf = doag_qe(f);
    result["quantifier_free"] = to_string(qf);
    std::ostringstream out;
    out << "quantifier-free: " << to_string(qf) << "\n";
    if (f->free_vars().empty()) {
        const bool value = doag_decide_sentence(f, !trivial_allowed);
        result["value"] = value;
        out << (value ? "true" : "false") << "\n";
    } else {
        result["value"] = nullptr;
    }
    if (group) {
        auto G = parse_group(*group);
        input["group"] = G.to_string();
        auto direct = og_evaluate(G, f);
        result["group_value"] = direct.value;
        result["group_value_exact"] = direct.exact;
        out << "in " << G.to_string() << ": " << (direct.value ? "true" : "false")
            << (direct.exact ? "" : " (outer quantifiers sampled)") << "\n";
    }
    return finish("decide-oag", input, result, out);
}

CommandResult cmd_verify_suite(const CommandOptions& o, const std::optional<std::string>& filter) {
    auto r = run_suite(filter, o.seed);
    Json input;
    input["filter"] = filter ? Json(*filter) : Json(nullptr);
    input["seed"] = o.seed;
    std::ostringstream out;
    for (const auto& c : r.cases)
        out << to_string(c.status) << " " << c.id << ": " << c.description << " -- " << c.details << "\n";
    out << (r.passed() ? "all cases passed" : "some cases failed") << "\n";
    return finish("verify-suite", input, suite_json(r), out, r.passed() ? 0 : 1);
}

}  // namespace tamefield
