#include "tamefield/report.hpp"

namespace tamefield {

Json value_json(const Value& v) { return v.is_infinite() ? Json("inf") : Json(v.elem().to_string()); }

Json field_json(const ValuedField& K) {
    Json j;
    j["name"] = K.name();
    j["backend"] = K.is_hahn() ? "hahn" : "ratfunc";
    j["characteristic"] = K.characteristic();
    j["residue_size"] = K.residue_field().size();
    j["value_group"] = K.value_group().to_string();
    return j;
}

Json extension_json(const ValuedField& K, const ExtensionReport& r) {
    Json j;
    j["n"] = r.n;
    j["e"] = r.e;
    j["f"] = r.f;
    j["defect"] = r.defect;
    j["confidence"] = to_string(r.confidence);
    j["outcome"] = to_string(r.outcome);
    j["flags"] = r.flags();
    Json flags;
    flags["tame"] = r.tame;
    flags["purely_wild"] = r.purely_wild;
    flags["defectless"] = r.defectless;
    flags["immediate"] = r.immediate;
    flags["residue_separable"] = r.residue_separable;
    j["properties"] = flags;
    j["certificate"] = r.certificate;
    Json values = Json::array();
    for (const auto& v : r.certificate_values) values.push_back(v.to_string());
    j["certificate_values"] = values;
    Json terms = Json::array();
    for (const auto& t : r.root_terms) terms.push_back(K.to_string(K.monomial(t.coeff, t.exp)));
    j["root_terms"] = terms;
    return j;
}

Json classification_json(const FieldClassification& c) {
    Json j = Json::object();
    for (const auto& name : kFieldProperties) {
        const auto& v = c[name];
        Json e;
        e["verdict"] = to_string(v.verdict);
        if (!v.reason.empty()) e["reason"] = v.reason;
        if (!v.witness.empty()) e["witness"] = v.witness;
        j[name] = e;
    }
    return j;
}

Json gauss_json(const ValuedField& K, const GaussAssignment& A, const MPoly& f) {
    Json j;
    j["ambient_group"] = A.ambient.to_string();
    Json xs = Json::array();
    for (const auto& x : A.x_vals) xs.push_back(x.to_string());
    j["x_values"] = xs;
    j["y_count"] = A.y_count;
    const Value v = gauss_value(A, f);
    j["value"] = value_json(v);
    if (!v.is_infinite() && v.elem().sign() >= 0)
        j["residue"] = rmpoly_to_string(K.residue_field(), gauss_residue(A, f));
    else
        j["residue"] = nullptr;
    return j;
}

Json hensel_json(const ValuedField& K, const HenselResult& r) {
    Json j;
    j["root"] = K.to_string(r.root);
    j["iterations"] = r.iterations;
    Json steps = Json::array();
    for (const auto& s : r.trace) {
        Json e;
        e["iteration"] = s.iteration;
        e["z"] = K.to_string(s.z);
        e["residual_value"] = value_json(s.residual_value);
        e["derivative_value"] = value_json(s.derivative_value);
        steps.push_back(e);
    }
    j["trace"] = steps;
    return j;
}

Json pcs_json(const ValuedField& K, const PcsPrefix& prefix, const PcsTrace& t) {
    Json j;
    j["generator"] = prefix.generator_name;
    Json terms = Json::array();
    for (const auto& a : prefix.terms) terms.push_back(K.to_string(a));
    j["terms"] = terms;
    Json values = Json::array(), gaps = Json::array();
    for (const auto& v : t.values) values.push_back(value_json(v));
    for (const auto& v : t.gaps) gaps.push_back(value_json(v));
    j["values"] = values;
    j["gaps"] = gaps;
    Json fit;
    fit["kind"] = to_string(t.fit.kind);
    if (t.fit.kind != PcsFitKind::NONE) {
        fit["beta"] = t.fit.beta.to_string();
        fit["tail_start"] = t.fit.tail_start;
    }
    if (t.fit.kind == PcsFitKind::AFFINE) {
        fit["h"] = t.fit.h.get_str();
        fit["h_power_of_p"] = t.fit.h_power_of_p;
    }
    j["fit"] = fit;
    return j;
}

Json suite_json(const SuiteResult& r) {
    Json j;
    j["passed"] = r.passed();
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json e;
        e["id"] = c.id;
        e["description"] = c.description;
        e["paper_anchor"] = c.paper_anchor;
        e["tags"] = c.tags;
        e["status"] = to_string(c.status);
        e["details"] = c.details;
        e["seconds"] = c.seconds;
        cases.push_back(e);
    }
    j["cases"] = cases;
    return j;
}

Json envelope(const std::string& command, Json input, Json result) {
    Json j;
    j["version"] = kReportVersion;
    j["command"] = command;
    j["input"] = std::move(input);
    j["result"] = std::move(result);
    return j;
}

}  // namespace tamefield
