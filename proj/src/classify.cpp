#include "tamefield/classify.hpp"
#include "tamefield/error.hpp"
#include "tamefield/hensel.hpp"

namespace tamefield {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::YES: return "YES";
        case Verdict::NO: return "NO";
        case Verdict::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

namespace {

PropertyVerdict yes(std::string reason) { return {Verdict::YES, std::move(reason), ""}; }
PropertyVerdict no(std::string witness) { return {Verdict::NO, "", std::move(witness)}; }
PropertyVerdict unknown(std::string reason) { return {Verdict::UNKNOWN, std::move(reason), ""}; }

PropertyVerdict p_divisible(const ValuedField& K) {
    const std::int64_t p = K.char_exponent();
    if (p == 1) return yes("characteristic exponent 1: the condition is void");
    auto d = og_is_p_divisible(K.value_group(), p);
    if (d.divisible) return yes(K.value_group().to_string() + " is " + std::to_string(p) + "-divisible");
    // translate the abstract witness into the value it stands for
    OGroupElem w = *d.witness;
    if (!K.is_hahn()) w = OGroupElem::scalar(w[0] * K.value_generator()[0]);
    return no("value " + w.to_string() + " has no " + std::to_string(p) + "-th part in vK");
}

PropertyVerdict perfect_residue(const ValuedField& K) {
    const auto& k = K.residue_field();
    return yes(k.is_finite() ? k.name() + " is finite, hence perfect" : "Q has characteristic 0, hence perfect");
}

}  // namespace

PropertyVerdict kaplansky_check(const ValuedField& K) {
    const std::int64_t p = K.char_exponent();
    if (p == 1) return yes("characteristic exponent 1: the conditions are void");
    auto pd = p_divisible(K);
    if (pd.verdict == Verdict::NO) return no("vK is not p-divisible: " + pd.witness);
    const auto& k = K.residue_field();
    return no(k.name() + " has an extension of degree " + std::to_string(p) + " (F(" +
              std::to_string(k.size()) + "^" + std::to_string(p) + ")), whose degree is divisible by p");
}

FieldClassification classify_field(const ValuedField& K) {
    FieldClassification out;
    auto& v = out.verdicts;
    const std::int64_t p = K.char_exponent();

    v["perfect_residue"] = perfect_residue(K);
    v["p_divisible_value_group"] = p_divisible(K);
    if (K.maximal_by_construction())
        v["algebraically_maximal"] = yes("Hahn series fields are maximal");
    else
        v["algebraically_maximal"] = unknown("maximality is not decided for " + K.name());
    if (v["algebraically_maximal"].verdict == Verdict::YES)
        v["henselian"] = yes("algebraically maximal fields are henselian");
    else
        v["henselian"] = unknown("henselianity is not decided for " + K.name());

    const bool am = v["algebraically_maximal"].verdict == Verdict::YES;
    const bool hens = v["henselian"].verdict == Verdict::YES;
    const bool pdiv = v["p_divisible_value_group"].verdict == Verdict::YES;
    const bool perf = v["perfect_residue"].verdict == Verdict::YES;

    if (p == 1 && hens)
        v["tame"] = yes("henselian of residue characteristic 0");
    else if (am && pdiv && perf)
        v["tame"] = yes("algebraically maximal, p-divisible value group and perfect residue field");
    else if (!pdiv)
        v["tame"] = no(v["p_divisible_value_group"].witness);
    else
        v["tame"] = unknown("algebraic maximality unknown");

    if (v["tame"].verdict == Verdict::YES)
        v["separably_tame"] = yes("tame fields are separably tame");
    else if (!pdiv)
        v["separably_tame"] = no(v["p_divisible_value_group"].witness);
    else
        v["separably_tame"] = unknown("separable-algebraic maximality unknown");

    if (v["tame"].verdict == Verdict::YES)
        v["defectless"] = yes("tame fields are defectless");
    else if (am)
        v["defectless"] = yes("maximal fields are defectless");
    else
        v["defectless"] = unknown("defectlessness is not decided for " + K.name());

    v["kaplansky"] = kaplansky_check(K);
    return out;
}

std::string axiom_name(const AxiomInstance& a) {
    switch (a.index()) {
        case 0: return "V0";
        case 1: return "VT";
        case 2: return "HENS";
        case 3: return "MAXP";
        case 4: return "VGD_" + std::to_string(std::get<axiom::VGD>(a).p);
        case 5: return "RFD_" + std::to_string(std::get<axiom::RFD>(a).p);
    }
    return "?";
}

namespace {

void require_element(const ValuedField& K, const Element& x) {
    if (!K.contains(x)) throw Error(ErrorKind::InstanceIllFormed, "element is not in " + K.name());
}

bool exactly_zero(const ValuedField& K, const Element& x) { return K.is_zero(x) && K.is_exact(x); }

AxiomVerdict vacuous(const std::string& why) { return {true, "", "antecedent false: " + why}; }

AxiomVerdict check(const ValuedField& K, const axiom::V0& a) {
    require_element(K, a.x);
    for (const auto& y : a.ys) require_element(K, y);
    const Value vx = K.value_bound(a.x);
    if (exactly_zero(K, a.x)) {
        for (const auto& y : a.ys)
            if (vx < K.value_bound(y)) return {false, K.to_string(y), "v(0) is not >= v(y)"};
        return {true, "", "x = 0 and v(0) = infinity dominates every supplied y"};
    }
    for (const auto& y : a.ys)
        if (vx < K.value_bound(y)) return {true, K.to_string(y), "x != 0 and v(y) > v(x)"};
    return {true, "0", "x != 0 and v(0) > v(x)"};
}

AxiomVerdict check(const ValuedField& K, const axiom::VT& a) {
    require_element(K, a.x);
    require_element(K, a.y);
    const Value d = K.value_bound(K.sub(a.x, a.y));
    const Value vx = K.value_bound(a.x);
    const Value vy = K.value_bound(a.y);
    const bool ok = !(d < vx) || !(d < vy);
    return {ok, "", "v(x - y) = " + d.to_string() + ", v(x) = " + vx.to_string() + ", v(y) = " + vy.to_string()};
}

AxiomVerdict check(const ValuedField& K, const axiom::HENS& a) {
    if (a.f.coeffs.empty() || !kp_is_monic(K, a.f)) throw Error(ErrorKind::InstanceIllFormed, "HENS needs a monic f");
    require_element(K, a.y0);
    for (std::size_t i = 0; i < a.f.coeffs.size(); ++i) {
        Value c = K.value_bound(a.f.coeffs[i]);
        if (!c.is_infinite() && c.elem().sign() < 0) return vacuous("coefficient of X^" + std::to_string(i) + " has negative value");
    }
    Value vy = K.value_bound(a.y0);
    if (!vy.is_infinite() && vy.elem().sign() < 0) return vacuous("v(y) < 0");
    Value fy = K.value_bound(kp_eval(K, a.f, a.y0));
    if (!fy.is_infinite() && fy.elem().sign() <= 0) return vacuous("v(f(y)) <= 0");
    Element dy = kp_eval(K, kp_derivative(K, a.f), a.y0);
    if (K.is_zero(dy) || K.value(dy).elem().sign() != 0) return vacuous("v(f'(y)) != 0");

    const OGroupElem target = K.is_hahn() ? *K.default_prec() : OGroupElem::scalar(Rational(32));
    HenselResult r = hensel_lift(K, a.f, a.y0, target);
    Element fz = kp_eval(K, a.f, r.root);
    Element diff = K.sub(r.root, a.y0);
    const bool close = exactly_zero(K, diff) || K.value(diff).elem().sign() > 0;
    if (K.is_hahn()) {
        const bool root = K.is_zero(fz) || !(K.value(fz).elem() < target);
        return {close && root, K.to_string(r.root),
                "Newton iteration: v(z - y) > 0 and f(z) = 0 up to O(t^" + target.to_string() + ")"};
    }
    if (exactly_zero(K, fz) && close) return {true, K.to_string(r.root), "exact root z with v(z - y) > 0"};
    return {false, K.to_string(r.root),
            "Newton iterates approach a root only in the completion; no exact root found in " + K.name()};
}

AxiomVerdict check(const ValuedField& K, const axiom::MAXP& a) {
    if (a.f.coeffs.empty() || !kp_is_monic(K, a.f)) throw Error(ErrorKind::InstanceIllFormed, "MAXP needs a monic f");
    require_element(K, a.candidate);
    const Value best = K.value_bound(kp_eval(K, a.f, a.candidate));
    for (const auto& z : a.others) {
        require_element(K, z);
        const Value vz = K.value_bound(kp_eval(K, a.f, z));
        if (best < vz) return {false, K.to_string(z), "v f(z) = " + vz.to_string() + " exceeds " + best.to_string()};
    }
    return {true, K.to_string(a.candidate),
            "v f(x*) = " + best.to_string() + " dominates " + std::to_string(a.others.size()) + " supplied z"};
}

AxiomVerdict check(const ValuedField& K, const axiom::VGD& a) {
    if (a.p < 2) throw Error(ErrorKind::InstanceIllFormed, "VGD_p needs a prime p");
    require_element(K, a.x);
    if (exactly_zero(K, a.x)) return {true, "", "x = 0"};
    const OGroupElem vx = K.value(a.x).elem();
    auto e = K.divide_in_value_group(-vx, a.p);
    if (!e) return {false, "", "no y: " + (vx / Rational(a.p)).to_string() + " is not in vK"};
    Element y = K.monomial(K.residue_field().one(), *e);
    Element xyp = K.mul(a.x, K.pow(y, static_cast<unsigned>(a.p)));
    const bool ok = K.value(xyp).elem().is_zero();
    return {ok, K.to_string(y), "v(x y^p) = " + K.value(xyp).to_string()};
}

std::optional<ResidueElem> pth_root_in(const ResidueField& k, const ResidueElem& a, std::int64_t p) {
    if (k.is_finite()) {
        if (p == k.characteristic()) return fq_pth_root(k, a);
        for (const auto& b : k.elements())
            if (k.pow(b, Integer(p)) == a) return b;
        return std::nullopt;
    }
    const Rational& q = a.rational();
    Integer num, den;
    const bool neg = q < 0;
    if (neg && p % 2 == 0) return std::nullopt;
    Integer n = abs(q.get_num());
    if (!mpz_root(num.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p))) return std::nullopt;
    if (!mpz_root(den.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(p))) return std::nullopt;
    Rational r(neg ? Integer(-num) : num, den);
    r.canonicalize();
    return k.from_rational(r);
}

AxiomVerdict check(const ValuedField& K, const axiom::RFD& a) {
    if (a.p < 2) throw Error(ErrorKind::InstanceIllFormed, "RFD_p needs a prime p");
    require_element(K, a.x);
    if (K.is_zero(a.x) || !K.value(a.x).elem().is_zero()) return vacuous("v(x) != 0");
    const auto& k = K.residue_field();
    auto b = pth_root_in(k, k.inv(K.residue(a.x)), a.p);
    if (!b) return {false, "", "1/xv has no " + std::to_string(a.p) + "-th root in " + k.name()};
    Element y = K.constant(*b);
    Element d = K.sub(K.mul(a.x, K.pow(y, static_cast<unsigned>(a.p))), K.one());
    const bool ok = K.is_zero(d) ? true : K.value(d).elem().sign() > 0;
    return {ok, K.to_string(y), "(yv)^p * xv = 1, so v(x y^p - 1) > 0"};
}

}  // namespace

AxiomVerdict check_axiom_instance(const ValuedField& K, const AxiomInstance& a) {
    return std::visit([&](const auto& inst) { return check(K, inst); }, a);
}

}  // namespace tamefield
