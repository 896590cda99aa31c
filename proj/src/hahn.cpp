#include "tamefield/hahn.hpp"
#include "tamefield/error.hpp"

#include <algorithm>
#include <map>

namespace tamefield {

const OGroupElem& Value::elem() const {
    if (!v_) throw Error(ErrorKind::InvalidElement, "value is infinite");
    return *v_;
}

bool Value::operator==(const Value& other) const {
    if (is_infinite() || other.is_infinite()) return is_infinite() == other.is_infinite();
    return *v_ == *other.v_;
}

std::strong_ordering Value::operator<=>(const Value& other) const {
    if (is_infinite() && other.is_infinite()) return std::strong_ordering::equal;
    if (is_infinite()) return std::strong_ordering::greater;
    if (other.is_infinite()) return std::strong_ordering::less;
    return *v_ <=> *other.v_;
}

Value Value::operator+(const Value& other) const {
    if (is_infinite() || other.is_infinite()) return infinity();
    return Value(*v_ + *other.v_);
}

std::string Value::to_string() const { return v_ ? v_->to_string() : "inf"; }

std::optional<ResidueElem> HahnSeries::coeff_at(const OGroupElem& exp, const ResidueElem& zero) const {
    if (prec_ && exp >= *prec_) return std::nullopt;
    for (const auto& t : terms_) {
        if (t.exp == exp) return t.coeff;
        if (t.exp > exp) break;
    }
    return zero;
}

std::string monomial_text(const OGroupElem& exp) {
    if (exp.is_zero()) return "";
    if (exp.rank() == 1) {
        const Rational& q = exp[0];
        if (q == 1) return "t";
        if (is_integer(q) && q > 0) return "t^" + q.get_str();
        return "t^(" + q.get_str() + ")";
    }
    return "t^" + exp.to_string();
}

std::string coeff_times(const std::string& coeff, bool coeff_is_one, const std::string& mono) {
    if (mono.empty()) return coeff;
    if (coeff_is_one) return mono;
    if (coeff.find_first_of("+ ") != std::string::npos) return "(" + coeff + ")*" + mono;
    return coeff + "*" + mono;
}

HahnField::HahnField(ResidueField residue, OGroupDesc group, OGroupElem default_prec)
    : k_(std::move(residue)), group_(std::move(group)), default_prec_(std::move(default_prec)) {
    if (default_prec_.rank() != group_.rank())
        throw Error(ErrorKind::DimensionMismatch, "default precision rank does not match the value group");
}

bool HahnField::contains(const HahnSeries& a) const {
    if (a.prec() && a.prec()->rank() != group_.rank()) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        const auto& t = a.terms()[i];
        if (!group_.contains(t.exp) || !k_.contains(t.coeff) || k_.is_zero(t.coeff)) return false;
        if (i > 0 && !(a.terms()[i - 1].exp < t.exp)) return false;
        if (a.prec() && !(t.exp < *a.prec())) return false;
    }
    return true;
}

HahnSeries HahnField::make(std::vector<HahnTerm> terms, std::optional<OGroupElem> prec) const {
    if (prec && prec->rank() != group_.rank())
        throw Error(ErrorKind::DimensionMismatch, "precision rank does not match the value group");
    std::map<OGroupElem, ResidueElem> acc;
    for (auto& t : terms) {
        group_.require(t.exp);
        if (!k_.contains(t.coeff)) throw Error(ErrorKind::InvalidElement, "coefficient not in " + k_.name());
        if (prec && !(t.exp < *prec)) continue;
        auto it = acc.find(t.exp);
        if (it == acc.end())
            acc.emplace(std::move(t.exp), std::move(t.coeff));
        else
            it->second = k_.add(it->second, t.coeff);
    }
    std::vector<HahnTerm> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!k_.is_zero(c)) out.push_back({e, c});
    return {std::move(out), std::move(prec)};
}

HahnSeries HahnField::constant(const ResidueElem& c) const {
    if (k_.is_zero(c)) return {};
    return {{{group_.zero(), c}}, std::nullopt};
}

HahnSeries HahnField::monomial(const ResidueElem& c, const OGroupElem& exp) const {
    group_.require(exp);
    if (k_.is_zero(c)) return {};
    return {{{exp, c}}, std::nullopt};
}

namespace {

std::optional<OGroupElem> min_prec(const std::optional<OGroupElem>& a, const std::optional<OGroupElem>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

HahnSeries HahnField::add(const HahnSeries& a, const HahnSeries& b) const {
    auto prec = min_prec(a.prec(), b.prec());
    std::vector<HahnTerm> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto ia = a.terms().begin(), ib = b.terms().begin();
    auto push = [&](const OGroupElem& e, ResidueElem c) {
        if (prec && !(e < *prec)) return;
        if (k_.is_zero(c)) return;
        out.push_back({e, std::move(c)});
    };
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->exp < ib->exp)) {
            push(ia->exp, ia->coeff);
            ++ia;
        } else if (ia == a.terms().end() || ib->exp < ia->exp) {
            push(ib->exp, ib->coeff);
            ++ib;
        } else {
            push(ia->exp, k_.add(ia->coeff, ib->coeff));
            ++ia;
            ++ib;
        }
    }
    return {std::move(out), std::move(prec)};
}

HahnSeries HahnField::neg(const HahnSeries& a) const {
    std::vector<HahnTerm> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) out.push_back({t.exp, k_.neg(t.coeff)});
    return {std::move(out), a.prec()};
}

HahnSeries HahnField::sub(const HahnSeries& a, const HahnSeries& b) const { return add(a, neg(b)); }

Value HahnField::value_bound(const HahnSeries& a) const {
    if (!a.terms().empty()) return a.terms().front().exp;
    if (a.prec()) return *a.prec();
    return Value::infinity();
}

HahnSeries HahnField::mul(const HahnSeries& a, const HahnSeries& b) const {
    std::optional<OGroupElem> prec;
    auto bound = [](const std::optional<OGroupElem>& p, const Value& v) -> std::optional<OGroupElem> {
        if (!p || v.is_infinite()) return std::nullopt;
        return *p + v.elem();
    };
    prec = min_prec(bound(a.prec(), value_bound(b)), bound(b.prec(), value_bound(a)));
    std::map<OGroupElem, ResidueElem> acc;
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            OGroupElem e = x.exp + y.exp;
            if (prec && !(e < *prec)) continue;
            auto c = k_.mul(x.coeff, y.coeff);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(std::move(e), std::move(c));
            else
                it->second = k_.add(it->second, c);
        }
    }
    std::vector<HahnTerm> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!k_.is_zero(c)) out.push_back({e, c});
    return {std::move(out), std::move(prec)};
}

HahnSeries HahnField::inv(const HahnSeries& a) const {
    if (a.terms().empty()) {
        if (a.is_exact()) throw Error(ErrorKind::DivisionByZero, "inverse of exact zero");
        throw Error(ErrorKind::PrecisionExhausted, "inverse of an element that is zero to precision");
    }
    const OGroupElem& v = a.terms().front().exp;
    if (a.is_exact() && a.terms().size() == 1)
        return {{{-v, k_.inv(a.terms().front().coeff)}}, std::nullopt};
    OGroupElem target = a.is_exact() ? default_prec_ : *a.prec() - v - v;
    return inv_to(a, target);
}

HahnSeries HahnField::inv_to(const HahnSeries& a, const OGroupElem& target) const {
    if (a.terms().empty()) {
        if (a.is_exact()) throw Error(ErrorKind::DivisionByZero, "inverse of exact zero");
        throw Error(ErrorKind::PrecisionExhausted, "inverse of an element that is zero to precision");
    }
    const OGroupElem v = a.terms().front().exp;
    const ResidueElem c_inv = k_.inv(a.terms().front().coeff);
    // a = c t^v (1 + eps); the inverse is c^{-1} t^{-v} sum (-eps)^n, needed to relative precision rel.
    OGroupElem rel = target + v;
    if (a.prec()) rel = std::min(rel, *a.prec() - v);
    if (rel.sign() <= 0)
        throw Error(ErrorKind::PrecisionExhausted, "inverse has no known terms below " + target.to_string());

    std::vector<HahnTerm> eps_terms;
    for (std::size_t i = 1; i < a.terms().size(); ++i)
        eps_terms.push_back({a.terms()[i].exp - v, k_.neg(k_.mul(a.terms()[i].coeff, c_inv))});
    HahnSeries neg_eps(std::move(eps_terms), std::nullopt);

    HahnSeries sum = one();
    HahnSeries power = one();
    std::size_t steps = 0;
    while (true) {
        power = truncate(mul(power, neg_eps), rel);
        power = exact_part(power);
        if (power.terms().empty()) break;
        sum = add(sum, power);
        if (++steps > max_steps_)
            throw Error(ErrorKind::PrecisionExhausted,
                        "inverse series did not reach precision " + target.to_string() + " within " +
                            std::to_string(max_steps_) + " steps");
    }
    std::vector<HahnTerm> out;
    out.reserve(sum.terms().size());
    for (const auto& t : sum.terms())
        if (t.exp < rel) out.push_back({t.exp - v, k_.mul(t.coeff, c_inv)});
    return {std::move(out), rel - v};
}

HahnSeries HahnField::frobenius(const HahnSeries& a) const {
    const auto p = k_.characteristic();
    if (p == 0) throw Error(ErrorKind::UnsupportedField, "Frobenius needs characteristic p > 0");
    std::vector<HahnTerm> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) out.push_back({t.exp * Rational(p), k_.frobenius(t.coeff)});
    std::optional<OGroupElem> prec;
    if (a.prec()) prec = *a.prec() * Rational(p);
    return {std::move(out), std::move(prec)};
}

Value HahnField::value(const HahnSeries& a) const {
    if (!a.terms().empty()) return a.terms().front().exp;
    if (a.is_exact()) return Value::infinity();
    throw Error(ErrorKind::PrecisionLoss, "zero up to precision O(t^" + a.prec()->to_string() + ")");
}

ResidueElem HahnField::residue(const HahnSeries& a) const {
    Value v = value(a);
    if (v.is_infinite() || v.elem().sign() != 0)
        throw Error(ErrorKind::NonUnitValue, "residue needs value 0, got " + v.to_string());
    return a.terms().front().coeff;
}

HahnSeries HahnField::truncate(const HahnSeries& a, const OGroupElem& cut) const {
    std::vector<HahnTerm> out;
    for (const auto& t : a.terms()) {
        if (!(t.exp < cut)) break;
        out.push_back(t);
    }
    return {std::move(out), min_prec(a.prec(), cut)};
}

std::string HahnField::to_string(const HahnSeries& a) const {
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty()) out += " + ";
        out += coeff_times(k_.to_string(t.coeff), k_.is_one(t.coeff), monomial_text(t.exp));
    }
    if (a.prec()) {
        std::string mono = monomial_text(*a.prec());
        if (!out.empty()) out += " + ";
        out += "O(" + (mono.empty() ? std::string("1") : mono) + ")";
    }
    return out.empty() ? "0" : out;
}

std::string HahnField::name() const { return k_.name() + "((t^" + group_.to_string() + "))"; }

}  // namespace tamefield
