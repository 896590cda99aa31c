#include "tamefield/ratfunc.hpp"
#include "tamefield/error.hpp"
#include "tamefield/hahn.hpp"

namespace tamefield {

namespace {

using Fp = ResidueField;

void lp_add_term(const Fp& k, LaurentPoly& f, const Rational& e, const ResidueElem& c) {
    auto it = f.find(e);
    if (it == f.end()) {
        if (!k.is_zero(c)) f.emplace(e, c);
        return;
    }
    it->second = k.add(it->second, c);
    if (k.is_zero(it->second)) f.erase(it);
}

LaurentPoly lp_add(const Fp& k, LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, c] : b) lp_add_term(k, a, e, c);
    return a;
}

LaurentPoly lp_neg(const Fp& k, const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a) r.emplace(e, k.neg(c));
    return r;
}

LaurentPoly lp_mul(const Fp& k, const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) lp_add_term(k, r, ea + eb, k.mul(ca, cb));
    return r;
}

LaurentPoly lp_scale_shift(const Fp& k, const LaurentPoly& a, const ResidueElem& c, const Rational& shift) {
    LaurentPoly r;
    for (const auto& [e, x] : a) r.emplace(e + shift, k.mul(x, c));
    return r;
}

bool lp_is_one(const Fp& k, const LaurentPoly& f) {
    return f.size() == 1 && f.begin()->first == 0 && k.is_one(f.begin()->second);
}

LaurentPoly lp_one(const Fp& k) { return LaurentPoly{{Rational(0), k.one()}}; }

// Dense coefficients of f * t^{-shift} in s = t^{1/scale}; exponents must become nonnegative integers.
ResiduePoly to_dense(const Fp& k, const LaurentPoly& f, const Rational& shift, const Integer& scale) {
    ResiduePoly out;
    for (const auto& [e, c] : f) {
        Rational idx = (e - shift) * Rational(scale);
        const auto i = static_cast<std::size_t>(idx.get_num().get_ui());
        if (out.size() <= i) out.resize(i + 1, k.zero());
        out[i] = c;
    }
    return out;
}

LaurentPoly from_dense(const Fp& k, const ResiduePoly& f, const Rational& shift, const Integer& scale) {
    LaurentPoly out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!k.is_zero(f[i])) out.emplace(Rational(Integer(static_cast<unsigned long>(i))) / Rational(scale) + shift, f[i]);
    return out;
}

}  // namespace

RatFuncField::RatFuncField(ResidueField residue, std::optional<int> level)
    : k_(std::move(residue)), level_(level) {
    if (level_ && *level_ < 0) throw Error(ErrorKind::SemanticError, "tower level must be >= 0");
    if (!k_.is_finite() && level_ != 0)
        throw Error(ErrorKind::UnsupportedField, "p-power roots of t need residue characteristic p > 0");
}

bool RatFuncField::exponent_allowed(const Rational& q) const {
    const Integer& den = q.get_den();
    if (den == 1) return true;
    if (!k_.is_finite()) return false;
    if (!is_power_of(den, k_.characteristic())) return false;
    if (!level_) return true;
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(k_.characteristic()),
                  static_cast<unsigned long>(*level_));
    return bound % den == 0;
}

OGroupDesc RatFuncField::value_group() const {
    if (!level_) return OGroupDesc::Z_inv(k_.characteristic());
    return OGroupDesc::Z();
}

Rational RatFuncField::value_generator() const {
    if (!level_ || *level_ == 0) return 1;
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(k_.characteristic()),
                  static_cast<unsigned long>(*level_));
    return Rational(Integer(1), bound);
}

RatFuncElem RatFuncField::normalize(LaurentPoly num, LaurentPoly den) const {
    if (den.empty()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (num.empty()) return zero();
    {
        const Rational e0 = den.begin()->first;
        const ResidueElem c0 = k_.inv(den.begin()->second);
        num = lp_scale_shift(k_, num, c0, -e0);
        den = lp_scale_shift(k_, den, c0, -e0);
    }
    if (den.size() == 1) return RatFuncElem(std::move(num), std::move(den));

    Integer scale = 1;
    for (const auto& [e, c] : num) scale = lcm(scale, e.get_den());
    for (const auto& [e, c] : den) scale = lcm(scale, e.get_den());
    const Rational shift = num.begin()->first;
    auto n = to_dense(k_, num, shift, scale);
    auto d = to_dense(k_, den, Rational(0), scale);
    auto g = poly::gcd(k_, n, d);
    if (poly::degree<Fp>(g) > 0) {
        n = poly::divmod(k_, n, g).first;
        d = poly::divmod(k_, d, g).first;
        const ResidueElem c0 = k_.inv(d.front());
        n = poly::scale(k_, n, c0);
        d = poly::scale(k_, d, c0);
    }
    return RatFuncElem(from_dense(k_, n, shift, scale), from_dense(k_, d, Rational(0), scale));
}

bool RatFuncField::contains(const RatFuncElem& a) const {
    if (a.is_zero()) return a.den().empty();
    if (a.den().empty()) return false;
    if (a.den().begin()->first != 0 || !k_.is_one(a.den().begin()->second)) return false;
    for (const auto* f : {&a.num(), &a.den()})
        for (const auto& [e, c] : *f)
            if (!exponent_allowed(e) || !k_.contains(c) || k_.is_zero(c)) return false;
    return true;
}

RatFuncElem RatFuncField::make(LaurentPoly num, LaurentPoly den) const {
    for (const auto* f : {&num, &den})
        for (const auto& [e, c] : *f) {
            if (!exponent_allowed(e))
                throw Error(ErrorKind::InvalidElement, "exponent " + e.get_str() + " not allowed in " + name());
            if (!k_.contains(c)) throw Error(ErrorKind::InvalidElement, "coefficient not in " + k_.name());
        }
    LaurentPoly n, d;
    for (const auto& [e, c] : num) lp_add_term(k_, n, e, c);
    for (const auto& [e, c] : den) lp_add_term(k_, d, e, c);
    return normalize(std::move(n), std::move(d));
}

RatFuncElem RatFuncField::make(LaurentPoly num) const { return make(std::move(num), lp_one(k_)); }

RatFuncElem RatFuncField::constant(const ResidueElem& c) const { return monomial(c, Rational(0)); }

RatFuncElem RatFuncField::monomial(const ResidueElem& c, const Rational& exp) const {
    if (!exponent_allowed(exp))
        throw Error(ErrorKind::InvalidElement, "exponent " + exp.get_str() + " not allowed in " + name());
    if (k_.is_zero(c)) return zero();
    return RatFuncElem(LaurentPoly{{exp, c}}, lp_one(k_));
}

RatFuncElem RatFuncField::add(const RatFuncElem& a, const RatFuncElem& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (lp_is_one(k_, a.den()) && lp_is_one(k_, b.den())) {
        auto n = lp_add(k_, a.num(), b.num());
        if (n.empty()) return zero();
        return RatFuncElem(std::move(n), a.den());
    }
    if (a.den() == b.den()) return normalize(lp_add(k_, a.num(), b.num()), a.den());
    auto n = lp_add(k_, lp_mul(k_, a.num(), b.den()), lp_mul(k_, b.num(), a.den()));
    return normalize(std::move(n), lp_mul(k_, a.den(), b.den()));
}

RatFuncElem RatFuncField::neg(const RatFuncElem& a) const {
    if (a.is_zero()) return a;
    return RatFuncElem(lp_neg(k_, a.num()), a.den());
}

RatFuncElem RatFuncField::sub(const RatFuncElem& a, const RatFuncElem& b) const { return add(a, neg(b)); }

RatFuncElem RatFuncField::mul(const RatFuncElem& a, const RatFuncElem& b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    if (lp_is_one(k_, a.den()) && lp_is_one(k_, b.den()))
        return RatFuncElem(lp_mul(k_, a.num(), b.num()), a.den());
    return normalize(lp_mul(k_, a.num(), b.num()), lp_mul(k_, a.den(), b.den()));
}

RatFuncElem RatFuncField::inv(const RatFuncElem& a) const {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return normalize(a.den(), a.num());
}

Value RatFuncField::value(const RatFuncElem& a) const {
    if (a.is_zero()) return Value::infinity();
    return OGroupElem::scalar(a.num().begin()->first);
}

ResidueElem RatFuncField::residue(const RatFuncElem& a) const {
    Value v = value(a);
    if (v.is_infinite() || v.elem().sign() != 0)
        throw Error(ErrorKind::NonUnitValue, "residue needs value 0, got " + v.to_string());
    return k_.div(a.num().begin()->second, a.den().begin()->second);
}

std::string RatFuncField::laurent_to_string(const LaurentPoly& f) const {
    std::string out;
    for (const auto& [e, c] : f) {
        if (!out.empty()) out += " + ";
        out += coeff_times(k_.to_string(c), k_.is_one(c), monomial_text(OGroupElem::scalar(e)));
    }
    return out.empty() ? "0" : out;
}

std::string RatFuncField::to_string(const RatFuncElem& a) const {
    if (a.is_zero()) return "0";
    if (lp_is_one(k_, a.den())) return laurent_to_string(a.num());
    return "(" + laurent_to_string(a.num()) + ")/(" + laurent_to_string(a.den()) + ")";
}

std::string RatFuncField::name() const {
    std::string base = k_.name();
    if (!level_) return base + "(t^(1/" + std::to_string(k_.characteristic()) + "^inf))";
    if (*level_ == 0) return base + "(t)";
    return base + "(t^(1/" + std::to_string(k_.characteristic()) + "^" + std::to_string(*level_) + "))";
}

RatFuncField RatFuncField::lifted(int levels) const {
    if (!k_.is_finite()) throw Error(ErrorKind::UnsupportedField, "perfect hull lift needs residue characteristic p");
    if (!level_) return *this;
    if (levels < *level_)
        throw Error(ErrorKind::SemanticError, "lift level " + std::to_string(levels) + " below current level");
    return RatFuncField(k_, levels);
}

}  // namespace tamefield
