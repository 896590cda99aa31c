#include "tamefield/valfield.hpp"
#include "tamefield/error.hpp"

namespace tamefield {

namespace {

Integer p_power(std::int64_t p, int k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

const Rational& scalar_of(const OGroupElem& g) {
    if (g.rank() != 1) throw Error(ErrorKind::DimensionMismatch, "rational function fields have rank-1 values");
    return g[0];
}

}  // namespace

const HahnField& ValuedField::hahn() const {
    if (!is_hahn()) throw Error(ErrorKind::UnsupportedBackend, "expected a Hahn series field");
    return std::get<HahnField>(rep_);
}

const RatFuncField& ValuedField::ratfunc() const {
    if (is_hahn()) throw Error(ErrorKind::UnsupportedBackend, "expected a rational function field");
    return std::get<RatFuncField>(rep_);
}

const HahnSeries& ValuedField::as_hahn(const Element& a) const {
    if (!std::holds_alternative<HahnSeries>(a))
        throw Error(ErrorKind::InvalidElement, "element does not belong to " + name());
    return std::get<HahnSeries>(a);
}

const RatFuncElem& ValuedField::as_rat(const Element& a) const {
    if (!std::holds_alternative<RatFuncElem>(a))
        throw Error(ErrorKind::InvalidElement, "element does not belong to " + name());
    return std::get<RatFuncElem>(a);
}

const ResidueField& ValuedField::residue_field() const {
    return is_hahn() ? hahn().residue() : ratfunc().residue();
}

std::size_t ValuedField::rank() const { return is_hahn() ? hahn().group().rank() : 1; }

OGroupDesc ValuedField::value_group() const { return is_hahn() ? hahn().group() : ratfunc().value_group(); }

OGroupElem ValuedField::value_generator() const {
    if (is_hahn()) throw Error(ErrorKind::UnsupportedBackend, "Hahn value groups need not be cyclic");
    return OGroupElem::scalar(ratfunc().value_generator());
}

bool ValuedField::in_value_group(const OGroupElem& g) const {
    if (is_hahn()) return hahn().group().contains(g);
    return g.rank() == 1 && ratfunc().exponent_allowed(g[0]);
}

Integer ValuedField::order_mod_value_group(const OGroupElem& g) const {
    if (is_hahn()) return og_order_modulo(hahn().group(), g);
    const Rational& q = scalar_of(g);
    Integer den = q.get_den();
    const auto& F = ratfunc();
    const std::int64_t p = F.residue().characteristic();
    if (p == 0) return den;
    if (!F.level()) return strip_primes(den, {p});
    Integer allowed = p_power(p, *F.level());
    Integer g0;
    mpz_gcd(g0.get_mpz_t(), den.get_mpz_t(), allowed.get_mpz_t());
    return den / g0;
}

std::optional<OGroupElem> ValuedField::divide_in_value_group(const OGroupElem& g, std::int64_t n) const {
    OGroupElem h = g / Rational(n);
    if (in_value_group(h)) return h;
    return std::nullopt;
}

std::optional<OGroupElem> ValuedField::default_prec() const {
    if (is_hahn()) return hahn().default_prec();
    return std::nullopt;
}

ValuedField ValuedField::with_default_prec(const OGroupElem& prec) const {
    if (!is_hahn()) return *this;
    return ValuedField(hahn().with_default_prec(prec));
}

Element ValuedField::zero() const {
    if (is_hahn()) return hahn().zero();
    return ratfunc().zero();
}

Element ValuedField::one() const {
    if (is_hahn()) return hahn().one();
    return ratfunc().one();
}

Element ValuedField::from_int(long n) const {
    if (is_hahn()) return hahn().from_int(n);
    return ratfunc().from_int(n);
}

Element ValuedField::constant(const ResidueElem& c) const {
    if (is_hahn()) return hahn().constant(c);
    return ratfunc().constant(c);
}

Element ValuedField::monomial(const ResidueElem& c, const OGroupElem& exp) const {
    if (is_hahn()) return hahn().monomial(c, exp);
    return ratfunc().monomial(c, scalar_of(exp));
}

Element ValuedField::add(const Element& a, const Element& b) const {
    if (is_hahn()) return hahn().add(as_hahn(a), as_hahn(b));
    return ratfunc().add(as_rat(a), as_rat(b));
}

Element ValuedField::sub(const Element& a, const Element& b) const {
    if (is_hahn()) return hahn().sub(as_hahn(a), as_hahn(b));
    return ratfunc().sub(as_rat(a), as_rat(b));
}

Element ValuedField::neg(const Element& a) const {
    if (is_hahn()) return hahn().neg(as_hahn(a));
    return ratfunc().neg(as_rat(a));
}

Element ValuedField::mul(const Element& a, const Element& b) const {
    if (is_hahn()) return hahn().mul(as_hahn(a), as_hahn(b));
    return ratfunc().mul(as_rat(a), as_rat(b));
}

Element ValuedField::inv(const Element& a) const {
    if (is_hahn()) return hahn().inv(as_hahn(a));
    return ratfunc().inv(as_rat(a));
}

Element ValuedField::inv_to(const Element& a, const OGroupElem& target) const {
    if (is_hahn()) return hahn().inv_to(as_hahn(a), target);
    return ratfunc().inv(as_rat(a));
}

Element ValuedField::pow(const Element& a, unsigned n) const {
    Element result = one();
    Element base = a;
    while (n > 0) {
        if (n & 1U) result = mul(result, base);
        n >>= 1U;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

Element ValuedField::frobenius(const Element& a) const {
    if (is_hahn()) return hahn().frobenius(as_hahn(a));
    const auto& F = ratfunc();
    const auto& k = F.residue();
    const std::int64_t p = k.characteristic();
    if (p == 0) throw Error(ErrorKind::UnsupportedField, "Frobenius needs characteristic p > 0");
    const auto& x = as_rat(a);
    if (x.is_zero()) return x;
    auto lift = [&](const LaurentPoly& f) {
        LaurentPoly out;
        for (const auto& [e, c] : f) out.emplace(e * Rational(p), k.frobenius(c));
        return out;
    };
    return RatFuncElem(lift(x.num()), lift(x.den()));
}

Value ValuedField::value(const Element& a) const {
    if (is_hahn()) return hahn().value(as_hahn(a));
    return ratfunc().value(as_rat(a));
}

Value ValuedField::value_bound(const Element& a) const {
    if (is_hahn()) return hahn().value_bound(as_hahn(a));
    return ratfunc().value(as_rat(a));
}

ResidueElem ValuedField::residue(const Element& a) const {
    if (is_hahn()) return hahn().residue(as_hahn(a));
    return ratfunc().residue(as_rat(a));
}

ResidueElem ValuedField::residue_integral(const Element& a) const {
    Value v = value_bound(a);
    if (v.is_infinite() || v.elem().sign() > 0) return residue_field().zero();
    if (v.elem().sign() < 0 && !is_zero(a))
        throw Error(ErrorKind::NonUnitValue, "residue needs value >= 0, got " + v.to_string());
    return residue(a);
}

LeadingTerm ValuedField::leading_term(const Element& a) const {
    if (is_hahn()) {
        const auto& x = as_hahn(a);
        if (x.terms().empty()) {
            if (x.is_exact()) throw Error(ErrorKind::DivisionByZero, "zero has no leading term");
            throw Error(ErrorKind::PrecisionLoss, "zero up to precision has no leading term");
        }
        return {x.terms().front().exp, x.terms().front().coeff};
    }
    const auto& x = as_rat(a);
    if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero has no leading term");
    const auto& k = ratfunc().residue();
    return {OGroupElem::scalar(x.num().begin()->first),
            k.div(x.num().begin()->second, x.den().begin()->second)};
}

Element ValuedField::truncate(const Element& a, const OGroupElem& cut) const {
    if (is_hahn()) return hahn().truncate(as_hahn(a), cut);
    return as_rat(a);
}

Element ValuedField::exact_part(const Element& a) const {
    if (is_hahn()) return hahn().exact_part(as_hahn(a));
    return as_rat(a);
}

std::optional<OGroupElem> ValuedField::prec(const Element& a) const {
    if (is_hahn()) return as_hahn(a).prec();
    as_rat(a);
    return std::nullopt;
}

bool ValuedField::is_zero(const Element& a) const {
    if (is_hahn()) return hahn().is_zero(as_hahn(a));
    return as_rat(a).is_zero();
}

bool ValuedField::equal(const Element& a, const Element& b) const {
    if (is_hahn()) return as_hahn(a) == as_hahn(b);
    return as_rat(a) == as_rat(b);
}

bool ValuedField::contains(const Element& a) const {
    if (is_hahn()) return std::holds_alternative<HahnSeries>(a) && hahn().contains(std::get<HahnSeries>(a));
    return std::holds_alternative<RatFuncElem>(a) && ratfunc().contains(std::get<RatFuncElem>(a));
}

std::string ValuedField::to_string(const Element& a) const {
    if (is_hahn()) return hahn().to_string(as_hahn(a));
    return ratfunc().to_string(as_rat(a));
}

std::string ValuedField::name() const { return is_hahn() ? hahn().name() : ratfunc().name(); }

Value vf_value(const ValuedField& K, const Element& x) { return K.value(x); }

ResidueElem vf_residue(const ValuedField& K, const Element& x) { return K.residue(x); }

Element vf_arith(const ValuedField& K, ArithOp op, const Element& x, const Element* y) {
    auto need_y = [&]() -> const Element& {
        if (!y) throw Error(ErrorKind::InvalidElement, "binary operation needs two operands");
        return *y;
    };
    switch (op) {
        case ArithOp::ADD: return K.add(x, need_y());
        case ArithOp::SUB: return K.sub(x, need_y());
        case ArithOp::MUL: return K.mul(x, need_y());
        case ArithOp::NEG: return K.neg(x);
        case ArithOp::INV: return K.inv(x);
    }
    throw Error(ErrorKind::InvalidElement, "unknown operation");
}

ValuedField vf_perfect_hull_lift(const ValuedField& K, int levels) {
    if (K.is_hahn())
        throw Error(ErrorKind::UnsupportedBackend, "Hahn fields are lifted by choosing a p-divisible group");
    return ValuedField(K.ratfunc().lifted(levels));
}

}  // namespace tamefield
