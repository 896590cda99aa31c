#pragma once

#include "tamefield/hahn.hpp"
#include "tamefield/ratfunc.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace tamefield {

/// An element of either backend. Which alternative is valid depends on the field.
using Element = std::variant<HahnSeries, RatFuncElem>;

/// The lowest term c*t^exp of a nonzero element.
struct LeadingTerm {
    OGroupElem exp;
    ResidueElem coeff;
};

/// A valued field of equal characteristic: truncated Hahn series k((t^G))
/// or an exact rational function field k(t^{1/p^k}).
class ValuedField {
public:
    explicit ValuedField(HahnField f) : rep_(std::move(f)) {}
    explicit ValuedField(RatFuncField f) : rep_(std::move(f)) {}

    bool is_hahn() const { return std::holds_alternative<HahnField>(rep_); }
    const HahnField& hahn() const;
    const RatFuncField& ratfunc() const;

    const ResidueField& residue_field() const;
    /// Characteristic of K, equal to that of the residue field.
    std::int64_t characteristic() const { return residue_field().characteristic(); }
    /// p, or 1 in characteristic 0.
    std::int64_t char_exponent() const { return residue_field().char_exponent(); }
    bool maximal_by_construction() const { return is_hahn(); }

    /// Rank of the value group (1 for the rational function backend).
    std::size_t rank() const;
    /// The abstract value group. For k(t^{1/p^k}) with k > 0 this is Z, generated
    /// by `value_generator()` = 1/p^k inside Q.
    OGroupDesc value_group() const;
    OGroupElem value_generator() const;
    bool in_value_group(const OGroupElem& g) const;
    /// Least m >= 1 with m*g in vK, for g in the divisible hull of vK.
    Integer order_mod_value_group(const OGroupElem& g) const;
    /// g/p when it lies in vK.
    std::optional<OGroupElem> divide_in_value_group(const OGroupElem& g, std::int64_t n) const;

    std::optional<OGroupElem> default_prec() const;
    ValuedField with_default_prec(const OGroupElem& prec) const;

    Element zero() const;
    Element one() const;
    Element from_int(long n) const;
    Element constant(const ResidueElem& c) const;
    Element monomial(const ResidueElem& c, const OGroupElem& exp) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;
    /// Inverse known at least below `target` (exact for the rational function backend).
    Element inv_to(const Element& a, const OGroupElem& target) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    Element pow(const Element& a, unsigned n) const;
    Element frobenius(const Element& a) const;

    Value value(const Element& a) const;
    /// Never throws: the cutoff for zero-to-precision Hahn elements.
    Value value_bound(const Element& a) const;
    ResidueElem residue(const Element& a) const;
    /// Residue of an element of nonnegative value (zero when the value is positive).
    ResidueElem residue_integral(const Element& a) const;
    LeadingTerm leading_term(const Element& a) const;

    /// Hahn: drop terms >= cut. Rational functions are exact and returned unchanged.
    Element truncate(const Element& a, const OGroupElem& cut) const;
    Element exact_part(const Element& a) const;
    std::optional<OGroupElem> prec(const Element& a) const;
    bool is_exact(const Element& a) const { return !prec(a).has_value(); }
    /// Exact zero, or zero up to precision.
    bool is_zero(const Element& a) const;
    bool equal(const Element& a, const Element& b) const;
    bool contains(const Element& a) const;

    std::string to_string(const Element& a) const;
    std::string name() const;

    bool operator==(const ValuedField& other) const { return rep_ == other.rep_; }

private:
    std::variant<HahnField, RatFuncField> rep_;

    const HahnSeries& as_hahn(const Element& a) const;
    const RatFuncElem& as_rat(const Element& a) const;
};

using ValuedFieldDesc = ValuedField;

// Free-function names for the core operations.
Value vf_value(const ValuedField& K, const Element& x);
ResidueElem vf_residue(const ValuedField& K, const Element& x);

enum class ArithOp { ADD, MUL, INV, NEG, SUB };
Element vf_arith(const ValuedField& K, ArithOp op, const Element& x, const Element* y = nullptr);

/// k(t^{1/p^k}) from k(t^{1/p^j}), j <= k; elements embed unchanged.
/// UnsupportedBackend for Hahn fields.
ValuedField vf_perfect_hull_lift(const ValuedField& K, int levels);

}  // namespace tamefield
