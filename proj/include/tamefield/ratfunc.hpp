#pragma once

#include "tamefield/finfield.hpp"
#include "tamefield/ogroup.hpp"
#include "tamefield/value.hpp"

#include <map>
#include <optional>
#include <string>

namespace tamefield {

/// Sparse Laurent polynomial in t with rational exponents; zero coefficients are never stored.
using LaurentPoly = std::map<Rational, ResidueElem>;

/// An exact element num/den of k(t^{1/p^k}). Zero has empty num and den. Otherwise den has lowest
/// exponent 0 with coefficient 1, and num, den share no common factor.
class RatFuncElem {
public:
    RatFuncElem() = default;  // zero
    RatFuncElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    bool operator==(const RatFuncElem&) const = default;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

/// k(t), k(t^{1/p^k}) or the perfect hull k(t^{1/p^inf}) with the t-adic
/// monomial valuation.
class RatFuncField {
public:
    using Elem = RatFuncElem;

    /// `level`: 0 for k(t), k for k(t^{1/p^k}), nullopt for the perfect hull.
    RatFuncField(ResidueField residue, std::optional<int> level);

    const ResidueField& residue() const { return k_; }
    const std::optional<int>& level() const { return level_; }
    bool is_perfect_hull() const { return !level_.has_value(); }

    /// True when q may occur as an exponent (denominator divides p^level).
    bool exponent_allowed(const Rational& q) const;
    /// The value group as a descriptor: Z (level 0), Z[1/p] (perfect hull), or
    /// Z for (1/p^k)Z with generator `value_generator()`.
    OGroupDesc value_group() const;
    Rational value_generator() const;

    RatFuncElem make(LaurentPoly num, LaurentPoly den) const;
    RatFuncElem make(LaurentPoly num) const;
    RatFuncElem zero() const { return {}; }
    RatFuncElem one() const { return constant(k_.one()); }
    RatFuncElem from_int(long n) const { return constant(k_.from_int(n)); }
    RatFuncElem constant(const ResidueElem& c) const;
    RatFuncElem monomial(const ResidueElem& c, const Rational& exp) const;

    RatFuncElem add(const RatFuncElem& a, const RatFuncElem& b) const;
    RatFuncElem sub(const RatFuncElem& a, const RatFuncElem& b) const;
    RatFuncElem neg(const RatFuncElem& a) const;
    RatFuncElem mul(const RatFuncElem& a, const RatFuncElem& b) const;
    RatFuncElem inv(const RatFuncElem& a) const;

    Value value(const RatFuncElem& a) const;
    ResidueElem residue(const RatFuncElem& a) const;

    bool is_zero(const RatFuncElem& a) const { return a.is_zero(); }
    bool equal(const RatFuncElem& a, const RatFuncElem& b) const { return a == b; }
    bool contains(const RatFuncElem& a) const;

    std::string to_string(const RatFuncElem& a) const;
    std::string name() const;

    /// The same field with room for exponent denominators up to p^levels.
    RatFuncField lifted(int levels) const;

    bool operator==(const RatFuncField& other) const { return k_ == other.k_ && level_ == other.level_; }

private:
    ResidueField k_;
    std::optional<int> level_;

    RatFuncElem normalize(LaurentPoly num, LaurentPoly den) const;
    std::string laurent_to_string(const LaurentPoly& f) const;
};

}  // namespace tamefield
