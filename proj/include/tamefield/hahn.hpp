#pragma once

#include "tamefield/finfield.hpp"
#include "tamefield/ogroup.hpp"
#include "tamefield/value.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tamefield {

struct HahnTerm {
    OGroupElem exp;
    ResidueElem coeff;

    bool operator==(const HahnTerm&) const = default;
};

/// A truncated generalized power series: a finite, strictly increasing support
/// below the cutoff `prec`. No cutoff means the element is known exactly.
class HahnSeries {
public:
    HahnSeries() = default;
    HahnSeries(std::vector<HahnTerm> terms, std::optional<OGroupElem> prec)
        : terms_(std::move(terms)), prec_(std::move(prec)) {}

    const std::vector<HahnTerm>& terms() const { return terms_; }
    const std::optional<OGroupElem>& prec() const { return prec_; }

    bool is_exact() const { return !prec_.has_value(); }
    bool is_exact_zero() const { return terms_.empty() && is_exact(); }
    /// Empty support below a finite cutoff: zero only as far as we know.
    bool is_zero_to_precision() const { return terms_.empty() && !is_exact(); }

    /// The coefficient at `exp` (zero if absent), or nullopt if exp >= prec.
    std::optional<ResidueElem> coeff_at(const OGroupElem& exp, const ResidueElem& zero) const;

    bool operator==(const HahnSeries&) const = default;

private:
    std::vector<HahnTerm> terms_;
    std::optional<OGroupElem> prec_;
};

/// The field k((t^G)) with precision-tracking arithmetic.
class HahnField {
public:
    using Elem = HahnSeries;

    HahnField(ResidueField residue, OGroupDesc group, OGroupElem default_prec);

    const ResidueField& residue() const { return k_; }
    const OGroupDesc& group() const { return group_; }
    const OGroupElem& default_prec() const { return default_prec_; }
    HahnField with_default_prec(OGroupElem prec) const { return {k_, group_, std::move(prec)}; }

    /// Bound on geometric-series terms during inversion.
    std::size_t max_series_steps() const { return max_steps_; }
    void set_max_series_steps(std::size_t n) { max_steps_ = n; }

    /// Validates and normalizes: sorts, merges equal exponents, drops zeros and terms >= prec.
    HahnSeries make(std::vector<HahnTerm> terms, std::optional<OGroupElem> prec = std::nullopt) const;
    HahnSeries zero() const { return {}; }
    HahnSeries one() const { return constant(k_.one()); }
    HahnSeries from_int(long n) const { return constant(k_.from_int(n)); }
    HahnSeries constant(const ResidueElem& c) const;
    HahnSeries monomial(const ResidueElem& c, const OGroupElem& exp) const;
    HahnSeries zero_to(const OGroupElem& prec) const { return {{}, prec}; }

    HahnSeries add(const HahnSeries& a, const HahnSeries& b) const;
    HahnSeries sub(const HahnSeries& a, const HahnSeries& b) const;
    HahnSeries neg(const HahnSeries& a) const;
    HahnSeries mul(const HahnSeries& a, const HahnSeries& b) const;
    /// Exact for monomials; otherwise a geometric series to `default_prec`
    /// (exact input) or to prec - 2*v (truncated input).
    HahnSeries inv(const HahnSeries& a) const;
    HahnSeries inv_to(const HahnSeries& a, const OGroupElem& target) const;
    /// x^p with p the characteristic (coefficientwise Frobenius on the support).
    HahnSeries frobenius(const HahnSeries& a) const;

    /// Minimum of the support; INFINITY for exact zero; PrecisionLoss if zero to precision.
    Value value(const HahnSeries& a) const;
    /// Lower bound on the value that never throws (prec for zero-to-precision).
    Value value_bound(const HahnSeries& a) const;
    ResidueElem residue(const HahnSeries& a) const;

    /// Drops terms >= cut and lowers the cutoff to `cut`.
    HahnSeries truncate(const HahnSeries& a, const OGroupElem& cut) const;
    /// Forgets the cutoff: the known terms as an exact element.
    HahnSeries exact_part(const HahnSeries& a) const { return {a.terms(), std::nullopt}; }

    bool is_zero(const HahnSeries& a) const { return a.terms().empty(); }
    bool equal(const HahnSeries& a, const HahnSeries& b) const { return a == b; }
    bool contains(const HahnSeries& a) const;

    std::string to_string(const HahnSeries& a) const;
    /// "F(q)((t^G))".
    std::string name() const;

    bool operator==(const HahnField& other) const {
        return k_ == other.k_ && group_ == other.group_ && default_prec_ == other.default_prec_;
    }

private:
    ResidueField k_;
    OGroupDesc group_;
    OGroupElem default_prec_;
    std::size_t max_steps_ = 4096;
};

/// Shared exponent formatting: "t", "t^2", "t^(-1/2)", "t^(1, 0)".
std::string monomial_text(const OGroupElem& exp);
std::string coeff_times(const std::string& coeff, bool coeff_is_one, const std::string& mono);

}  // namespace tamefield
