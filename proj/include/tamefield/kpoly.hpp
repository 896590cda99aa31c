#pragma once

#include "tamefield/valfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tamefield {

/// A univariate polynomial over a valued field, coefficients low degree first.
/// The leading coefficient is nonzero (zero polynomial = no coefficients).
struct PolyOverK {
    std::vector<Element> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Element& operator[](std::size_t i) const { return coeffs[i]; }
};

PolyOverK kp_make(const ValuedField& K, std::vector<Element> coeffs);
/// X - a.
PolyOverK kp_linear(const ValuedField& K, const Element& a);
PolyOverK kp_add(const ValuedField& K, const PolyOverK& f, const PolyOverK& g);
PolyOverK kp_sub(const ValuedField& K, const PolyOverK& f, const PolyOverK& g);
PolyOverK kp_mul(const ValuedField& K, const PolyOverK& f, const PolyOverK& g);
PolyOverK kp_derivative(const ValuedField& K, const PolyOverK& f);
bool kp_is_monic(const ValuedField& K, const PolyOverK& f);

/// Horner evaluation. With `cut`, every intermediate is truncated there.
Element kp_eval(const ValuedField& K, const PolyOverK& f, const Element& x,
                const std::optional<OGroupElem>& cut = std::nullopt);

/// The polynomial reduced coefficientwise to the residue field (all values >= 0 required).
ResiduePoly kp_residue(const ValuedField& K, const PolyOverK& f);

std::string kp_to_string(const ValuedField& K, const PolyOverK& f, const std::string& var = "X");

}  // namespace tamefield
