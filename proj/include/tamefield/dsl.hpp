#pragma once

#include "tamefield/doag.hpp"
#include "tamefield/gauss.hpp"
#include "tamefield/kpoly.hpp"

#include <optional>
#include <string>
#include <variant>

namespace tamefield {

inline constexpr long kDefaultHahnPrec = 20;

/// "F(9)((t^Q))", "Q((t^Z x Z[1/2]))", "F(3)(t)", "F(3)(t^(1/3^2))", "F(3)(t^(1/3^inf))".
/// Hahn fields get default precision `prec` in the leading coordinate.
ValuedField parse_field(const std::string& text, const Rational& prec = Rational(kDefaultHahnPrec));

/// "Z", "Q", "Z[1/6]", "Q x Z", "0" (trivial).
OGroupDesc parse_group(const std::string& text);

/// Elements of K: integers, g (generator of F_q), t, t^(-1/2), t^(1, -1), O(t^5), + - * / ^ and parentheses.
Element parse_element(const ValuedField& K, const std::string& text);

/// Polynomials in X over K, e.g. "X^2 - X - t^(-1)".
PolyOverK parse_poly(const ValuedField& K, const std::string& text);

/// Polynomials in x1..x_nx (Laurent) and y1..y_ny over K. Negative counts are inferred
/// from the largest index used.
MPoly parse_mpoly(const ValuedField& K, const std::string& text, int nx = -1, int ny = -1);

enum class InputKind { Field, Group, Poly, Element, MPoly, Formula };

using ParsedValue = std::variant<ValuedField, OGroupDesc, PolyOverK, Element, MPoly, FormulaPtr>;

/// Dispatch on kind; poly, element and mpoly need the field `K` (PreconditionFailed otherwise).
ParsedValue parse_input(InputKind kind, const std::string& text, const ValuedField* K = nullptr);
std::string print_value(const ParsedValue& v, const ValuedField* K = nullptr);

InputKind input_kind_from_string(const std::string& name);

}  // namespace tamefield
