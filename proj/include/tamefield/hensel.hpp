#pragma once

#include "tamefield/kpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tamefield {

struct HenselStep {
    int iteration;
    Element z;
    Value residual_value;    // v(f(z)), a lower bound once it reaches the target
    Value derivative_value;  // v(f'(z))
};

struct HenselResult {
    Element root;
    int iterations = 0;
    std::vector<HenselStep> trace;
};

/// Newton iteration z <- z - f(z)/f'(z) from y0 until v(f(z)) >= target.
/// Preconditions (each reported separately as PreconditionFailed):
/// coefficients and y0 integral, v(f(y0)) > 0, v(f'(y0)) = 0.
HenselResult hensel_lift(const ValuedField& K, const PolyOverK& f, const Element& y0, const OGroupElem& target,
                         int max_iterations = 64);

struct NewtonSegment {
    int start;               // abscissa of the left vertex
    int end;                 // abscissa of the right vertex
    OGroupElem slope;        // (v(a_end) - v(a_start)) / (end - start), in the divisible hull
    OGroupElem root_value;   // -slope
    int length() const { return end - start; }
};

struct NewtonVertex {
    int i;
    OGroupElem v;
};

struct NewtonPolygon {
    std::vector<NewtonVertex> vertices;
    std::vector<NewtonSegment> segments;
    int zero_root_multiplicity = 0;  // roots equal to 0, split off before the hull
};

/// Lower convex hull of {(i, v(a_i))}. PrecisionLoss if a coefficient that is
/// zero only up to precision could lie on or below the hull.
NewtonPolygon newton_polygon(const ValuedField& K, const PolyOverK& f);

/// A root of X^p - X - a in a Hahn field, with v(r^p - r - a) >= prec.
struct ASRoot {
    std::optional<Element> root;
    /// "slope_not_in_group" or "residue_AS_irreducible" when there is no root.
    std::string reason;
    OGroupElem prec;            // the precision actually targeted
    Value residual_value;       // v(r^p - r - a) computed exactly from the known terms
    std::vector<std::string> certificate;
};

ASRoot as_root_in_field(const ValuedField& K, const Element& a, const std::optional<OGroupElem>& prec = std::nullopt,
                        std::size_t max_steps = 4096);

}  // namespace tamefield
