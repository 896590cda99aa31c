#pragma once

#include "tamefield/valfield.hpp"

#include <map>
#include <string>
#include <vector>

namespace tamefield {

/// Values for x_1..x_r and a count of residue-transcendental y_1..y_s over K.
/// The x values live in `ambient`, a lex group in which vK occupies the
/// `rank(vK)` coordinates starting at `k_offset`.
struct GaussAssignment {
    ValuedField base;
    OGroupDesc ambient;
    std::size_t k_offset = 0;
    std::vector<OGroupElem> x_vals;
    int y_count = 0;

    /// ambient = Z^r x vK with vx_i the i-th unit vector.
    static GaussAssignment standard(const ValuedField& K, int x_count, int y_count);

    /// vK inside the ambient group.
    OGroupElem embed(const OGroupElem& vk) const;
    /// Q-basis of Q (x) vK inside the ambient group.
    std::vector<OGroupElem> base_span() const;
};

/// Checks ambient/base compatibility and rational independence; throws
/// DimensionMismatch or DependentValues.
void gauss_validate(const GaussAssignment& A);

/// Exponents of x_1..x_r then y_1..y_s. x exponents may be negative.
using MonoExp = std::vector<long>;

/// Sum of c_k x^mu_k y^nu_k with distinct exponent tuples and nonzero coefficients.
struct MPoly {
    int nx = 0;
    int ny = 0;
    std::map<MonoExp, Element> terms;
};

/// Collects like terms and drops exact zeros. y exponents must be >= 0.
MPoly mpoly_make(const ValuedField& K, int nx, int ny, const std::vector<std::pair<MonoExp, Element>>& terms);
MPoly mpoly_add(const ValuedField& K, const MPoly& f, const MPoly& g);
MPoly mpoly_mul(const ValuedField& K, const MPoly& f, const MPoly& g);
std::string mpoly_to_string(const ValuedField& K, const MPoly& f);

/// min over monomials of v(c) + sum mu_i vx_i, in the ambient group.
Value gauss_value(const GaussAssignment& A, const MPoly& f);

/// A polynomial over Kv in Y_1..Y_s.
using ResidueMPoly = std::map<std::vector<long>, ResidueElem>;

/// Residue of f in Kv[Y]: the monomials with mu = 0 and v(c) = 0.
/// Zero when gauss_value(f) > 0; NonUnitValue when it is negative.
ResidueMPoly gauss_residue(const GaussAssignment& A, const MPoly& f);

ResidueMPoly rmpoly_mul(const ResidueField& k, const ResidueMPoly& f, const ResidueMPoly& g);
ResidueElem rmpoly_eval(const ResidueField& k, const ResidueMPoly& f, const std::vector<ResidueElem>& ys);
std::string rmpoly_to_string(const ResidueField& k, const ResidueMPoly& f);

/// L | K data for the standard valuation transcendence basis check.
struct SvtbExtension {
    ValuedField L;
    /// Generators of vK inside vL (empty for a trivially valued K).
    std::vector<OGroupElem> vK_gens;
    /// trdeg Lv | Kv.
    int residue_trdeg = 0;
};

struct SvtbReport {
    bool ok = false;
    std::size_t value_dim = 0;  // dim_Q Q (x) vL/vK
    std::vector<OGroupElem> x_values;
    std::string reason;
};

/// x-part: elements of L whose values should form a maximal rationally
/// independent set over vK; y_count: residues claimed as a transcendence basis.
SvtbReport check_svtb(const SvtbExtension& ext, const std::vector<Element>& x_part, int y_count);

enum class WtdResult { EQUALITY, STRICT, VIOLATION };

std::string to_string(WtdResult r);

/// Compares trdeg with residue_trdeg + value_dim.
WtdResult wtd_check(int trdeg, int residue_trdeg, int value_dim);

}  // namespace tamefield
