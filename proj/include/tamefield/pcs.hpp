#pragma once

#include "tamefield/kpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tamefield {

/// Result of asking a generator for the next term.
struct PcsStep {
    std::optional<Element> next;
    /// Why there is no next term: "stabilized" (the last term is exact), or a reason such as
    /// "exponent_not_in_group".
    std::string stop_reason;
};

using PcsGenerator = std::function<PcsStep(const ValuedField&, const std::vector<Element>&)>;

struct PcsPrefix {
    std::vector<Element> terms;
    PcsGenerator generator;  // may be empty
    std::string generator_name;
};

/// a_nu = sum_{i <= nu} t^i (first coordinate), starting from a_0 = 1.
PcsPrefix pcs_geometric(const ValuedField& K, int steps);
/// Successive approximations to a root of X^p - X - a, starting from a_0 = 0.
PcsPrefix pcs_artin_schreier(const ValuedField& K, const Element& a, int steps);
/// Appends up to `count` generated terms; stops early when the generator does.
std::string pcs_extend(const ValuedField& K, PcsPrefix& prefix, int count);

struct PcsValidation {
    bool ok = false;
    /// First nu with a_{nu+1} = a_nu or v(a_{nu+1} - a_nu) <= v(a_nu - a_{nu-1}).
    std::optional<std::size_t> first_violation;
    std::vector<Value> gaps;  // v(a_{nu+1} - a_nu)
};

/// PreconditionFailed with fewer than 3 terms.
PcsValidation pcs_validate(const ValuedField& K, const std::vector<Element>& terms);

enum class PcsFitKind { FIXED, AFFINE, NONE };

std::string to_string(PcsFitKind k);

struct PcsFit {
    PcsFitKind kind = PcsFitKind::NONE;
    OGroupElem beta;
    Rational h;                // AFFINE only
    bool h_power_of_p = false; // AFFINE only
    std::size_t tail_start = 0;
};

struct PcsTrace {
    std::vector<Value> values;  // v(f(a_nu))
    std::vector<Value> gaps;    // v(a_{nu+1} - a_nu), one more term if a generator is present
    PcsFit fit;
};

/// Values of f along the prefix and the exact tail pattern: FIXED(beta) if the
/// last values agree, else AFFINE(beta, h) with v f(a_nu) = beta + h v(a_{nu+1} - a_nu)
/// over the longest exact tail. A fit needs 3 points; TailTooShort otherwise.
PcsTrace pcs_poly_trace(const ValuedField& K, const PcsPrefix& prefix, const PolyOverK& f);

/// True when every f gives FIXED: bounded evidence for transcendental type.
bool pcs_fixed_for_all(const ValuedField& K, const PcsPrefix& prefix, const std::vector<PolyOverK>& fs);

struct PcsLimit {
    std::optional<Element> limit;  // known modulo O(t^{gap}) unless exact
    std::string reason;            // set when there is no limit in K
    std::size_t index = 0;         // nu with v(limit - a_nu) >= prec
};

/// Extends the sequence until a gap reaches `prec` (default: the field's) and returns
/// a_nu truncated below that gap. Hahn fields only. PrecisionExhausted after max_steps.
PcsLimit pcs_limit_in_field(const ValuedField& K, PcsPrefix prefix, const std::optional<OGroupElem>& prec = std::nullopt,
                            int max_steps = 4096);

}  // namespace tamefield
