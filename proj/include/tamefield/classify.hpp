#pragma once

#include "tamefield/kpoly.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace tamefield {

enum class Verdict { YES, NO, UNKNOWN };

std::string to_string(Verdict v);

struct PropertyVerdict {
    Verdict verdict = Verdict::UNKNOWN;
    std::string reason;   // YES / UNKNOWN
    std::string witness;  // NO
};

/// Properties in a fixed report order.
inline const std::vector<std::string> kFieldProperties = {
    "henselian", "algebraically_maximal", "defectless",     "tame",
    "separably_tame", "kaplansky",        "perfect_residue", "p_divisible_value_group",
};

struct FieldClassification {
    std::map<std::string, PropertyVerdict> verdicts;

    const PropertyVerdict& operator[](const std::string& property) const { return verdicts.at(property); }
};

FieldClassification classify_field(const ValuedField& K);

PropertyVerdict kaplansky_check(const ValuedField& K);

namespace axiom {
struct V0 {
    Element x;
    std::vector<Element> ys;
};
struct VT {
    Element x;
    Element y;
};
struct HENS {
    PolyOverK f;
    Element y0;
};
struct MAXP {
    PolyOverK f;
    Element candidate;
    std::vector<Element> others;
};
struct VGD {
    std::int64_t p;
    Element x;
};
struct RFD {
    std::int64_t p;
    Element x;
};
}  // namespace axiom

using AxiomInstance = std::variant<axiom::V0, axiom::VT, axiom::HENS, axiom::MAXP, axiom::VGD, axiom::RFD>;

std::string axiom_name(const AxiomInstance& a);

struct AxiomVerdict {
    bool pass = false;
    std::string witness;  // the constructed y or z, when there is one
    std::string reason;
};

/// Evaluates one instance of an axiom scheme on concrete data.
/// InstanceIllFormed when the data do not fit the scheme.
AxiomVerdict check_axiom_instance(const ValuedField& K, const AxiomInstance& a);

}  // namespace tamefield
