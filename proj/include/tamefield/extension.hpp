#pragma once

#include "tamefield/hensel.hpp"
#include "tamefield/kpoly.hpp"

#include <string>
#include <vector>

namespace tamefield {

enum class Confidence { PROVED, INCONCLUSIVE };

std::string to_string(Confidence c);

/// What the analysis established about K[X]/(g).
enum class Outcome {
    ROOT_IN_K,    // the polynomial has a root in K (Artin-Schreier only)
    TOTAL,        // single Newton segment, irreducible residual polynomial
    RAMIFIED,     // Artin-Schreier: a residual value left p*vK
    UNRAMIFIED,   // Artin-Schreier: irreducible residue equation
    DEFECT,       // Artin-Schreier: self-similar residuals, immediate
    INSEPARABLE,  // X^p - c with c not a p-th power
    INCONCLUSIVE,
};

std::string to_string(Outcome o);

struct ExtensionReport {
    int n = 0;
    long e = 0;         // ramification index (0 = unknown)
    long f = 0;         // inertia degree (0 = unknown)
    long defect = 0;    // n / (e f) (0 = unknown)
    bool tame = false;
    bool purely_wild = false;
    bool defectless = false;
    bool immediate = false;
    bool residue_separable = false;
    Confidence confidence = Confidence::INCONCLUSIVE;
    Outcome outcome = Outcome::INCONCLUSIVE;
    std::vector<std::string> certificate;
    /// Artin-Schreier runs: v(x_k^p - x_k - a) after each correction.
    std::vector<OGroupElem> certificate_values;
    /// Artin-Schreier runs: the correction terms c t^g added to the approximation.
    std::vector<LeadingTerm> root_terms;

    std::vector<std::string> flags() const;
    bool proved() const { return confidence == Confidence::PROVED; }
};

struct ASOptions {
    int step_bound = 64;
    /// Number of residual values collected before a self-similar run is certified.
    int certificate_depth = 8;
};

/// Successive approximation for X^p - X - a.
ExtensionReport artin_schreier_analyze(const ValuedField& K, const Element& a, const ASOptions& opts = {});

/// e, f, d and flags for a monic polynomial g, via the Newton polygon and the
/// residual polynomial of its single segment; Artin-Schreier and inseparable
/// binomial shapes take dedicated paths.
/// Errors: NotSquarefree; UnsupportedShape (several segments, or a residual
/// polynomial with several distinct factors, i.e. g splits over a henselian K).
ExtensionReport analyze_extension(const ValuedField& K, const PolyOverK& g, const ASOptions& opts = {});

/// Coefficients of the residual polynomial of a single-segment g, and the data used.
struct ResidualPolynomial {
    OGroupElem root_value;
    Integer e0;     // order of root_value modulo vK
    int m = 0;      // n / e0
    ResiduePoly R;  // monic of degree m
};

ResidualPolynomial residual_polynomial(const ValuedField& K, const PolyOverK& g, const NewtonSegment& seg);

struct InequalityCheck {
    bool holds = false;     // n >= sum e_i f_i
    bool equality = false;  // defectless
};

InequalityCheck fundamental_inequality_check(const std::vector<ExtensionReport>& reports, int n);

/// d(M|K) = d(M|L) d(L|K), and defectless(M|K) iff both steps are.
bool defect_multiplicativity_check(const ExtensionReport& mk, const ExtensionReport& ml, const ExtensionReport& lk);

}  // namespace tamefield
