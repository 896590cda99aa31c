#pragma once

#include "tamefield/ogroup.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace tamefield {

/// sum c_i x_i with exact coefficients; zero coefficients are never stored.
struct LinTerm {
    std::map<std::string, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Rational coeff(const std::string& var) const;
    LinTerm operator+(const LinTerm& o) const;
    LinTerm operator-(const LinTerm& o) const;
    LinTerm operator*(const Rational& k) const;
    bool operator==(const LinTerm&) const = default;
    auto operator<=>(const LinTerm& o) const { return coeffs <=> o.coeffs; }
};

std::string to_string(const LinTerm& t);

class OGFormula;
using FormulaPtr = std::shared_ptr<const OGFormula>;

/// Formulas of ordered groups: atoms t = 0 and t < 0, connectives, quantifiers.
class OGFormula {
public:
    enum class Kind { TRUE, FALSE, EQ, LT, NOT, AND, OR, IMPLIES, FORALL, EXISTS };

    static FormulaPtr truth(bool v);
    static FormulaPtr eq(LinTerm t);  // t = 0
    static FormulaPtr lt(LinTerm t);  // t < 0
    static FormulaPtr negate(FormulaPtr a);
    static FormulaPtr conj(std::vector<FormulaPtr> parts);
    static FormulaPtr disj(std::vector<FormulaPtr> parts);
    static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
    static FormulaPtr forall(std::string var, FormulaPtr body);
    static FormulaPtr exists(std::string var, FormulaPtr body);

    Kind kind() const { return kind_; }
    const LinTerm& term() const { return term_; }
    const std::string& var() const { return var_; }
    const std::vector<FormulaPtr>& children() const { return children_; }

    bool is_atom() const { return kind_ == Kind::EQ || kind_ == Kind::LT; }
    bool is_quantifier() const { return kind_ == Kind::FORALL || kind_ == Kind::EXISTS; }
    bool quantifier_free() const;
    int quantifier_depth() const;
    std::set<std::string> free_vars() const;

    bool operator==(const OGFormula& o) const;

private:
    Kind kind_ = Kind::TRUE;
    LinTerm term_;
    std::string var_;
    std::vector<FormulaPtr> children_;
};

/// Grammar in GRAMMAR.md: `forall x exists y (y + y = x)`, `&`, `|`, `!`, `->`,
/// comparisons `< <= = != >= >`, terms like `2*x - y` (no constants besides 0).
/// SyntaxError / SemanticError carry line and column.
FormulaPtr parse_formula(const std::string& text);
std::string to_string(const FormulaPtr& f);

/// An equivalent quantifier-free formula over nontrivial divisible ordered
/// abelian groups, by Fourier-Motzkin elimination of the innermost quantifiers.
/// Atoms come out with coprime integer coefficients.
FormulaPtr doag_qe(const FormulaPtr& f);

/// Truth of a sentence in the theory of nontrivial divisible ordered abelian
/// groups; with nontrivial = false, truth in every divisible ordered abelian group
/// including {0}. NotClosed for free variables.
bool doag_decide_sentence(const FormulaPtr& f, bool nontrivial = true);

/// Value of a quantifier-free formula at a rational assignment.
bool og_eval_qf(const FormulaPtr& f, const std::map<std::string, Rational>& assignment);

struct OGEvaluation {
    bool value = false;
    /// True when every quantifier was decided exactly (divisible or trivial groups, or
    /// only innermost quantifiers); false when outer quantifiers ranged over sample elements.
    bool exact = false;
};

inline constexpr int kOGEvalDepth = 3;

/// Direct interpretation of a sentence in a lex product of Z, Q, Z[1/S]:
/// innermost quantifiers exactly, outer ones over a finite set of sample elements.
/// Divisible groups go through doag_decide_sentence unless `use_theory` is false.
/// DepthBoundExceeded beyond kOGEvalDepth nested quantifiers.
OGEvaluation og_evaluate(const OGroupDesc& g, const FormulaPtr& sentence, bool use_theory = true);

struct SentenceEquivalence {
    enum class Kind { PROVED_EQUIVALENT, EQUIVALENT_ON_BATTERY, DISTINGUISHED } kind;
    FormulaPtr witness;  // DISTINGUISHED
    bool value1 = false;
    bool value2 = false;
    std::string reason;
};

std::string to_string(SentenceEquivalence::Kind k);

SentenceEquivalence og_sentence_equiv(const OGroupDesc& g1, const OGroupDesc& g2, const std::vector<FormulaPtr>& battery);

}  // namespace tamefield
