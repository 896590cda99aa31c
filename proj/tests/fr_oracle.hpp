#pragma once

#include "tamefield/doag.hpp"

#include <algorithm>

namespace tamefield::testing {

// Ferrante-Rackoff test points as an independent elimination: exists y B holds iff
// B holds at y = -inf, y = +inf, or at a midpoint (b_i + b_j)/2 of boundary points.
// Substitution of +-inf is decided per atom by the sign of the y coefficient.
inline FormulaPtr fr_substitute(const FormulaPtr& f, const std::string& y, const LinTerm* t, int infinity) {
    const auto& ch = f->children();
    switch (f->kind()) {
        case OGFormula::Kind::EQ:
        case OGFormula::Kind::LT: {
            const Rational c = f->term().coeff(y);
            if (c == 0) return f;
            LinTerm rest = f->term();
            rest.coeffs.erase(y);
            if (!t) {
                if (f->kind() == OGFormula::Kind::EQ) return OGFormula::truth(false);
                return OGFormula::truth(c * infinity < 0);
            }
            LinTerm s = rest + *t * c;
            return f->kind() == OGFormula::Kind::EQ ? OGFormula::eq(s) : OGFormula::lt(s);
        }
        case OGFormula::Kind::NOT: return OGFormula::negate(fr_substitute(ch[0], y, t, infinity));
        case OGFormula::Kind::AND:
        case OGFormula::Kind::OR: {
            std::vector<FormulaPtr> parts;
            for (const auto& c : ch) parts.push_back(fr_substitute(c, y, t, infinity));
            return f->kind() == OGFormula::Kind::AND ? OGFormula::conj(parts) : OGFormula::disj(parts);
        }
        case OGFormula::Kind::IMPLIES: return OGFormula::implies(fr_substitute(ch[0], y, t, infinity), fr_substitute(ch[1], y, t, infinity));
        default: return f;
    }
}

inline void fr_boundaries(const FormulaPtr& f, const std::string& y, std::vector<LinTerm>& out) {
    if (f->is_atom()) {
        const Rational c = f->term().coeff(y);
        if (c == 0) return;
        LinTerm rest = f->term();
        rest.coeffs.erase(y);
        LinTerm b = rest * Rational(-1 / c);
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    for (const auto& c : f->children()) fr_boundaries(c, y, out);
}

inline FormulaPtr fr_qe(const FormulaPtr& f) {
    const auto& ch = f->children();
    switch (f->kind()) {
        case OGFormula::Kind::NOT: return OGFormula::negate(fr_qe(ch[0]));
        case OGFormula::Kind::AND:
        case OGFormula::Kind::OR: {
            std::vector<FormulaPtr> parts;
            for (const auto& c : ch) parts.push_back(fr_qe(c));
            return f->kind() == OGFormula::Kind::AND ? OGFormula::conj(parts) : OGFormula::disj(parts);
        }
        case OGFormula::Kind::IMPLIES: return OGFormula::implies(fr_qe(ch[0]), fr_qe(ch[1]));
        case OGFormula::Kind::EXISTS:
        case OGFormula::Kind::FORALL: {
            const bool all = f->kind() == OGFormula::Kind::FORALL;
            FormulaPtr body = fr_qe(ch[0]);
            if (all) body = OGFormula::negate(body);
            std::vector<LinTerm> bs;
            fr_boundaries(body, f->var(), bs);
            std::vector<FormulaPtr> cases{fr_substitute(body, f->var(), nullptr, -1),
                                          fr_substitute(body, f->var(), nullptr, 1)};
            for (std::size_t i = 0; i < bs.size(); ++i)
                for (std::size_t j = i; j < bs.size(); ++j) {
                    LinTerm m = (bs[i] + bs[j]) * Rational(1, 2);
                    cases.push_back(fr_substitute(body, f->var(), &m, 0));
                }
            FormulaPtr ex = OGFormula::disj(cases);
            return all ? OGFormula::negate(ex) : ex;
        }
        default: return f;
    }
}

}  // namespace tamefield::testing
