#include "tamefield/kpoly.hpp"
#include "tamefield/error.hpp"

#include <algorithm>

namespace tamefield {

namespace {

void trim(const ValuedField& K, std::vector<Element>& c) {
    while (!c.empty() && K.is_zero(c.back()) && K.is_exact(c.back())) c.pop_back();
}

}  // namespace

PolyOverK kp_make(const ValuedField& K, std::vector<Element> coeffs) {
    for (const auto& c : coeffs)
        if (!K.contains(c)) throw Error(ErrorKind::InvalidElement, "coefficient does not belong to " + K.name());
    trim(K, coeffs);
    if (!coeffs.empty() && K.is_zero(coeffs.back()))
        throw Error(ErrorKind::PrecisionLoss, "leading coefficient is zero up to precision");
    return {std::move(coeffs)};
}

PolyOverK kp_linear(const ValuedField& K, const Element& a) { return {{K.neg(a), K.one()}}; }

PolyOverK kp_add(const ValuedField& K, const PolyOverK& f, const PolyOverK& g) {
    std::vector<Element> out(std::max(f.coeffs.size(), g.coeffs.size()), K.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) out[i] = f.coeffs[i];
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) out[i] = K.add(out[i], g.coeffs[i]);
    trim(K, out);
    return {std::move(out)};
}

PolyOverK kp_sub(const ValuedField& K, const PolyOverK& f, const PolyOverK& g) {
    PolyOverK neg;
    for (const auto& c : g.coeffs) neg.coeffs.push_back(K.neg(c));
    return kp_add(K, f, neg);
}

PolyOverK kp_mul(const ValuedField& K, const PolyOverK& f, const PolyOverK& g) {
    if (f.coeffs.empty() || g.coeffs.empty()) return {};
    std::vector<Element> out(f.coeffs.size() + g.coeffs.size() - 1, K.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs.size(); ++j)
            out[i + j] = K.add(out[i + j], K.mul(f.coeffs[i], g.coeffs[j]));
    trim(K, out);
    return {std::move(out)};
}

PolyOverK kp_derivative(const ValuedField& K, const PolyOverK& f) {
    std::vector<Element> out;
    for (std::size_t i = 1; i < f.coeffs.size(); ++i)
        out.push_back(K.mul(K.from_int(static_cast<long>(i)), f.coeffs[i]));
    trim(K, out);
    return {std::move(out)};
}

bool kp_is_monic(const ValuedField& K, const PolyOverK& f) {
    return !f.coeffs.empty() && K.equal(f.coeffs.back(), K.one());
}

Element kp_eval(const ValuedField& K, const PolyOverK& f, const Element& x, const std::optional<OGroupElem>& cut) {
    Element acc = K.zero();
    for (std::size_t i = f.coeffs.size(); i-- > 0;) {
        acc = K.add(K.mul(acc, x), f.coeffs[i]);
        if (cut) acc = K.truncate(acc, *cut);
    }
    return acc;
}

ResiduePoly kp_residue(const ValuedField& K, const PolyOverK& f) {
    const auto& k = K.residue_field();
    ResiduePoly out;
    for (const auto& c : f.coeffs) out.push_back(K.residue_integral(c));
    poly::trim(k, out);
    return out;
}

std::string kp_to_string(const ValuedField& K, const PolyOverK& f, const std::string& var) {
    std::string out;
    for (std::size_t i = f.coeffs.size(); i-- > 0;) {
        const auto& c = f.coeffs[i];
        if (K.is_zero(c) && K.is_exact(c)) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string cs = K.to_string(c);
        std::string term;
        if (mono.empty())
            term = cs;
        else if (K.equal(c, K.one()))
            term = mono;
        else if (cs.find_first_of("+ ") != std::string::npos || cs.find('/') != std::string::npos)
            term = "(" + cs + ")*" + mono;
        else
            term = cs + "*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace tamefield
