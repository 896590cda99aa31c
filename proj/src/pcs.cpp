#include "tamefield/pcs.hpp"
#include "tamefield/error.hpp"

namespace tamefield {

namespace {

Element diff_exact(const ValuedField& K, const Element& a, const Element& b) { return K.sub(a, b); }

bool is_p_power(const Rational& h, std::int64_t p) {
    if (!is_integer(h) || h < 1) return false;
    Integer n = h.get_num();
    if (p <= 1) return n == 1;
    while (n % p == 0) n /= p;
    return n == 1;
}

std::optional<Rational> ratio(const OGroupElem& num, const OGroupElem& den) {
    std::optional<Rational> h;
    for (std::size_t i = 0; i < den.rank(); ++i)
        if (den[i] != 0) {
            h = num[i] / den[i];
            break;
        }
    if (!h || !(den * *h == num)) return std::nullopt;
    return h;
}

}  // namespace

std::string to_string(PcsFitKind k) {
    switch (k) {
        case PcsFitKind::FIXED: return "FIXED";
        case PcsFitKind::AFFINE: return "AFFINE";
        case PcsFitKind::NONE: return "NONE";
    }
    return "?";
}

std::string pcs_extend(const ValuedField& K, PcsPrefix& prefix, int count) {
    if (!prefix.generator) throw Error(ErrorKind::PreconditionFailed, "the sequence has no generator");
    for (int i = 0; i < count; ++i) {
        PcsStep s = prefix.generator(K, prefix.terms);
        if (!s.next) return s.stop_reason;
        prefix.terms.push_back(std::move(*s.next));
    }
    return "";
}

PcsPrefix pcs_geometric(const ValuedField& K, int steps) {
    PcsPrefix out;
    out.generator_name = "geometric";
    out.generator = [](const ValuedField& F, const std::vector<Element>& terms) -> PcsStep {
        if (terms.empty()) return {F.one(), ""};
        OGroupElem e = OGroupElem::unit(F.rank(), 0) * Rational(static_cast<long>(terms.size()));
        return {F.add(terms.back(), F.monomial(F.residue_field().one(), e)), ""};
    };
    pcs_extend(K, out, steps);
    return out;
}

PcsPrefix pcs_artin_schreier(const ValuedField& K, const Element& a, int steps) {
    const std::int64_t p = K.characteristic();
    if (p == 0) throw Error(ErrorKind::UnsupportedField, "Artin-Schreier sequences need characteristic p > 0");
    PcsPrefix out;
    out.generator_name = "artin-schreier:" + K.to_string(a);
    out.generator = [a, p](const ValuedField& F, const std::vector<Element>& terms) -> PcsStep {
        if (terms.empty()) return {F.zero(), ""};
        const Element& x = terms.back();
        Element cur = F.sub(a, F.sub(F.pow(x, static_cast<unsigned>(p)), x));
        if (F.is_zero(cur)) return {std::nullopt, F.is_exact(cur) ? "stabilized" : "precision"};
        const auto& k = F.residue_field();
        const LeadingTerm lt = F.leading_term(cur);
        const int s = lt.exp.sign();
        if (s < 0) {
            auto h = F.divide_in_value_group(lt.exp, p);
            if (!h) return {std::nullopt, "exponent_not_in_group"};
            return {F.add(x, F.monomial(fq_pth_root(k, lt.coeff), *h)), ""};
        }
        if (s == 0) {
            ResiduePoly g(static_cast<std::size_t>(p) + 1, k.zero());
            g[0] = k.neg(lt.coeff);
            g[1] = k.neg(k.one());
            g[static_cast<std::size_t>(p)] = k.add(g[static_cast<std::size_t>(p)], k.one());
            auto roots = fq_roots(k, g);
            if (roots.empty()) return {std::nullopt, "residue_AS_irreducible"};
            return {F.add(x, F.constant(roots.front())), ""};
        }
        // x^p - x is -x to first order for small x
        return {F.sub(x, F.monomial(lt.coeff, lt.exp)), ""};
    };
    pcs_extend(K, out, steps);
    return out;
}

PcsValidation pcs_validate(const ValuedField& K, const std::vector<Element>& terms) {
    if (terms.size() < 3) throw Error(ErrorKind::PreconditionFailed, "a pseudo-Cauchy check needs at least 3 terms");
    PcsValidation out;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        Element d = diff_exact(K, terms[i + 1], terms[i]);
        out.gaps.push_back(K.is_zero(d) && K.is_exact(d) ? Value::infinity() : K.value(d));
    }
    for (std::size_t i = 0; i < out.gaps.size(); ++i) {
        if (out.gaps[i].is_infinite() || (i > 0 && !(out.gaps[i - 1] < out.gaps[i]))) {
            out.first_violation = i;
            return out;
        }
    }
    out.ok = true;
    return out;
}

PcsTrace pcs_poly_trace(const ValuedField& K, const PcsPrefix& prefix, const PolyOverK& f) {
    PcsTrace out;
    std::vector<Element> terms = prefix.terms;
    if (prefix.generator) {
        PcsStep s = prefix.generator(K, terms);
        if (s.next) terms.push_back(std::move(*s.next));
    }
    const std::size_t m = prefix.terms.size();
    if (m < 3) throw Error(ErrorKind::TailTooShort, "need at least 3 terms to fit a tail pattern");
    for (std::size_t i = 0; i < m; ++i) {
        Element y = kp_eval(K, f, terms[i]);
        out.values.push_back(K.is_zero(y) && K.is_exact(y) ? Value::infinity() : K.value(y));
    }
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        Element d = K.sub(terms[i + 1], terms[i]);
        out.gaps.push_back(K.is_zero(d) && K.is_exact(d) ? Value::infinity() : K.value(d));
    }

    // FIXED: the value is constant over the last three or more terms
    std::size_t s = m - 1;
    if (!out.values[s].is_infinite()) {
        while (s > 0 && out.values[s - 1] == out.values[s]) --s;
        if (m - s >= 3) {
            out.fit.kind = PcsFitKind::FIXED;
            out.fit.beta = out.values.back().elem();
            out.fit.tail_start = s;
            return out;
        }
    }

    // AFFINE over points with both a value and a gap
    const std::size_t L = std::min(out.values.size(), out.gaps.size());
    if (L < 3) throw Error(ErrorKind::TailTooShort, "fewer than 3 terms with known gaps");
    auto finite = [&](std::size_t i) { return !out.values[i].is_infinite() && !out.gaps[i].is_infinite(); };
    if (!finite(L - 1) || !finite(L - 2)) return out;
    auto h = ratio(out.values[L - 1].elem() - out.values[L - 2].elem(), out.gaps[L - 1].elem() - out.gaps[L - 2].elem());
    if (!h) return out;
    const OGroupElem beta = out.values[L - 1].elem() - out.gaps[L - 1].elem() * *h;
    std::size_t start = L - 2;
    while (start > 0 && finite(start - 1) && out.values[start - 1].elem() == beta + out.gaps[start - 1].elem() * *h)
        --start;
    if (L - start < 3) return out;
    out.fit.kind = PcsFitKind::AFFINE;
    out.fit.beta = beta;
    out.fit.h = *h;
    out.fit.h_power_of_p = is_p_power(*h, K.char_exponent());
    out.fit.tail_start = start;
    return out;
}

bool pcs_fixed_for_all(const ValuedField& K, const PcsPrefix& prefix, const std::vector<PolyOverK>& fs) {
    for (const auto& f : fs)
        if (pcs_poly_trace(K, prefix, f).fit.kind != PcsFitKind::FIXED) return false;
    return true;
}

PcsLimit pcs_limit_in_field(const ValuedField& K, PcsPrefix prefix, const std::optional<OGroupElem>& prec,
                            int max_steps) {
    if (!K.is_hahn()) throw Error(ErrorKind::UnsupportedBackend, "limits are computed in Hahn fields");
    if (!prefix.generator) throw Error(ErrorKind::PreconditionFailed, "the sequence has no generator");
    const OGroupElem P = prec ? *prec : *K.default_prec();
    PcsLimit out;
    if (prefix.terms.empty()) {
        if (auto r = pcs_extend(K, prefix, 1); !r.empty()) {
            out.reason = r;
            return out;
        }
    }
    for (int step = 0; step <= max_steps; ++step) {
        const Element& last = prefix.terms.back();
        PcsStep s = prefix.generator(K, prefix.terms);
        if (!s.next) {
            if (s.stop_reason == "stabilized") {
                out.limit = last;
                out.index = prefix.terms.size() - 1;
            } else {
                out.reason = s.stop_reason;
            }
            return out;
        }
        Element d = K.sub(*s.next, last);
        if (K.is_zero(d)) {
            out.limit = last;
            out.index = prefix.terms.size() - 1;
            return out;
        }
        const OGroupElem gap = K.value(d).elem();
        if (!(gap < P)) {
            const Element known = K.exact_part(K.truncate(last, gap));
            out.limit = HahnSeries(std::get<HahnSeries>(known).terms(), gap);
            out.index = prefix.terms.size() - 1;
            return out;
        }
        prefix.terms.push_back(std::move(*s.next));
    }
    throw Error(ErrorKind::PrecisionExhausted,
                "differences did not reach " + P.to_string() + " within " + std::to_string(max_steps) + " steps");
}

}  // namespace tamefield
