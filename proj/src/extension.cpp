#include "tamefield/extension.hpp"
#include "tamefield/error.hpp"

#include <numeric>

namespace tamefield {

std::string to_string(Confidence c) { return c == Confidence::PROVED ? "PROVED" : "INCONCLUSIVE"; }

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::ROOT_IN_K: return "ROOT-IN-K";
        case Outcome::TOTAL: return "TOTAL";
        case Outcome::RAMIFIED: return "RAMIFIED";
        case Outcome::UNRAMIFIED: return "UNRAMIFIED";
        case Outcome::DEFECT: return "DEFECT";
        case Outcome::INSEPARABLE: return "INSEPARABLE";
        case Outcome::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

std::vector<std::string> ExtensionReport::flags() const {
    std::vector<std::string> out;
    if (tame) out.push_back("tame");
    if (purely_wild) out.push_back("purely_wild");
    if (defectless) out.push_back("defectless");
    if (immediate) out.push_back("immediate");
    if (residue_separable) out.push_back("residue_separable");
    return out;
}

namespace {

bool is_p_power(long e, std::int64_t p) {
    if (e < 1) return false;
    if (p <= 1) return e == 1;
    while (e % p == 0) e /= p;
    return e == 1;
}

void prove(ExtensionReport& r, std::int64_t p, long e, long f, long d, bool residue_separable, Outcome o) {
    r.e = e;
    r.f = f;
    r.defect = d;
    r.residue_separable = residue_separable;
    r.defectless = d == 1;
    r.immediate = e == 1 && f == 1;
    r.tame = std::gcd(e, static_cast<long>(p)) == 1 && residue_separable && d == 1;
    // Finite and rational residue fields have no proper purely inseparable extensions.
    r.purely_wild = is_p_power(e, p) && f == 1;
    r.confidence = Confidence::PROVED;
    r.outcome = o;
}

void root_in_k(ExtensionReport& r, std::int64_t p, const std::string& why) {
    r.n = 1;
    r.certificate.push_back(why);
    r.certificate.push_back("X^p - X - a splits over K; the extension is trivial");
    prove(r, p, 1, 1, 1, true, Outcome::ROOT_IN_K);
}

ResiduePoly as_residue_poly(const ResidueField& k, std::int64_t p, const ResidueElem& c) {
    ResiduePoly g(static_cast<std::size_t>(p) + 1, k.zero());
    g[0] = k.neg(c);
    g[1] = k.neg(k.one());
    g[static_cast<std::size_t>(p)] = k.add(g[static_cast<std::size_t>(p)], k.one());
    return g;
}

// sigma(y): exponents divided by p and coefficients replaced by p-th roots, when this stays in K.
std::optional<Element> sigma(const ValuedField& K, const Element& y) {
    const auto& k = K.residue_field();
    const Rational p(static_cast<long>(K.characteristic()));
    if (K.is_hahn()) {
        const auto& s = std::get<HahnSeries>(y);
        if (!s.is_exact()) return std::nullopt;
        std::vector<HahnTerm> terms;
        for (const auto& t : s.terms()) {
            OGroupElem e = t.exp / p;
            if (!K.in_value_group(e)) return std::nullopt;
            terms.push_back({e, fq_pth_root(k, t.coeff)});
        }
        return K.hahn().make(std::move(terms));
    }
    const auto& r = std::get<RatFuncElem>(y);
    if (r.den().size() != 1) return std::nullopt;
    LaurentPoly num;
    for (const auto& [e, c] : r.num()) {
        Rational q = e / p;
        if (!K.ratfunc().exponent_allowed(q)) return std::nullopt;
        num.emplace(q, fq_pth_root(k, c));
    }
    return K.ratfunc().make(num);
}

bool negative_support(const ValuedField& K, const Element& y) {
    if (K.is_hahn()) {
        const auto& s = std::get<HahnSeries>(y);
        for (const auto& t : s.terms())
            if (t.exp.sign() >= 0) return false;
        return !s.terms().empty();
    }
    const auto& r = std::get<RatFuncElem>(y);
    if (r.is_zero() || r.den().size() != 1) return false;
    return r.num().rbegin()->first < 0;
}

std::string term_text(const ValuedField& K, const ResidueElem& c, const OGroupElem& e) {
    return K.to_string(K.monomial(c, e));
}

bool exactly_zero(const ValuedField& K, const Element& c) { return K.is_zero(c) && K.is_exact(c); }

// Degree of gcd(f, g) over K by Euclid; Hahn remainders that vanish to precision count as zero.
int gcd_degree(const ValuedField& K, PolyOverK a, PolyOverK b) {
    auto strip = [&](PolyOverK& h) {
        while (!h.coeffs.empty() && K.is_zero(h.coeffs.back())) h.coeffs.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.coeffs.empty()) {
        PolyOverK r = a;
        const Element lead_inv = K.inv(b.coeffs.back());
        while (r.degree() >= b.degree()) {
            const Element c = K.mul(r.coeffs.back(), lead_inv);
            const std::size_t shift = r.coeffs.size() - b.coeffs.size();
            for (std::size_t i = 0; i < b.coeffs.size(); ++i)
                r.coeffs[shift + i] = K.sub(r.coeffs[shift + i], K.mul(c, b.coeffs[i]));
            r.coeffs.pop_back();
            strip(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a.degree();
}

bool is_as_shape(const ValuedField& K, const PolyOverK& g) {
    const std::int64_t p = K.characteristic();
    if (p == 0 || g.degree() != p) return false;
    if (!K.equal(g.coeffs[1], K.neg(K.one()))) return false;
    for (int i = 2; i < p; ++i)
        if (!exactly_zero(K, g.coeffs[static_cast<std::size_t>(i)])) return false;
    return true;
}

bool is_p_binomial(const ValuedField& K, const PolyOverK& g) {
    const std::int64_t p = K.characteristic();
    if (p == 0 || g.degree() != p) return false;
    for (int i = 1; i < p; ++i)
        if (!exactly_zero(K, g.coeffs[static_cast<std::size_t>(i)])) return false;
    return true;
}

// X^p - c with c not known to be a p-th power.
ExtensionReport inseparable_binomial(const ValuedField& K, const Element& c, ExtensionReport rep) {
    const std::int64_t p = K.characteristic();
    std::vector<std::pair<OGroupElem, ResidueElem>> terms;
    bool exact = K.is_exact(c);
    if (K.is_hahn()) {
        for (const auto& t : std::get<HahnSeries>(c).terms()) terms.emplace_back(t.exp, t.coeff);
    } else {
        const auto& r = std::get<RatFuncElem>(c);
        if (K.ratfunc().is_perfect_hull())
            throw Error(ErrorKind::NotSquarefree, "K is perfect, so X^p - c = (X - c^(1/p))^p");
        if (r.den().size() != 1) {
            rep.certificate.push_back("inseparable binomial with a non-polynomial constant term is not analyzed");
            return rep;
        }
        for (const auto& [e, x] : r.num()) terms.emplace_back(OGroupElem::scalar(e), x);
    }
    for (const auto& [e, x] : terms) {
        if (K.in_value_group(e / Rational(p))) continue;
        rep.certificate.push_back("X^p - c: after removing p-th power terms of c, the lowest term " +
                                  term_text(K, x, e) + " has exponent with " + (e / Rational(p)).to_string() +
                                  " outside vK, so the root has value of order p modulo vK");
        prove(rep, p, p, 1, 1, true, Outcome::INSEPARABLE);
        return rep;
    }
    if (exact) throw Error(ErrorKind::NotSquarefree, "c is a p-th power in K, so X^p - c is a p-th power");
    rep.certificate.push_back("the known terms of c are p-th powers; precision too low to decide");
    return rep;
}

}  // namespace

ResidualPolynomial residual_polynomial(const ValuedField& K, const PolyOverK& g, const NewtonSegment& seg) {
    ResidualPolynomial out;
    out.root_value = seg.root_value;
    out.e0 = K.order_mod_value_group(seg.root_value);
    const int len = seg.length();
    if (Integer(len) % out.e0 != 0)
        throw Error(ErrorKind::InvalidElement, "segment length is not a multiple of the ramification candidate");
    out.m = static_cast<int>(len / out.e0.get_si());
    const long e0 = out.e0.get_si();
    const OGroupElem pi_value = seg.root_value * Rational(e0);
    const auto& k = K.residue_field();
    const Element& lead = g.coeffs[static_cast<std::size_t>(seg.end)];
    const Element lead_inv = K.inv(lead);
    for (int j = 0; j <= out.m; ++j) {
        const auto i = static_cast<std::size_t>(seg.start + j * e0);
        const Element& a = g.coeffs[i];
        if (exactly_zero(K, a)) {
            out.R.push_back(k.zero());
            continue;
        }
        // a_i / (a_end * pi^(m-j)) has value >= 0, with equality exactly on the segment
        Element scaled = K.mul(K.mul(a, lead_inv), K.monomial(k.one(), -(pi_value * Rational(out.m - j))));
        out.R.push_back(K.residue_integral(scaled));
    }
    poly::trim(k, out.R);
    return out;
}

ExtensionReport artin_schreier_analyze(const ValuedField& K, const Element& a, const ASOptions& opts) {
    const std::int64_t p = K.characteristic();
    if (p == 0) throw Error(ErrorKind::UnsupportedField, "Artin-Schreier extensions need characteristic p > 0");
    const auto& k = K.residue_field();
    ExtensionReport rep;
    rep.n = static_cast<int>(p);
    rep.certificate.push_back("X^p - X - a with a = " + K.to_string(a));

    Element cur = a;  // a - (x^p - x) for the current approximation x
    Element x = K.zero();
    bool self_similar = false;
    const OGroupElem zero = OGroupElem::zero(K.rank());

    for (int step = 1; step <= opts.step_bound; ++step) {
        if (K.is_zero(cur)) {
            if (K.is_exact(cur)) {
                root_in_k(rep, p, "x = " + K.to_string(x) + " satisfies x^p - x = a exactly");
                return rep;
            }
            const OGroupElem P = *K.prec(cur);
            if (zero < P) {
                root_in_k(rep, p, "a - (x^p - x) = O(t^" + P.to_string() +
                                      ") has positive value; Hensel's lemma applies (derivative -1 is a unit)");
                return rep;
            }
            rep.certificate.push_back("a - (x^p - x) is zero only up to O(t^" + P.to_string() + ")");
            return rep;
        }
        const LeadingTerm lt = K.leading_term(cur);
        const int s = lt.exp.sign();
        if (s < 0) {
            auto h = K.divide_in_value_group(lt.exp, p);
            if (!h) {
                rep.certificate.push_back("residual term " + term_text(K, lt.coeff, lt.exp) + ": " +
                                          (lt.exp / Rational(p)).to_string() +
                                          " is not in vK, so v(root - x) has order p modulo vK");
                rep.certificate.push_back("e = p, f = 1, d = 1");
                prove(rep, p, p, 1, 1, true, Outcome::RAMIFIED);
                return rep;
            }
            const ResidueElem root_c = fq_pth_root(k, lt.coeff);
            const Element d = K.monomial(root_c, *h);
            Element next = K.add(K.sub(cur, K.monomial(lt.coeff, lt.exp)), d);
            if (!self_similar && negative_support(K, cur)) {
                auto sc = sigma(K, cur);
                if (sc && K.equal(*sc, next)) {
                    self_similar = true;
                    rep.certificate.push_back("self-similar step: the new residual is sigma(" + K.to_string(cur) +
                                              "), sigma dividing exponents by p and taking p-th roots of "
                                              "coefficients; every later step repeats with values divided by p");
                }
            }
            x = K.add(x, d);
            rep.root_terms.push_back({*h, root_c});
            cur = std::move(next);
            rep.certificate_values.push_back(K.value_bound(cur).is_infinite() ? zero : K.value_bound(cur).elem());
            if (self_similar && static_cast<int>(rep.certificate_values.size()) >= opts.certificate_depth) {
                if (K.is_hahn()) {
                    root_in_k(rep, p,
                              "the approximations form a pseudo-Cauchy sequence with well-ordered support; the "
                              "Hahn field is maximal and contains its limit");
                    return rep;
                }
                if (K.ratfunc().is_perfect_hull()) {
                    rep.certificate.push_back(
                        "residual values strictly increase and stay below 0; every correction has value in vK and "
                        "residue in Kv, so e = f = 1 while no approximation is a root");
                    rep.certificate.push_back("n = p = e * f * d gives d = p");
                    prove(rep, p, 1, 1, p, true, Outcome::DEFECT);
                    return rep;
                }
            }
            continue;
        }
        if (s == 0) {
            auto roots = fq_roots(k, as_residue_poly(k, p, lt.coeff));
            if (roots.empty()) {
                rep.certificate.push_back("residue equation Y^p - Y = " + k.to_string(lt.coeff) + " has no root in " +
                                          k.name() + ": unramified of inertia degree p");
                prove(rep, p, 1, p, 1, true, Outcome::UNRAMIFIED);
                return rep;
            }
            x = K.add(x, K.constant(roots.front()));
            rep.root_terms.push_back({zero, roots.front()});
            cur = K.sub(cur, K.constant(lt.coeff));
            rep.certificate.push_back("residue root " + k.to_string(roots.front()) + " absorbs the constant term");
            rep.certificate_values.push_back(K.value_bound(cur).is_infinite() ? zero : K.value_bound(cur).elem());
            continue;
        }
        if (K.is_hahn()) {
            root_in_k(rep, p, "residual value " + lt.exp.to_string() +
                                  " > 0; Hensel's lemma applies in the henselian field K");
            return rep;
        }
        rep.certificate.push_back("residual value " + lt.exp.to_string() +
                                  " > 0: a root exists in the henselization, but K is not henselian");
        return rep;
    }
    rep.certificate.push_back("step bound " + std::to_string(opts.step_bound) + " reached");
    return rep;
}

ExtensionReport analyze_extension(const ValuedField& K, const PolyOverK& g, const ASOptions& opts) {
    const int n = g.degree();
    if (n < 1) throw Error(ErrorKind::PreconditionFailed, "g must have degree >= 1");
    if (!kp_is_monic(K, g)) throw Error(ErrorKind::PreconditionFailed, "g must be monic");
    const std::int64_t p = K.char_exponent();
    ExtensionReport rep;
    rep.n = n;
    rep.certificate.push_back("g = " + kp_to_string(K, g));
    if (n == 1) {
        rep.certificate.push_back("linear polynomial: trivial extension");
        prove(rep, p, 1, 1, 1, true, Outcome::TOTAL);
        return rep;
    }

    const NewtonPolygon np = newton_polygon(K, g);
    if (np.zero_root_multiplicity > 0)
        throw Error(ErrorKind::UnsupportedShape, "X divides g, so g is reducible");
    if (np.segments.size() != 1) {
        std::string vals;
        for (const auto& s : np.segments) vals += (vals.empty() ? "" : ", ") + s.root_value.to_string();
        throw Error(ErrorKind::UnsupportedShape,
                    "Newton polygon has " + std::to_string(np.segments.size()) + " segments (root values " + vals +
                        "); g factors over a henselian field");
    }
    const NewtonSegment& seg = np.segments.front();
    const ResidualPolynomial rp = residual_polynomial(K, g, seg);
    const auto& k = K.residue_field();
    rep.certificate.push_back("Newton polygon: one segment, root value " + seg.root_value.to_string());
    rep.certificate.push_back("order of the root value modulo vK: " + rp.e0.get_str());
    rep.certificate.push_back("residual polynomial R(Z) = " + poly_to_string(k, rp.R, "Z"));

    bool irreducible = false;
    int distinct = 0;
    if (rp.m == 1) {
        irreducible = true;
        distinct = 1;
    } else if (k.is_finite()) {
        auto fac = fq_poly_factor(k, rp.R);
        distinct = static_cast<int>(fac.factors.size());
        irreducible = distinct == 1 && fac.factors.front().multiplicity == 1;
    } else {
        // Over Q only linear factors are detected; a squarefree R with a rational root splits.
        bool has_root = false;
        // rational root test is not implemented; rely on separability only
        distinct = fq_is_separable(k, rp.R) ? 0 : 1;
        (void)has_root;
    }

    if (irreducible) {
        rep.certificate.push_back("R is irreducible of degree " + std::to_string(rp.m) + " over " + k.name() +
                                  ", so e >= " + rp.e0.get_str() + ", f >= " + std::to_string(rp.m) +
                                  " and e*f = n forces d = 1");
        prove(rep, p, rp.e0.get_si(), rp.m, 1, fq_is_separable(k, rp.R), Outcome::TOTAL);
        return rep;
    }
    if (distinct >= 2)
        throw Error(ErrorKind::UnsupportedShape, "residual polynomial has " + std::to_string(distinct) +
                                                     " distinct irreducible factors; g factors over a henselian field");
    if (!k.is_finite()) {
        rep.certificate.push_back("residual polynomial over Q is not certified irreducible");
        return rep;
    }

    // R is a power of one irreducible factor.
    if (is_as_shape(K, g)) {
        rep.certificate.push_back("R is a p-th power; g = X^p - X - a, continuing with Artin-Schreier approximation");
        ExtensionReport as = artin_schreier_analyze(K, K.neg(g.coeffs[0]), opts);
        as.certificate.insert(as.certificate.begin(), rep.certificate.begin(), rep.certificate.end());
        return as;
    }
    PolyOverK dg = kp_derivative(K, g);
    if (dg.coeffs.empty()) {
        if (is_p_binomial(K, g)) return inseparable_binomial(K, K.neg(g.coeffs[0]), rep);
        rep.certificate.push_back("inseparable polynomial of this shape is not analyzed");
        return rep;
    }
    if (gcd_degree(K, g, dg) > 0) throw Error(ErrorKind::NotSquarefree, "gcd(g, g') is nonconstant");
    rep.certificate.push_back("R has a repeated factor; the pipeline cannot separate e, f and d here");
    return rep;
}

InequalityCheck fundamental_inequality_check(const std::vector<ExtensionReport>& reports, int n) {
    long sum = 0;
    for (const auto& r : reports) sum += r.e * r.f;
    return {n >= sum, n == sum};
}

bool defect_multiplicativity_check(const ExtensionReport& mk, const ExtensionReport& ml, const ExtensionReport& lk) {
    if (!mk.proved() || !ml.proved() || !lk.proved())
        throw Error(ErrorKind::PreconditionFailed, "defect multiplicativity needs three PROVED reports");
    if (mk.defect != ml.defect * lk.defect) return false;
    return mk.defectless == (ml.defectless && lk.defectless);
}

}  // namespace tamefield
