#include "tamefield/hensel.hpp"
#include "tamefield/error.hpp"

#include <algorithm>

namespace tamefield {

namespace {

bool integral(const ValuedField& K, const Element& a) {
    Value v = K.value_bound(a);
    return v.is_infinite() || v.elem().sign() >= 0;
}

Value safe_value(const ValuedField& K, const Element& a) { return K.value_bound(a); }

}  // namespace

HenselResult hensel_lift(const ValuedField& K, const PolyOverK& f, const Element& y0, const OGroupElem& target,
                         int max_iterations) {
    if (f.coeffs.empty()) throw Error(ErrorKind::PreconditionFailed, "f is the zero polynomial");
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        if (!integral(K, f.coeffs[i]))
            throw Error(ErrorKind::PreconditionFailed,
                        "coefficient of X^" + std::to_string(i) + " has negative value (need v(coeffs) >= 0)");
    if (!integral(K, y0)) throw Error(ErrorKind::PreconditionFailed, "start value y0 has negative value");

    const PolyOverK df = kp_derivative(K, f);
    HenselResult out;
    Element z = K.exact_part(y0);

    auto record = [&](int it, const Element& r, const Element& d) {
        out.trace.push_back({it, z, safe_value(K, r), safe_value(K, d)});
    };

    Element r = kp_eval(K, f, z, target);
    Element d = kp_eval(K, df, z, target);
    Value vr = safe_value(K, r);
    if (!vr.is_infinite() && vr.elem().sign() <= 0)
        throw Error(ErrorKind::PreconditionFailed, "v(f(y0)) = " + vr.to_string() + " is not > 0");
    if (K.is_zero(d) || K.value(d).elem().sign() != 0)
        throw Error(ErrorKind::PreconditionFailed,
                    "v(f'(y0)) = " + safe_value(K, d).to_string() + " is not 0 (derivative must be a unit)");
    record(0, r, d);

    for (int it = 1;; ++it) {
        if (K.is_zero(r)) {
            auto cut = K.prec(r);
            if (!cut || !(*cut < target)) break;
            throw Error(ErrorKind::PrecisionExhausted,
                        "f(z) is only known below " + cut->to_string() + ", short of " + target.to_string());
        }
        if (it > max_iterations)
            throw Error(ErrorKind::PrecisionExhausted, "Newton iteration did not reach " + target.to_string() +
                                                           " within " + std::to_string(max_iterations) + " steps");
        const OGroupElem vrel = K.value(r).elem();
        if (!(vrel < target)) break;
        Element dinv = K.inv_to(d, target - vrel);
        Element delta = K.truncate(K.mul(r, dinv), target);
        z = K.exact_part(K.truncate(K.sub(z, delta), target));
        r = kp_eval(K, f, z, target);
        d = kp_eval(K, df, z, target);
        out.iterations = it;
        record(it, r, d);
    }
    out.root = z;
    return out;
}

NewtonPolygon newton_polygon(const ValuedField& K, const PolyOverK& f) {
    if (f.coeffs.empty()) throw Error(ErrorKind::InvalidElement, "the zero polynomial has no Newton polygon");
    NewtonPolygon np;
    std::size_t start = 0;
    while (start < f.coeffs.size() && K.is_zero(f.coeffs[start]) && K.is_exact(f.coeffs[start])) ++start;
    np.zero_root_multiplicity = static_cast<int>(start);

    std::vector<NewtonVertex> pts;
    std::vector<NewtonVertex> unknown;
    for (std::size_t i = start; i < f.coeffs.size(); ++i) {
        const auto& c = f.coeffs[i];
        if (K.is_zero(c)) {
            if (!K.is_exact(c)) {
                if (i == start || i + 1 == f.coeffs.size())
                    throw Error(ErrorKind::PrecisionLoss, "end coefficient of X^" + std::to_string(i) +
                                                              " is zero only up to precision");
                unknown.push_back({static_cast<int>(i), *K.prec(c)});
            }
            continue;
        }
        pts.push_back({static_cast<int>(i), K.value(c).elem()});
    }

    auto slope = [](const NewtonVertex& a, const NewtonVertex& b) { return (b.v - a.v) / Rational(b.i - a.i); };
    std::vector<NewtonVertex> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 && !(slope(hull[hull.size() - 2], hull.back()) < slope(hull.back(), pt)))
            hull.pop_back();
        hull.push_back(pt);
    }
    np.vertices = hull;
    for (std::size_t j = 0; j + 1 < hull.size(); ++j) {
        OGroupElem s = slope(hull[j], hull[j + 1]);
        np.segments.push_back({hull[j].i, hull[j + 1].i, s, -s});
    }
    for (const auto& u : unknown) {
        for (const auto& seg : np.segments) {
            if (u.i <= seg.start || u.i >= seg.end) continue;
            const auto& left = *std::find_if(hull.begin(), hull.end(), [&](const auto& h) { return h.i == seg.start; });
            OGroupElem on_hull = left.v + seg.slope * Rational(u.i - seg.start);
            if (!(on_hull < u.v))
                throw Error(ErrorKind::PrecisionLoss, "coefficient of X^" + std::to_string(u.i) +
                                                          " is zero only up to O(t^" + u.v.to_string() +
                                                          "), which does not clear the polygon");
        }
    }
    return np;
}

ASRoot as_root_in_field(const ValuedField& K, const Element& a_in, const std::optional<OGroupElem>& prec,
                        std::size_t max_steps) {
    const HahnField& H = K.hahn();
    const ResidueField& k = H.residue();
    const std::int64_t p = k.characteristic();
    if (p == 0) throw Error(ErrorKind::UnsupportedField, "Artin-Schreier roots need residue characteristic p > 0");
    const HahnSeries& a = std::get<HahnSeries>(a_in);

    OGroupElem P = prec ? *prec : H.default_prec();
    if (a.prec() && *a.prec() < P) P = *a.prec();
    const OGroupElem zero = H.group().zero();

    ASRoot out;
    out.prec = P;
    HahnSeries cur = H.exact_part(H.truncate(a, P));
    HahnSeries x = H.zero();

    // Negative support: c t^g with g < 0 is replaced by its p-th root image d = c^{1/p} t^{g/p},
    // since d^p - d absorbs c t^g and leaves -d at the larger value g/p.
    std::size_t steps = 0;
    while (!cur.terms().empty()) {
        const auto lead = cur.terms().front();
        if (!(lead.exp < zero) || !(lead.exp < P)) break;
        OGroupElem e = lead.exp / Rational(p);
        if (!H.group().contains(e)) {
            out.reason = "slope_not_in_group";
            out.certificate.push_back("lowest term exponent " + lead.exp.to_string() + " of a: " + e.to_string() +
                                      " is not in the value group, while v(x^p - x) = p*v(x) for v(x) < 0");
            out.residual_value = H.value_bound(cur);
            return out;
        }
        HahnSeries d = H.monomial(fq_pth_root(k, lead.coeff), e);
        out.certificate.push_back("strip " + H.to_string(H.monomial(lead.coeff, lead.exp)) + " with x += " +
                                  H.to_string(d));
        x = H.add(x, d);
        cur = H.exact_part(H.truncate(H.add(H.sub(cur, H.monomial(lead.coeff, lead.exp)), d), P));
        if (++steps > max_steps)
            throw Error(ErrorKind::PrecisionExhausted, "negative-support recursion exceeded " +
                                                           std::to_string(max_steps) + " steps");
    }

    if (zero < P) {
        auto c0 = cur.coeff_at(zero, k.zero());
        if (c0 && !k.is_zero(*c0)) {
            // Y^p - Y - c0 over the residue field
            ResiduePoly g(static_cast<std::size_t>(p) + 1, k.zero());
            g[0] = k.neg(*c0);
            g[1] = k.neg(k.one());
            g[static_cast<std::size_t>(p)] = k.add(g[static_cast<std::size_t>(p)], k.one());
            auto roots = fq_roots(k, g);
            if (roots.empty()) {
                out.reason = "residue_AS_irreducible";
                out.certificate.push_back("Y^p - Y - (" + k.to_string(*c0) + ") has no root in " + k.name());
                out.residual_value = H.value_bound(cur);
                return out;
            }
            out.certificate.push_back("residue root " + k.to_string(roots.front()) + " of Y^p - Y - (" +
                                      k.to_string(*c0) + ")");
            x = H.add(x, H.constant(roots.front()));
            cur = H.sub(cur, H.constant(*c0));
        }
        // Positive support: x_+ = -(b + b^p + b^{p^2} + ...), the k-th term having value p^k v(b).
        HahnSeries power = cur;
        int terms = 0;
        while (!power.terms().empty()) {
            x = H.sub(x, power);
            power = H.exact_part(H.truncate(H.frobenius(power), P));
            ++terms;
        }
        if (!cur.terms().empty())
            out.certificate.push_back("positive part: " + std::to_string(terms) + " Frobenius powers of value p^k*" +
                                      cur.terms().front().exp.to_string() + " until >= " + P.to_string());
    }

    OGroupElem root_prec = P < zero ? P / Rational(p) : P;
    out.root = HahnSeries(x.terms(), root_prec);
    HahnSeries residual = H.sub(H.sub(H.frobenius(x), x), H.exact_part(a));
    out.residual_value = H.value_bound(residual);
    return out;
}

}  // namespace tamefield
