#include "tamefield/gauss.hpp"
#include "tamefield/error.hpp"

namespace tamefield {

GaussAssignment GaussAssignment::standard(const ValuedField& K, int x_count, int y_count) {
    std::vector<Atom> atoms(static_cast<std::size_t>(x_count), Atom::integers());
    OGroupDesc amb = OGroupDesc(atoms).times(K.value_group());
    // the rational function backend at level k > 0 reports Z generated by 1/p^k; use the coordinates it prints in
    if (!K.is_hahn() && !(K.value_generator() == OGroupElem::scalar(Rational(1))))
        amb = OGroupDesc(atoms).times(K.ratfunc().is_perfect_hull() ? K.value_group() : OGroupDesc::Q());
    GaussAssignment A{K, amb, static_cast<std::size_t>(x_count), {}, y_count};
    for (int i = 0; i < x_count; ++i) A.x_vals.push_back(OGroupElem::unit(amb.rank(), static_cast<std::size_t>(i)));
    return A;
}

OGroupElem GaussAssignment::embed(const OGroupElem& vk) const {
    std::vector<Rational> c(ambient.rank());
    for (std::size_t i = 0; i < vk.rank(); ++i) c[k_offset + i] = vk[i];
    return OGroupElem(c);
}

std::vector<OGroupElem> GaussAssignment::base_span() const {
    std::vector<OGroupElem> out;
    for (std::size_t i = 0; i < base.rank(); ++i) out.push_back(OGroupElem::unit(ambient.rank(), k_offset + i));
    return out;
}

void gauss_validate(const GaussAssignment& A) {
    if (A.k_offset + A.base.rank() > A.ambient.rank())
        throw Error(ErrorKind::DimensionMismatch, "vK does not fit into the ambient group at the given offset");
    for (const auto& x : A.x_vals) {
        if (x.rank() != A.ambient.rank())
            throw Error(ErrorKind::DimensionMismatch, "value " + x.to_string() + " has the wrong rank");
        A.ambient.require(x);
    }
    if (A.y_count < 0) throw Error(ErrorKind::DimensionMismatch, "negative y count");
    if (!og_rationally_independent(A.ambient, A.base_span(), A.x_vals))
        throw Error(ErrorKind::DependentValues, "the values vx_i are not rationally independent over vK");
}

namespace {

void check_shape(const MPoly& f, const MonoExp& e) {
    if (static_cast<int>(e.size()) != f.nx + f.ny)
        throw Error(ErrorKind::DimensionMismatch, "exponent tuple has " + std::to_string(e.size()) +
                                                      " entries, expected " + std::to_string(f.nx + f.ny));
    for (int j = 0; j < f.ny; ++j)
        if (e[static_cast<std::size_t>(f.nx + j)] < 0)
            throw Error(ErrorKind::InvalidElement, "negative exponent of y" + std::to_string(j + 1));
}

void accumulate(const ValuedField& K, MPoly& f, const MonoExp& e, const Element& c) {
    auto it = f.terms.find(e);
    if (it == f.terms.end()) {
        if (!(K.is_zero(c) && K.is_exact(c))) f.terms.emplace(e, c);
        return;
    }
    it->second = K.add(it->second, c);
    if (K.is_zero(it->second) && K.is_exact(it->second)) f.terms.erase(it);
}

OGroupElem mu_part(const GaussAssignment& A, const MonoExp& e) {
    OGroupElem v = A.ambient.zero();
    for (std::size_t i = 0; i < A.x_vals.size(); ++i) v += A.x_vals[i] * Rational(e[i]);
    return v;
}

void check_poly(const GaussAssignment& A, const MPoly& f) {
    if (f.nx != static_cast<int>(A.x_vals.size()) || f.ny != A.y_count)
        throw Error(ErrorKind::DimensionMismatch, "polynomial variables do not match the assignment");
}

std::string var_power(const std::string& name, long e) {
    if (e == 1) return name;
    if (e < 0) return name + "^(" + std::to_string(e) + ")";
    return name + "^" + std::to_string(e);
}

}  // namespace

MPoly mpoly_make(const ValuedField& K, int nx, int ny, const std::vector<std::pair<MonoExp, Element>>& terms) {
    MPoly f{nx, ny, {}};
    for (const auto& [e, c] : terms) {
        check_shape(f, e);
        if (!K.contains(c)) throw Error(ErrorKind::InvalidElement, "coefficient is not in " + K.name());
        accumulate(K, f, e, c);
    }
    return f;
}

MPoly mpoly_add(const ValuedField& K, const MPoly& f, const MPoly& g) {
    if (f.nx != g.nx || f.ny != g.ny) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
    MPoly out = f;
    for (const auto& [e, c] : g.terms) accumulate(K, out, e, c);
    return out;
}

MPoly mpoly_mul(const ValuedField& K, const MPoly& f, const MPoly& g) {
    if (f.nx != g.nx || f.ny != g.ny) throw Error(ErrorKind::DimensionMismatch, "variable counts differ");
    MPoly out{f.nx, f.ny, {}};
    for (const auto& [e1, c1] : f.terms)
        for (const auto& [e2, c2] : g.terms) {
            MonoExp e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            accumulate(K, out, e, K.mul(c1, c2));
        }
    return out;
}

std::string mpoly_to_string(const ValuedField& K, const MPoly& f) {
    std::string out;
    for (const auto& [e, c] : f.terms) {
        std::string mono;
        for (int i = 0; i < f.nx + f.ny; ++i) {
            long k = e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            std::string name = i < f.nx ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - f.nx + 1);
            mono += (mono.empty() ? "" : "*") + var_power(name, k);
        }
        if (!out.empty()) out += " + ";
        out += coeff_times(K.to_string(c), K.equal(c, K.one()), mono);
    }
    return out.empty() ? "0" : out;
}

Value gauss_value(const GaussAssignment& A, const MPoly& f) {
    gauss_validate(A);
    check_poly(A, f);
    std::optional<OGroupElem> best;
    for (const auto& [e, c] : f.terms) {
        OGroupElem v = A.embed(A.base.value(c).elem()) + mu_part(A, e);
        if (!best || v < *best) best = v;
    }
    if (!best) return Value::infinity();
    return *best;
}

ResidueMPoly gauss_residue(const GaussAssignment& A, const MPoly& f) {
    const Value v = gauss_value(A, f);
    ResidueMPoly out;
    if (v.is_infinite() || v.elem().sign() > 0) return out;
    if (v.elem().sign() < 0) throw Error(ErrorKind::NonUnitValue, "gauss value " + v.to_string() + " is negative");
    const auto& k = A.base.residue_field();
    for (const auto& [e, c] : f.terms) {
        bool pure_y = true;
        for (int i = 0; i < f.nx; ++i) pure_y = pure_y && e[static_cast<std::size_t>(i)] == 0;
        if (!pure_y) continue;
        ResidueElem r = A.base.residue_integral(c);
        if (k.is_zero(r)) continue;
        out.emplace(std::vector<long>(e.begin() + f.nx, e.end()), r);
    }
    return out;
}

ResidueMPoly rmpoly_mul(const ResidueField& k, const ResidueMPoly& f, const ResidueMPoly& g) {
    ResidueMPoly out;
    for (const auto& [e1, c1] : f)
        for (const auto& [e2, c2] : g) {
            std::vector<long> e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            auto it = out.find(e);
            ResidueElem c = k.mul(c1, c2);
            if (it == out.end())
                out.emplace(e, c);
            else
                it->second = k.add(it->second, c);
        }
    for (auto it = out.begin(); it != out.end();) it = k.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

ResidueElem rmpoly_eval(const ResidueField& k, const ResidueMPoly& f, const std::vector<ResidueElem>& ys) {
    ResidueElem acc = k.zero();
    for (const auto& [e, c] : f) {
        if (e.size() != ys.size()) throw Error(ErrorKind::DimensionMismatch, "wrong number of residue values");
        ResidueElem term = c;
        for (std::size_t j = 0; j < e.size(); ++j) term = k.mul(term, k.pow(ys[j], static_cast<unsigned long>(e[j])));
        acc = k.add(acc, term);
    }
    return acc;
}

std::string rmpoly_to_string(const ResidueField& k, const ResidueMPoly& f) {
    std::string out;
    for (const auto& [e, c] : f) {
        std::string mono;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0) mono += (mono.empty() ? "" : "*") + var_power("Y" + std::to_string(j + 1), e[j]);
        if (!out.empty()) out += " + ";
        out += coeff_times(k.to_string(c), k.is_one(c), mono);
    }
    return out.empty() ? "0" : out;
}

SvtbReport check_svtb(const SvtbExtension& ext, const std::vector<Element>& x_part, int y_count) {
    SvtbReport rep;
    const OGroupDesc vL = ext.L.value_group();
    const std::size_t base_rank = og_q_rank(ext.vK_gens);
    rep.value_dim = vL.rank() - base_rank;
    for (const auto& x : x_part) {
        if (ext.L.is_zero(x)) {
            rep.reason = "zero has no value";
            return rep;
        }
        rep.x_values.push_back(ext.L.value(x).elem());
    }
    if (!og_rationally_independent(vL, ext.vK_gens, rep.x_values)) {
        rep.reason = "x values are not rationally independent over vK";
        return rep;
    }
    if (rep.x_values.size() != rep.value_dim) {
        rep.reason = "x values span " + std::to_string(rep.x_values.size()) + " of " +
                     std::to_string(rep.value_dim) + " rational dimensions of vL/vK";
        return rep;
    }
    if (y_count != ext.residue_trdeg) {
        rep.reason = std::to_string(y_count) + " residues cannot be a transcendence basis of a residue extension of "
                                               "transcendence degree " + std::to_string(ext.residue_trdeg);
        return rep;
    }
    rep.ok = true;
    return rep;
}

std::string to_string(WtdResult r) {
    switch (r) {
        case WtdResult::EQUALITY: return "EQUALITY";
        case WtdResult::STRICT: return "STRICT";
        case WtdResult::VIOLATION: return "VIOLATION";
    }
    return "?";
}

WtdResult wtd_check(int trdeg, int residue_trdeg, int value_dim) {
    if (trdeg < 0 || residue_trdeg < 0 || value_dim < 0)
        throw Error(ErrorKind::PreconditionFailed, "transcendence degrees and dimensions are nonnegative");
    const int rhs = residue_trdeg + value_dim;
    if (trdeg == rhs) return WtdResult::EQUALITY;
    return trdeg > rhs ? WtdResult::STRICT : WtdResult::VIOLATION;
}

}  // namespace tamefield
