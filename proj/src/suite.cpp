#include "tamefield/suite.hpp"

#include "tamefield/classify.hpp"
#include "tamefield/doag.hpp"
#include "tamefield/error.hpp"
#include "tamefield/extension.hpp"
#include "tamefield/gauss.hpp"
#include "tamefield/pcs.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <sstream>

namespace tamefield {

namespace {

// Collects failures; a case passes when nothing was recorded.
struct Log {
    int checks = 0;
    int failed = 0;
    std::vector<std::string> failures;  // the first few
    std::ostringstream info;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (++failed <= 8) failures.push_back(what);
    }
};

OGroupElem q1(long n, long d = 1) { return OGroupElem::scalar(make_rational(n, d)); }

ValuedField hahn(std::int64_t p, int n, OGroupDesc g, long prec = 20) {
    std::vector<Rational> c = g.zero().coords();
    c[0] = prec;
    return ValuedField(HahnField(fq_make(p, n), std::move(g), OGroupElem(c)));
}

ValuedField ratfunc(std::int64_t p, std::optional<int> level) { return ValuedField(RatFuncField(fq_make(p, 1), level)); }

Element t_pow(const ValuedField& K, long n, long d = 1) { return K.monomial(K.residue_field().one(), q1(n, d)); }

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

OGroupElem random_exp(const OGroupDesc& g, std::mt19937_64& rng, long lo, long hi) {
    std::vector<Rational> c;
    for (const auto& a : g.factors()) {
        long den = 1;
        if (a.kind() == Atom::Kind::Rationals) den = uniform(rng, 1, 4);
        if (a.kind() == Atom::Kind::Localized)
            for (int i = static_cast<int>(rng() % 3); i > 0; --i) den *= a.primes()[rng() % a.primes().size()];
        c.push_back(make_rational(uniform(rng, lo * den, hi * den), den));
    }
    return OGroupElem(c);
}

ResidueElem random_unit(const ResidueField& k, std::mt19937_64& rng) {
    for (;;) {
        auto c = k.random(rng);
        if (!k.is_zero(c)) return c;
    }
}

Element random_hahn(const ValuedField& K, std::mt19937_64& rng, int max_terms = 4, long lo = -4, long hi = 6,
                    bool integral = false) {
    std::vector<HahnTerm> terms;
    const int n = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
    for (int i = 0; i < n; ++i) {
        auto e = random_exp(K.value_group(), rng, lo, hi);
        if (integral && e.sign() < 0) e = -e;
        terms.push_back({e, random_unit(K.residue_field(), rng)});
    }
    return K.hahn().make(std::move(terms));
}

LaurentPoly random_laurent(const RatFuncField& F, std::mt19937_64& rng, int max_terms, long lo, long hi) {
    LaurentPoly f;
    const Integer den = F.value_generator().get_den();
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int i = 0; i < n; ++i) {
        Rational e(Integer(uniform(rng, lo, hi)), den);
        e.canonicalize();
        auto c = random_unit(F.residue(), rng);
        auto [it, fresh] = f.emplace(e, c);
        if (!fresh) it->second = F.residue().add(it->second, c);
    }
    for (auto it = f.begin(); it != f.end();) it = F.residue().is_zero(it->second) ? f.erase(it) : std::next(it);
    return f;
}

Element random_ratfunc(const ValuedField& K, std::mt19937_64& rng) {
    const auto& F = K.ratfunc();
    if (rng() % 10 == 0) return F.zero();
    for (;;) {
        auto num = random_laurent(F, rng, 3, -3, 4), den = random_laurent(F, rng, 2, 0, 3);
        if (!num.empty() && !den.empty()) return F.make(num, den);
    }
}

Element random_element(const ValuedField& K, std::mt19937_64& rng) {
    return K.is_hahn() ? random_hahn(K, rng) : random_ratfunc(K, rng);
}

PolyOverK binomial(const ValuedField& K, int m, const Element& c) {
    std::vector<Element> cs(static_cast<std::size_t>(m) + 1, K.zero());
    cs[0] = K.neg(c);
    cs.back() = K.one();
    return kp_make(K, cs);
}

bool is_power_of(long n, long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

// --- cases ---

void case_defect(Log& log, std::uint64_t) {
    for (long p : {2, 3, 5}) {
        const auto start = std::chrono::steady_clock::now();
        auto F = ratfunc(p, std::nullopt);
        auto r = artin_schreier_analyze(F, t_pow(F, -1));
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string tag = "p=" + std::to_string(p) + ": ";
        log.expect(r.proved() && r.outcome == Outcome::DEFECT, tag + "outcome " + to_string(r.outcome));
        log.expect(r.n == p && r.e == 1 && r.f == 1 && r.defect == p, tag + "n, e, f, d");
        log.expect(r.immediate && r.purely_wild && !r.tame, tag + "flags");
        bool values = r.certificate_values.size() >= 8;
        Integer pk = 1;
        for (std::size_t k = 0; values && k < 8; ++k) {
            pk *= p;
            values = r.certificate_values[k] == OGroupElem::scalar(Rational(Integer(-1), pk));
        }
        log.expect(values, tag + "certificate values");
        log.expect(secs < 1.0, tag + "runtime");
    }
    log.info << "p in {2,3,5} over F_p(t^(1/p^inf)), d = p";
}

void case_kummer(Log& log, std::uint64_t) {
    int cases = 0;
    for (long p : {3, 5, 7}) {
        auto K = hahn(p, 1, OGroupDesc::Z());
        for (int l : {2, 3, 5, 7}) {
            auto r = analyze_extension(K, binomial(K, l, t_pow(K, 1)));
            const std::string tag = "p=" + std::to_string(p) + " l=" + std::to_string(l) + ": ";
            ++cases;
            log.expect(r.proved() && r.e == l && r.f == 1 && r.defect == 1, tag + "e, f, d");
            if (l == p)
                log.expect(r.purely_wild && !r.tame, tag + "purely wild, not tame");
            else
                log.expect(r.tame && !r.purely_wild, tag + "tame");
        }
    }
    log.info << cases << " binomials X^l - t";
}

void check_shape(Log& log, const ExtensionReport& r, long p, const std::string& tag) {
    log.expect(r.n == r.e * r.f * r.defect && is_power_of(r.defect, p), tag + ": n = e f p^nu");
    if (r.purely_wild) log.expect(is_power_of(r.n, p), tag + ": purely wild degree");
    if (r.tame) log.expect(r.defect == 1 && std::gcd(r.e, p) == 1 && r.residue_separable, tag + ": tame flags");
}

void case_ostrowski(Log& log, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x05757);
    int proved = 0;
    for (long p : {2, 3, 5}) {
        auto K = hahn(p, 1, OGroupDesc::Z());
        auto Kh = hahn(p, 1, OGroupDesc::Z_inv(p));
        auto F0 = ratfunc(p, 0);
        auto Fh = ratfunc(p, std::nullopt);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::pair<const ValuedField*, Element>> as;
            as.emplace_back(&K, random_hahn(K, rng, 3, -4, 3));
            as.emplace_back(&Kh, random_hahn(Kh, rng, 3, -4, 3));
            as.emplace_back(&F0, F0.ratfunc().make(random_laurent(F0.ratfunc(), rng, 3, -4, 0)));
            as.emplace_back(&Fh, Fh.ratfunc().make(random_laurent(Fh.ratfunc(), rng, 3, -4, 0)));
            for (const auto& [L, a] : as) {
                auto r = artin_schreier_analyze(*L, a);
                if (!r.proved()) continue;
                ++proved;
                check_shape(log, r, p, L->name() + " a=" + L->to_string(a));
            }
            const int m = 2 + static_cast<int>(rng() % 5);
            const long gamma = 1 + static_cast<long>(rng() % 9);
            auto c = K.mul(K.from_int(1 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1))), t_pow(K, gamma));
            try {
                auto r = analyze_extension(K, binomial(K, m, c));
                if (!r.proved()) continue;
                ++proved;
                check_shape(log, r, p, K.name() + " X^" + std::to_string(m));
            } catch (const Error& e) {
                log.expect(e.kind() == ErrorKind::UnsupportedShape || e.kind() == ErrorKind::NotSquarefree,
                           std::string("unexpected error ") + e.what());
            }
        }
    }
    log.expect(proved >= 100, "fewer than 100 proved reports");
    log.info << proved << " proved reports";
}

// x_i -> u_i t^{vx_i}, y_j -> r_j + (a term of positive value), in k((t^ambient)).
struct Witness {
    ValuedField E;
    std::vector<Element> xs, x_invs, ys;
    std::vector<ResidueElem> rs;
};

Witness make_witness(const GaussAssignment& A, std::mt19937_64& rng) {
    const auto& k = A.base.residue_field();
    std::vector<Rational> c = A.ambient.zero().coords();
    c[0] = 100;
    Witness w{ValuedField(HahnField(k, A.ambient, OGroupElem(c))), {}, {}, {}, {}};
    for (const auto& vx : A.x_vals) {
        auto u = random_unit(k, rng);
        w.xs.push_back(w.E.monomial(u, vx));
        w.x_invs.push_back(w.E.monomial(k.inv(u), -vx));
    }
    for (int j = 0; j < A.y_count; ++j) {
        auto r = k.random(rng);
        w.rs.push_back(r);
        auto e = A.ambient.zero().coords();
        e.back() = 1 + static_cast<long>(rng() % 3);
        w.ys.push_back(w.E.add(w.E.constant(r), w.E.monomial(random_unit(k, rng), OGroupElem(e))));
    }
    return w;
}

Element substitute(const GaussAssignment& A, const Witness& w, const MPoly& f) {
    const ValuedField& E = w.E;
    Element acc = E.zero();
    for (const auto& [e, c] : f.terms) {
        std::vector<HahnTerm> embedded;
        for (const auto& t : std::get<HahnSeries>(c).terms()) embedded.push_back({A.embed(t.exp), t.coeff});
        Element term = E.hahn().make(std::move(embedded));
        for (int i = 0; i < f.nx; ++i) {
            const long k = e[static_cast<std::size_t>(i)];
            const auto& base = k >= 0 ? w.xs[static_cast<std::size_t>(i)] : w.x_invs[static_cast<std::size_t>(i)];
            term = E.mul(term, E.pow(base, static_cast<unsigned>(k >= 0 ? k : -k)));
        }
        for (int j = 0; j < f.ny; ++j)
            term = E.mul(term, E.pow(w.ys[static_cast<std::size_t>(j)],
                                     static_cast<unsigned>(e[static_cast<std::size_t>(f.nx + j)])));
        acc = E.add(acc, term);
    }
    return acc;
}

MPoly random_mpoly(const GaussAssignment& A, std::mt19937_64& rng) {
    const int nx = static_cast<int>(A.x_vals.size());
    for (;;) {
        std::vector<std::pair<MonoExp, Element>> terms;
        MonoExp shared(static_cast<std::size_t>(nx + A.y_count), 0);
        for (int i = 0; i < nx; ++i) shared[static_cast<std::size_t>(i)] = static_cast<long>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            MonoExp e = shared;
            if (rng() % 3 == 0)
                for (int a = 0; a < nx; ++a) e[static_cast<std::size_t>(a)] = static_cast<long>(rng() % 3);
            for (int j = 0; j < A.y_count; ++j) e[static_cast<std::size_t>(nx + j)] = static_cast<long>(rng() % 3);
            Element c = random_hahn(A.base, rng, 2, 0, 2);
            if (A.base.is_zero(c)) c = A.base.one();
            terms.emplace_back(e, c);
        }
        auto f = mpoly_make(A.base, nx, A.y_count, terms);
        if (!f.terms.empty()) return f;
    }
}

// f divided by one of its minimal monomials' x-part and t-part, so that its Gauss value is 0.
MPoly normalize(const GaussAssignment& A, const MPoly& f) {
    const Value gv = gauss_value(A, f);
    for (const auto& [e, c] : f.terms) {
        OGroupElem v = A.embed(A.base.value(c).elem());
        for (std::size_t i = 0; i < A.x_vals.size(); ++i) v += A.x_vals[i] * Rational(e[i]);
        if (!(v == gv.elem())) continue;
        MonoExp m(e.size(), 0);
        for (std::size_t i = 0; i < A.x_vals.size(); ++i) m[i] = -e[i];
        auto scale = A.base.monomial(A.base.residue_field().one(), -A.base.value(c).elem());
        return mpoly_mul(A.base, f, mpoly_make(A.base, f.nx, f.ny, {{m, scale}}));
    }
    return f;
}

void case_gauss(Log& log, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x6a055);
    std::vector<GaussAssignment> as = {
        GaussAssignment::standard(hahn(5, 1, OGroupDesc::Z()), 1, 1),
        GaussAssignment::standard(hahn(2, 1, OGroupDesc::Z()), 2, 2),
        GaussAssignment::standard(hahn(3, 2, OGroupDesc::Q()), 1, 2),
        GaussAssignment{hahn(3, 1, OGroupDesc::Z()), OGroupDesc::Z().times(OGroupDesc::Q()), 0,
                        {OGroupElem({Rational(0), make_rational(1, 2)})}, 1},
    };
    int agree = 0, cancelling = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto& A = as[static_cast<std::size_t>(trial) % as.size()];
        auto f = random_mpoly(A, rng);
        auto w = make_witness(A, rng);
        const Value gv = gauss_value(A, f);
        const Element fx = substitute(A, w, f);
        const auto& k = A.base.residue_field();
        const ResidueElem lead = rmpoly_eval(k, gauss_residue(A, normalize(A, f)), w.rs);
        const std::string tag = mpoly_to_string(A.base, f);
        if (!k.is_zero(lead)) {
            ++agree;
            log.expect(w.E.value(fx) == gv, tag + ": value differs from the witness");
        } else {
            ++cancelling;
            log.expect(w.E.is_zero(fx) || gv.elem() < w.E.value(fx).elem(), tag + ": cancellation not detected");
        }
    }
    log.info << agree << " non-cancelling, " << cancelling << " cancelling of 200";
}

void case_hensel(Log& log, std::uint64_t) {
    auto K = hahn(3, 1, OGroupDesc::Z(), 80);
    auto c = K.add(K.one(), t_pow(K, 1));
    auto f = kp_make(K, {K.neg(c), K.zero(), K.one()});
    auto r = hensel_lift(K, f, K.one(), q1(40));
    auto sq = K.exact_part(K.truncate(K.mul(r.root, r.root), q1(40)));
    log.expect(K.equal(sq, c), "root^2 differs from 1 + t below t^40");
    log.expect(r.iterations <= 7, "iterations " + std::to_string(r.iterations));
    log.info << r.iterations << " Newton steps";
}

void case_as_root(Log& log, std::uint64_t) {
    auto K = hahn(2, 1, OGroupDesc::Z_inv(2), 10);
    auto prec = q1(-1, 256);
    auto r = as_root_in_field(K, t_pow(K, -1), prec);
    log.expect(r.root.has_value(), "no root over Z[1/2]");
    if (r.root) {
        Element expect = K.zero();
        for (long d = 2; d <= 256; d *= 2) expect = K.add(expect, t_pow(K, -1, d));
        auto diff = K.sub(K.exact_part(*r.root), expect);
        log.expect(K.is_zero(diff) || K.equal(diff, K.one()), "root is not the sum of t^(-1/2^i)");
        log.expect(!(r.residual_value < Value(prec)), "residual value below the cutoff");
    }
    auto Z = hahn(2, 1, OGroupDesc::Z(), 10);
    auto rz = as_root_in_field(Z, t_pow(Z, -1));
    log.expect(!rz.root && rz.reason == "slope_not_in_group", "over Z: " + rz.reason);
    log.info << "root found over Z[1/2], none over Z";
}

void case_classify(Log& log, std::uint64_t) {
    auto yes = [&](const ValuedField& K) {
        log.expect(classify_field(K)["tame"].verdict == Verdict::YES, K.name() + " should be tame");
    };
    yes(hahn(5, 1, OGroupDesc::Q()));
    yes(hahn(5, 1, OGroupDesc::Z_inv(5)));
    yes(ValuedField(HahnField(ResidueField::rationals(), OGroupDesc::Z(), q1(10))));
    auto z = classify_field(hahn(5, 1, OGroupDesc::Z()))["tame"];
    log.expect(z.verdict == Verdict::NO && !z.witness.empty(), "F(5)((t^Z)) should be not tame, with a witness");
    log.expect(kaplansky_check(hahn(5, 1, OGroupDesc::Q())).verdict == Verdict::NO, "F(5)((t^Q)) Kaplansky");
    log.info << "4 fields classified";
}

// Direct evaluation at rational points. Quantified subformulas have quantifier-free
// bodies; their test points are the roots of the atoms, midpoints and the ends.
bool direct_eval(const FormulaPtr& f, std::map<std::string, Rational>& env) {
    using K = OGFormula::Kind;
    auto term = [&](const LinTerm& t) {
        Rational s = 0;
        for (const auto& [v, c] : t.coeffs) s += c * env.at(v);
        return s;
    };
    switch (f->kind()) {
        case K::TRUE: return true;
        case K::FALSE: return false;
        case K::EQ: return term(f->term()) == 0;
        case K::LT: return term(f->term()) < 0;
        case K::NOT: return !direct_eval(f->children()[0], env);
        case K::AND:
            for (const auto& c : f->children())
                if (!direct_eval(c, env)) return false;
            return true;
        case K::OR:
            for (const auto& c : f->children())
                if (direct_eval(c, env)) return true;
            return false;
        case K::IMPLIES: return !direct_eval(f->children()[0], env) || direct_eval(f->children()[1], env);
        case K::FORALL:
        case K::EXISTS: {
            const std::string& x = f->var();
            std::vector<Rational> roots;
            std::function<void(const FormulaPtr&)> collect = [&](const FormulaPtr& g) {
                if (g->is_atom() && g->term().coeff(x) != 0) {
                    LinTerm rest = g->term();
                    const Rational a = rest.coeff(x);
                    rest.coeffs.erase(x);
                    roots.push_back(-term(rest) / a);
                }
                for (const auto& c : g->children()) collect(c);
            };
            collect(f->children()[0]);
            std::vector<Rational> points = {0};
            for (std::size_t i = 0; i < roots.size(); ++i) {
                points.push_back(roots[i]);
                points.push_back(roots[i] + 1);
                points.push_back(roots[i] - 1);
                for (std::size_t j = i + 1; j < roots.size(); ++j) points.push_back((roots[i] + roots[j]) / 2);
            }
            const bool want = f->kind() == K::EXISTS;
            auto saved = env.find(x) == env.end() ? std::nullopt : std::optional<Rational>(env[x]);
            bool result = !want;
            for (const auto& pt : points) {
                env[x] = pt;
                if (direct_eval(f->children()[0], env) == want) {
                    result = want;
                    break;
                }
            }
            if (saved) env[x] = *saved;
            else env.erase(x);
            return result;
        }
    }
    return false;
}

FormulaPtr random_atom(std::mt19937_64& rng, const std::vector<std::string>& vars) {
    LinTerm t;
    for (const auto& v : vars)
        if (rng() % 2) t = t + LinTerm{{{v, Rational(uniform(rng, -3, 3))}}};
    if (t.is_zero()) t = LinTerm{{{vars[rng() % vars.size()], Rational(1)}}};
    return rng() % 3 ? OGFormula::lt(t) : OGFormula::eq(t);
}

FormulaPtr random_qf(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
    if (depth == 0 || rng() % 3 == 0) return random_atom(rng, vars);
    switch (rng() % 4) {
        case 0: return OGFormula::negate(random_qf(rng, vars, depth - 1));
        case 1: return OGFormula::conj({random_qf(rng, vars, depth - 1), random_qf(rng, vars, depth - 1)});
        case 2: return OGFormula::disj({random_qf(rng, vars, depth - 1), random_qf(rng, vars, depth - 1)});
        default: return OGFormula::implies(random_qf(rng, vars, depth - 1), random_qf(rng, vars, depth - 1));
    }
}

FormulaPtr random_formula(std::mt19937_64& rng, int depth) {
    const std::vector<std::string> free = {"a", "b", "c"};
    if (depth == 0 || rng() % 4 == 0) {
        const std::string x = rng() % 2 ? "x" : "y";
        std::vector<std::string> vars = free;
        vars.push_back(x);
        auto body = random_qf(rng, vars, 2);
        return rng() % 2 ? OGFormula::exists(x, body) : OGFormula::forall(x, body);
    }
    switch (rng() % 3) {
        case 0: return OGFormula::negate(random_formula(rng, depth - 1));
        case 1: return OGFormula::conj({random_formula(rng, depth - 1), random_qf(rng, free, 1)});
        default: return OGFormula::disj({random_formula(rng, depth - 1), random_formula(rng, depth - 1)});
    }
}

void case_doag(Log& log, std::uint64_t seed) {
    const std::vector<std::pair<const char*, bool>> battery = {
        {"forall x exists y (y + y = x)", true},
        {"forall x exists y (3*y = x)", true},
        {"forall x, y (x < y -> exists z (x < z & z < y))", true},
        {"exists x (x > 0 & forall y (y > 0 -> y >= x))", false},
        {"forall x (x > 0 -> exists y (y > 0 & y < x))", true},
        {"forall x (2*x = 0 -> x = 0)", true},
        {"forall x (5*x = 0 -> x = 0)", true},
        {"exists x (x > 0)", true},
        {"forall x (x > 0 | x < 0 | x = 0)", true},
        {"exists x (x + x = x & x > 0)", false},
        {"forall x exists y (x < y)", true},
        {"exists x forall y (y <= x)", false},
    };
    for (const auto& [text, truth] : battery)
        log.expect(doag_decide_sentence(parse_formula(text)) == truth, std::string("battery: ") + text);

    std::mt19937_64 rng(seed ^ 0xd0a6);
    int mismatches = 0;
    for (int i = 0; i < 300; ++i) {
        auto f = random_formula(rng, 2);
        auto q = doag_qe(f);
        bool ok = q->quantifier_free();
        for (int j = 0; ok && j < 20; ++j) {
            std::map<std::string, Rational> env;
            for (const char* v : {"a", "b", "c"}) env[v] = make_rational(uniform(rng, -5, 5), uniform(rng, 1, 3));
            auto copy = env;
            ok = og_eval_qf(q, env) == direct_eval(f, copy);
        }
        if (!ok) ++mismatches;
        log.expect(ok, "QE mismatch on " + to_string(f));
    }
    log.info << "12 battery sentences, 300 QE round trips, " << mismatches << " mismatches";
}

void case_axioms(Log& log, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xa710);
    const std::vector<ValuedField> fields = {hahn(3, 2, OGroupDesc::Q()), ratfunc(5, 1)};
    for (const auto& K : fields) {
        const auto& k = K.residue_field();
        for (int i = 0; i < 1000; ++i) {
            Element x = random_element(K, rng), y = random_element(K, rng);
            const std::string tag = K.name() + " x=" + K.to_string(x) + " y=" + K.to_string(y);
            log.expect(check_axiom_instance(K, axiom::V0{x, {y}}).pass, "V0 " + tag);
            log.expect(check_axiom_instance(K, axiom::VT{x, y}).pass, "VT " + tag);
            log.expect(K.value(K.mul(x, y)) == K.value(x) + K.value(y), "homomorphism " + tag);
            log.expect(!(K.value(K.add(x, y)) < min(K.value(x), K.value(y))), "ultrametric " + tag);
            if (!(K.value(x) < Value(K.value_group().zero())) && !(K.value(y) < Value(K.value_group().zero()))) {
                log.expect(K.residue_integral(K.mul(x, y)) == k.mul(K.residue_integral(x), K.residue_integral(y)),
                           "residue product " + tag);
                log.expect(K.residue_integral(K.add(x, y)) == k.add(K.residue_integral(x), K.residue_integral(y)),
                           "residue sum " + tag);
            }
        }
    }
    int instances = 0;
    for (std::int64_t p : {2, 3, 5}) {
        for (const auto& g : {OGroupDesc::Z(), OGroupDesc::Q(), OGroupDesc::Z_inv(p)}) {
            auto K = hahn(p, 1, g, 10);
            const bool divisible = og_is_p_divisible(g, p).divisible;
            for (int i = 0; i < 30; ++i) {
                auto x = random_hahn(K, rng, 3);
                if (K.is_zero(x)) continue;
                ++instances;
                const bool part = K.in_value_group(K.value(x).elem() / Rational(p));
                auto v = check_axiom_instance(K, axiom::VGD{p, x});
                log.expect(v.pass == part && (!divisible || v.pass), "VGD over " + K.name());
                // finite residue fields are perfect
                log.expect(check_axiom_instance(K, axiom::RFD{p, x}).pass, "RFD over " + K.name());
            }
        }
    }
    log.info << "1000 cases per backend, " << instances << " VGD/RFD instances";
}

void case_pcs(Log& log, std::uint64_t) {
    auto F = ratfunc(2, std::nullopt);
    auto a = t_pow(F, -1);
    auto pre = pcs_artin_schreier(F, a, 10);
    log.expect(pcs_validate(F, pre.terms).ok, "prefix is not pseudo-Cauchy");
    auto f = kp_make(F, {F.neg(a), F.from_int(-1), F.one()});
    auto tr = pcs_poly_trace(F, pre, f);
    log.expect(tr.fit.kind == PcsFitKind::AFFINE, "fit " + to_string(tr.fit.kind));
    log.expect(tr.fit.beta == F.value_group().zero(), "beta " + tr.fit.beta.to_string());
    log.expect(tr.fit.h == Rational(2) && tr.fit.h_power_of_p, "h");
    log.expect(tr.fit.tail_start == 0, "tail does not cover the prefix");
    log.info << "AFFINE(beta=" << tr.fit.beta.to_string() << ", h=" << tr.fit.h.get_str() << ") over "
             << pre.terms.size() << " terms";
}

struct CaseDef {
    const char* id;
    const char* description;
    const char* anchor;
    std::vector<std::string> tags;
    void (*run)(Log&, std::uint64_t);
};

const std::vector<CaseDef>& cases() {
    static const std::vector<CaseDef> defs = {
        {"01-defect", "X^p - X - 1/t over F_p(t^(1/p^inf)) is an immediate defect extension",
         "defect example X^p - X - 1/t", {"defect", "extension", "artin-schreier"}, case_defect},
        {"02-kummer", "X^l - t over F_p((t^Z)): tame for l != p, purely wild for l = p",
         "tame extension axioms TE1-TE3; purely wild criterion", {"kummer", "extension", "tame"}, case_kummer},
        {"03-ostrowski", "n = e f p^nu over a generated battery",
         "Lemma of Ostrowski; degree of purely wild extensions is a power of p", {"ostrowski", "extension", "defect"},
         case_ostrowski},
        {"04-gauss", "Gauss values against concrete witnesses", "value of a polynomial is the least value of its monomials",
         {"gauss"}, case_gauss},
        {"05-hensel", "Newton lift of X^2 - (1 + t) over F_3((t^Z))", "axiom scheme HENS", {"hensel", "axioms"},
         case_hensel},
        {"06-as-root", "Artin-Schreier root of 1/t in F_2((t^Z[1/2]))", "Artin-Schreier extensions of maximal fields",
         {"as-root", "hensel", "artin-schreier"}, case_as_root},
        {"07-classify", "tame classification of Hahn fields", "tame fields: vK p-divisible and Kv perfect",
         {"classify", "tame"}, case_classify},
        {"08-doag", "decision procedure for divisible ordered abelian groups",
         "divisible ordered abelian groups: complete, model complete, decidable", {"doag"}, case_doag},
        {"09-axioms", "V0, VT, homomorphism and residue laws; VGD_p and RFD_p", "axiom schemes of valued fields",
         {"axioms", "valfield"}, case_axioms},
        {"10-pcs", "value trace of X^2 - X - 1/t along its Artin-Schreier approximations",
         "pseudo-Cauchy value pattern beta + h v(x - a_nu)", {"pcs", "artin-schreier"}, case_pcs},
    };
    return defs;
}

bool selected(const CaseDef& c, const std::optional<std::string>& filter) {
    if (!filter || filter->empty()) return true;
    const std::string id = c.id;
    if (id == *filter || id.substr(id.find('-') + 1) == *filter) return true;
    for (const auto& t : c.tags)
        if (t == *filter) return true;
    return false;
}

SuiteCase run_case(const CaseDef& def, std::uint64_t seed) {
    SuiteCase out{def.id, def.description, def.anchor, def.tags, CaseStatus::FAIL, "", 0};
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
        def.run(log, seed);
        if (log.failed == 0) {
            out.status = CaseStatus::PASS;
            out.details = log.info.str() + "; " + std::to_string(log.checks) + " checks";
        } else {
            std::string msg = std::to_string(log.failed) + " of " + std::to_string(log.checks) + " checks failed";
            for (const auto& f : log.failures) msg += "; " + f;
            out.details = msg;
        }
    } catch (const Error& e) {
        out.status = e.kind() == ErrorKind::PrecisionExhausted ? CaseStatus::INCONCLUSIVE : CaseStatus::FAIL;
        out.details = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
        out.details = std::string("error: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::PASS: return "PASS";
        case CaseStatus::FAIL: return "FAIL";
        case CaseStatus::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

bool SuiteResult::passed() const {
    for (const auto& c : cases)
        if (c.status == CaseStatus::FAIL) return false;
    return true;
}

std::vector<std::string> suite_case_ids() {
    std::vector<std::string> ids;
    for (const auto& c : cases()) ids.emplace_back(c.id);
    return ids;
}

SuiteResult run_suite(const std::optional<std::string>& filter, std::uint64_t seed, bool parallel) {
    SuiteResult result;
    std::vector<std::future<SuiteCase>> running;
    for (const auto& def : cases()) {
        if (!selected(def, filter)) continue;
        running.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                                     [&def, seed] { return run_case(def, seed); }));
    }
    for (auto& f : running) result.cases.push_back(f.get());
    return result;
}

}  // namespace tamefield
