#include <doctest.h>

#include "support.hpp"
#include "tamefield/error.hpp"
#include "tamefield/extension.hpp"

#include <numeric>

using namespace tamefield;
using namespace tamefield::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidElement;
}

PolyOverK binomial(const ValuedField& K, int m, const Element& c) {
    std::vector<Element> cs(static_cast<std::size_t>(m) + 1, K.zero());
    cs[0] = K.neg(c);
    cs.back() = K.one();
    return kp_make(K, cs);
}

PolyOverK artin_schreier(const ValuedField& K, const Element& a) {
    const auto p = static_cast<std::size_t>(K.characteristic());
    std::vector<Element> cs(p + 1, K.zero());
    cs[0] = K.neg(a);
    cs[1] = K.neg(K.one());
    cs[p] = K.one();
    return kp_make(K, cs);
}

// Irreducibility over F_p by trial division with every monic polynomial of degree <= n/2; plain ints.
bool irreducible_mod_p(std::vector<long> f, long p) {
    const int n = static_cast<int>(f.size()) - 1;
    auto divides = [&](const std::vector<long>& d) {
        std::vector<long> r = f;
        const int dd = static_cast<int>(d.size()) - 1;
        for (int i = n; i >= dd; --i) {
            long c = r[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j <= dd; ++j) {
                auto& x = r[static_cast<std::size_t>(i - dd + j)];
                x = ((x - c * d[static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        for (int i = 0; i < dd; ++i)
            if (r[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    };
    for (int deg = 1; 2 * deg <= n; ++deg) {
        long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<long> d(static_cast<std::size_t>(deg) + 1, 0);
            long c = code;
            for (int i = 0; i < deg; ++i, c /= p) d[static_cast<std::size_t>(i)] = c % p;
            d.back() = 1;
            if (divides(d)) return false;
        }
    }
    return true;
}

bool is_power_of(long n, long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

void check_ostrowski(const ExtensionReport& r, long p) {
    REQUIRE(r.proved());
    INFO("n=" << r.n << " e=" << r.e << " f=" << r.f << " d=" << r.defect);
    CHECK(r.n == r.e * r.f * r.defect);
    CHECK(is_power_of(r.defect, p));
    if (r.purely_wild) CHECK(is_power_of(r.n, p));
    if (r.tame) {
        CHECK(r.defect == 1);
        CHECK(r.residue_separable);
        CHECK(std::gcd(r.e, p) == 1);
    }
    CHECK(r.immediate == (r.e == 1 && r.f == 1));
    CHECK(r.defectless == (r.defect == 1));
    if (r.immediate && r.n > 1) CHECK(r.defect == r.n);
}

}  // namespace

TEST_CASE("analyze_extension examples") {
    auto K3 = hahn(3, 1, OGroupDesc::Z());
    auto r = analyze_extension(K3, binomial(K3, 2, t_pow(K3, 1)));
    CHECK(r.n == 2);
    CHECK(r.e == 2);
    CHECK(r.f == 1);
    CHECK(r.defect == 1);
    CHECK(r.tame);
    CHECK(r.defectless);
    CHECK(!r.purely_wild);
    CHECK(r.outcome == Outcome::TOTAL);

    auto K5 = hahn(5, 1, OGroupDesc::Z());
    auto w = analyze_extension(K5, binomial(K5, 5, t_pow(K5, 1)));
    CHECK(w.n == 5);
    CHECK(w.e == 5);
    CHECK(w.f == 1);
    CHECK(w.defect == 1);
    CHECK(w.defectless);
    CHECK(w.purely_wild);
    CHECK(!w.tame);

    auto F = ratfunc(2, std::nullopt);
    auto d = analyze_extension(F, artin_schreier(F, t_pow(F, -1)));
    CHECK(d.n == 2);
    CHECK(d.e == 1);
    CHECK(d.f == 1);
    CHECK(d.defect == 2);
    CHECK(d.immediate);
    CHECK(d.purely_wild);
    CHECK(!d.tame);
    CHECK(d.outcome == Outcome::DEFECT);
}

TEST_CASE("finite tower level: the Artin-Schreier root ramifies once the levels run out") {
    for (int level : {0, 1, 3, 8}) {
        auto F = ratfunc(2, level);
        auto r = artin_schreier_analyze(F, t_pow(F, -1));
        INFO("level " << level);
        CHECK(r.outcome == Outcome::RAMIFIED);
        CHECK(r.e == 2);
        CHECK(r.defect == 1);
        CHECK(r.certificate_values.size() == static_cast<std::size_t>(level));
    }
}

TEST_CASE("artin_schreier_analyze: defect over the perfect hull") {
    for (std::int64_t p : {2, 3, 5}) {
        auto F = ratfunc(p, std::nullopt);
        auto r = artin_schreier_analyze(F, t_pow(F, -1));
        CHECK(r.outcome == Outcome::DEFECT);
        CHECK(r.n == p);
        CHECK(r.e == 1);
        CHECK(r.f == 1);
        CHECK(r.defect == p);
        CHECK(r.immediate);
        CHECK(r.purely_wild);
        REQUIRE(r.certificate_values.size() == 8);
        Integer pk = 1;
        for (std::size_t i = 0; i < 8; ++i) {
            pk *= p;
            CHECK(r.certificate_values[i] == OGroupElem::scalar(Rational(Integer(-1), pk)));
            if (i > 0) CHECK(r.certificate_values[i - 1] < r.certificate_values[i]);
        }
        // immediate: corrections have values in vK and residues in Kv
        for (const auto& lt : r.root_terms) CHECK(F.in_value_group(lt.exp));
        check_ostrowski(r, p);
    }
}

TEST_CASE("artin_schreier_analyze outcomes on F_2((t^Z))") {
    auto K = hahn(2, 1, OGroupDesc::Z());
    auto root = artin_schreier_analyze(K, t_pow(K, 1));
    CHECK(root.outcome == Outcome::ROOT_IN_K);
    CHECK(root.n == 1);

    auto ram = artin_schreier_analyze(K, t_pow(K, -1));
    CHECK(ram.outcome == Outcome::RAMIFIED);
    CHECK(ram.n == 2);
    CHECK(ram.e == 2);
    CHECK(ram.f == 1);
    CHECK(ram.defect == 1);
    CHECK(ram.purely_wild);

    auto unr = artin_schreier_analyze(K, K.one());
    CHECK(unr.outcome == Outcome::UNRAMIFIED);
    CHECK(unr.f == 2);
    CHECK(unr.e == 1);
    CHECK(unr.tame);

    // t^{-2} strips to t^{-1}, which leaves vK/2
    auto ram2 = artin_schreier_analyze(K, K.add(t_pow(K, -2), t_pow(K, 3)));
    CHECK(ram2.outcome == Outcome::RAMIFIED);
    CHECK(ram2.root_terms.size() == 1);

    // the Hahn field is maximal: the self-similar run converges inside it
    auto H = hahn(2, 1, OGroupDesc::Z_inv(2));
    CHECK(artin_schreier_analyze(H, t_pow(H, -1)).outcome == Outcome::ROOT_IN_K);

    auto Q = ValuedField(HahnField(ResidueField::rationals(), OGroupDesc::Z(), q1(10)));
    CHECK(kind_of([&] { artin_schreier_analyze(Q, Q.one()); }) == ErrorKind::UnsupportedField);
}

TEST_CASE("artin_schreier_analyze over rational function fields") {
    auto F = ratfunc(3, 0);
    // a = x^3 - x for x = t^{-2} + 1: the loop recovers x exactly
    auto x = F.add(t_pow(F, -2), F.one());
    auto a = F.sub(F.pow(x, 3), x);
    auto r = artin_schreier_analyze(F, a);
    CHECK(r.outcome == Outcome::ROOT_IN_K);
    // positive residual value: only the henselization has the root
    auto inc = artin_schreier_analyze(F, t_pow(F, 1));
    CHECK(inc.outcome == Outcome::INCONCLUSIVE);
    CHECK(!inc.proved());
    // step bound
    auto Hf = ratfunc(2, std::nullopt);
    ASOptions tight;
    tight.step_bound = 3;
    tight.certificate_depth = 8;
    CHECK(artin_schreier_analyze(Hf, t_pow(Hf, -1), tight).confidence == Confidence::INCONCLUSIVE);
}

TEST_CASE("analyze_extension routing and errors") {
    auto K = hahn(3, 1, OGroupDesc::Z());
    auto two_segments = kp_make(K, {t_pow(K, 3), t_pow(K, 1), K.one()});
    CHECK(kind_of([&] { analyze_extension(K, two_segments); }) == ErrorKind::UnsupportedShape);
    auto split_residue = binomial(K, 2, K.one());  // X^2 - 1 = (X-1)(X+1)
    CHECK(kind_of([&] { analyze_extension(K, split_residue); }) == ErrorKind::UnsupportedShape);
    auto with_zero_root = kp_make(K, {K.zero(), K.one(), K.one()});
    CHECK(kind_of([&] { analyze_extension(K, with_zero_root); }) == ErrorKind::UnsupportedShape);
    auto square = kp_mul(K, kp_linear(K, K.one()), kp_linear(K, K.one()));
    CHECK(kind_of([&] { analyze_extension(K, square); }) == ErrorKind::NotSquarefree);
    auto not_monic = kp_make(K, {K.one(), K.from_int(2)});
    CHECK(kind_of([&] { analyze_extension(K, not_monic); }) == ErrorKind::PreconditionFailed);

    // (X-1)^2 - t^2 splits, but the repeated residual factor leaves it open
    auto open = kp_sub(K, square, kp_make(K, {K.mul(t_pow(K, 1), t_pow(K, 1))}));
    auto rep = analyze_extension(K, open);
    CHECK(rep.confidence == Confidence::INCONCLUSIVE);

    auto lin = analyze_extension(K, kp_linear(K, t_pow(K, -3)));
    CHECK(lin.n == 1);
    CHECK(lin.proved());
    CHECK(lin.tame);

    // inertia: X^2 - 2 over F_3 has irreducible residual polynomial
    auto unr = analyze_extension(K, binomial(K, 2, K.from_int(2)));
    CHECK(unr.e == 1);
    CHECK(unr.f == 2);
    CHECK(unr.tame);
}

TEST_CASE("inseparable binomials") {
    auto K = hahn(2, 1, OGroupDesc::Z());
    auto r = analyze_extension(K, binomial(K, 2, K.add(K.one(), t_pow(K, 1))));
    CHECK(r.outcome == Outcome::INSEPARABLE);
    CHECK(r.e == 2);
    CHECK(r.f == 1);
    CHECK(r.defect == 1);
    CHECK(r.purely_wild);
    CHECK(!r.tame);
    auto sq = K.add(K.one(), t_pow(K, 2));
    CHECK(kind_of([&] { analyze_extension(K, binomial(K, 2, sq)); }) == ErrorKind::NotSquarefree);

    auto P = ratfunc(2, std::nullopt);
    CHECK(kind_of([&] { analyze_extension(P, binomial(P, 2, P.add(P.one(), t_pow(P, 1)))); }) ==
          ErrorKind::NotSquarefree);
    auto F = ratfunc(2, 0);
    auto rf = analyze_extension(F, binomial(F, 2, F.add(F.one(), t_pow(F, 1))));
    CHECK(rf.outcome == Outcome::INSEPARABLE);
}

TEST_CASE("Kummer battery over F_q((t^Z))") {
    std::mt19937_64 rng(0x6b756d);
    int generated = 0;
    int proved = 0;
    while (generated < 50) {
        const long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
        const int m = 2 + static_cast<int>(rng() % 5);
        if (m % p == 0) continue;
        const long gamma = 1 + static_cast<long>(rng() % 12);
        const long u = 1 + static_cast<long>(rng() % (p - 1));
        ++generated;
        auto K = hahn(p, 1, OGroupDesc::Z());
        auto c = K.mul(K.from_int(u), t_pow(K, gamma));
        auto g = binomial(K, m, c);
        const long gg = std::gcd(static_cast<long>(m), gamma);
        // residual polynomial Z^gg - u
        std::vector<long> R(static_cast<std::size_t>(gg) + 1, 0);
        R[0] = (p - u) % p;
        R.back() = 1;
        INFO("p=" << p << " m=" << m << " gamma=" << gamma << " u=" << u);
        if (gg > 1 && !irreducible_mod_p(R, p)) {
            CHECK(kind_of([&] { analyze_extension(K, g); }) == ErrorKind::UnsupportedShape);
            continue;
        }
        auto r = analyze_extension(K, g);
        ++proved;
        CHECK(r.e == m / gg);
        CHECK(r.f == gg);
        CHECK(r.defect == 1);
        CHECK(r.tame == (std::gcd(r.e, p) == 1));
        check_ostrowski(r, p);
    }
    CHECK(proved >= 25);
}

TEST_CASE("Ostrowski shape over a generated battery") {
    std::mt19937_64 rng(0x05757);
    int count = 0;
    for (long p : {2, 3, 5}) {
        auto K = hahn(p, 1, OGroupDesc::Z());
        auto Kh = hahn(p, 1, OGroupDesc::Z_inv(p));
        auto F0 = ratfunc(p, 0);
        auto Fh = ratfunc(p, std::nullopt);
        for (int trial = 0; trial < 20; ++trial) {
            // Artin-Schreier with random a on each backend
            for (const ValuedField* L : {&K, &Kh}) {
                auto a = random_hahn(L->hahn(), rng, 3, -4, 3);
                auto r = artin_schreier_analyze(*L, a);
                if (r.proved()) {
                    check_ostrowski(r, p);
                    ++count;
                }
            }
            for (const ValuedField* L : {&F0, &Fh}) {
                auto a = L->ratfunc().make(random_laurent(L->ratfunc(), rng, 3, -4, 0));
                auto r = artin_schreier_analyze(*L, a);
                if (r.proved()) {
                    check_ostrowski(r, p);
                    ++count;
                }
            }
            // binomials X^m - u t^gamma
            const int m = 2 + static_cast<int>(rng() % 5);
            const long gamma = 1 + static_cast<long>(rng() % 9);
            try {
                auto r = analyze_extension(K, binomial(K, m, K.mul(K.from_int(1 + rng() % (p - 1)), t_pow(K, gamma))));
                if (r.proved()) {
                    check_ostrowski(r, p);
                    ++count;
                }
            } catch (const Error& e) {
                CHECK((e.kind() == ErrorKind::UnsupportedShape || e.kind() == ErrorKind::NotSquarefree));
            }
        }
    }
    CHECK(count >= 100);
}

TEST_CASE("fundamental inequality and defect multiplicativity") {
    ExtensionReport a;
    a.e = 2;
    a.f = 1;
    auto c1 = fundamental_inequality_check({a}, 2);
    CHECK(c1.holds);
    CHECK(c1.equality);
    a.e = 1;
    auto c2 = fundamental_inequality_check({a}, 2);
    CHECK(c2.holds);
    CHECK(!c2.equality);
    a.e = 3;
    CHECK(!fundamental_inequality_check({a}, 2).holds);

    auto K = hahn(3, 1, OGroupDesc::Z());
    auto triv = analyze_extension(K, kp_linear(K, K.one()));
    CHECK(defect_multiplicativity_check(triv, triv, triv));
    auto F = ratfunc(2, std::nullopt);
    auto d = artin_schreier_analyze(F, t_pow(F, -1));
    auto Ft = analyze_extension(F, kp_linear(F, F.one()));
    CHECK(defect_multiplicativity_check(d, Ft, d));
    ExtensionReport claimed = triv;
    claimed.defect = 2;
    claimed.defectless = false;
    CHECK(!defect_multiplicativity_check(claimed, triv, triv));
    ExtensionReport open;
    CHECK(kind_of([&] { defect_multiplicativity_check(open, triv, triv); }) == ErrorKind::PreconditionFailed);
}
