#include <doctest.h>

#include "support.hpp"
#include "tamefield/dsl.hpp"
#include "tamefield/error.hpp"

using namespace tamefield;
using namespace tamefield::testing;

namespace {

struct Where {
    ErrorKind kind;
    int line;
    int col;
};

Where error_at(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return {e.kind(), e.line(), e.column()};
    } catch (const Error& e) {
        FAIL("unpositioned error: " << e.what());
    }
    FAIL("no error raised");
    return {ErrorKind::InvalidElement, 0, 0};
}

Atom random_atom(std::mt19937_64& rng) {
    switch (rng() % 6) {
        case 0: return Atom::integers();
        case 1: return Atom::rationals();
        case 2: return Atom::localized({2});
        case 3: return Atom::localized({3});
        case 4: return Atom::localized({5});
        default: return Atom::localized({2, 3});
    }
}

OGroupDesc random_group(std::mt19937_64& rng, int max_rank) {
    std::vector<Atom> atoms;
    const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_rank));
    for (int i = 0; i < r; ++i) atoms.push_back(random_atom(rng));
    return OGroupDesc(atoms);
}

ResidueField random_residue(std::mt19937_64& rng, bool allow_q) {
    if (allow_q && rng() % 5 == 0) return ResidueField::rationals();
    const std::int64_t ps[] = {2, 3, 5, 7};
    return fq_make(ps[rng() % 4], 1 + static_cast<int>(rng() % 2));
}

ValuedField random_field(std::mt19937_64& rng) {
    if (rng() % 2) {
        OGroupDesc g = random_group(rng, 2);
        return ValuedField(HahnField(random_residue(rng, true), g, OGroupElem::unit(g.rank(), 0) * Rational(20)));
    }
    std::optional<int> level;
    if (rng() % 4) level = static_cast<int>(rng() % 4);
    return ValuedField(RatFuncField(random_residue(rng, false), level));
}

Element random_element(const ValuedField& K, std::mt19937_64& rng) {
    if (!K.is_hahn()) return random_ratfunc(K.ratfunc(), rng);
    Element x = random_hahn(K.hahn(), rng);
    if (rng() % 3 == 0) x = K.truncate(x, random_group_elem(K.value_group(), rng, -2, 8));
    return x;
}

}  // namespace

TEST_CASE("parse_input examples") {
    auto K = parse_field("F(9)((t^Q))");
    REQUIRE(K.is_hahn());
    CHECK(K.residue_field().size() == 9);
    CHECK(K.value_group() == OGroupDesc::Q());
    CHECK(K.name() == "F(9)((t^Q))");

    auto F = parse_field("F(2)((t^Z))");
    auto f = parse_poly(F, "X^2 - X - t^(-1)");
    CHECK(f.degree() == 2);
    CHECK(F.equal(f[0], F.neg(t_pow(F, -1))));
    CHECK(F.equal(f[1], F.from_int(-1)));

    auto e = error_at([] { parse_field("F(6)((t^Z))"); });
    CHECK(e.kind == ErrorKind::SemanticError);
    CHECK(e.line == 1);
    CHECK(e.col == 3);

    auto R = parse_field("F(3)(t^(1/3^inf))");
    CHECK(!R.is_hahn());
    CHECK(R.ratfunc().is_perfect_hull());
    CHECK(parse_field("F(3)(t^(1/3^2))").ratfunc().level() == 2);
    CHECK(parse_field("F(5)(t)").ratfunc().level() == 0);
    CHECK(parse_field("Q((t^Z x Z[1/6]))").value_group() ==
          OGroupDesc({Atom::integers(), Atom::localized({2, 3})}));
    CHECK(parse_group("Z[1/4]") == OGroupDesc::Z_inv(2));

    auto x = parse_element(R, "t^(-1/9) + 2*t^(1/3)");
    CHECK(R.equal(x, R.add(t_pow(R, -1, 9), R.mul(R.from_int(2), t_pow(R, 1, 3)))));
    auto H = parse_field("F(3)((t^Z))");
    auto s = parse_element(H, "1/(1 - t)");
    CHECK(H.to_string(s).rfind("1 + t + t^2", 0) == 0);
    CHECK(H.equal(parse_element(H, "t + O(t^3)"), H.truncate(t_pow(H, 1), q1(3))));
    auto m = parse_mpoly(H, "3*x1^2*y1 + t*y2 - x1^(-1)");
    CHECK(m.nx == 1);
    CHECK(m.ny == 2);
    CHECK(m.terms.size() == 2);  // 3 = 0 in F(3)
}

TEST_CASE("parse errors carry positions") {
    auto K = parse_field("F(5)((t^Z))");
    auto a = error_at([&] { parse_poly(K, "X^2 + \n  ) "); });
    CHECK(a.kind == ErrorKind::SyntaxError);
    CHECK(a.line == 2);
    CHECK(a.col == 3);
    CHECK(error_at([&] { parse_element(K, "t^(1/2)"); }).kind == ErrorKind::SemanticError);
    CHECK(error_at([&] { parse_element(K, "X + 1"); }).kind == ErrorKind::SemanticError);
    CHECK(error_at([&] { parse_element(K, "g"); }).kind == ErrorKind::SemanticError);
    CHECK(error_at([&] { parse_element(K, "1 / 0"); }).kind == ErrorKind::SemanticError);
    CHECK(error_at([&] { parse_field("F(3)(t^(1/5^2))"); }).kind == ErrorKind::SemanticError);
    CHECK(error_at([&] { parse_field("F(3)((t^W))"); }).kind == ErrorKind::SyntaxError);
    CHECK(error_at([&] { parse_group("Z x"); }).col == 4);
    CHECK(error_at([&] { parse_group("Z[1/1]"); }).kind == ErrorKind::SemanticError);
    CHECK(error_at([&] { parse_field("F(7)((t^Z)) junk"); }).col == 13);
    CHECK(error_at([&] { parse_input(InputKind::Formula, "forall x (x <"); }).kind == ErrorKind::SyntaxError);
    CHECK(error_at([&] { parse_poly(K, "X^(-1)"); }).kind == ErrorKind::SemanticError);
}

TEST_CASE("round trips: fields and groups") {
    std::mt19937_64 rng(0xd51);
    for (int i = 0; i < 200; ++i) {
        auto K = random_field(rng);
        auto back = std::get<ValuedField>(parse_input(InputKind::Field, print_value(K)));
        INFO(K.name());
        CHECK(back == K);
        auto g = random_group(rng, 3);
        auto gb = std::get<OGroupDesc>(parse_input(InputKind::Group, print_value(g)));
        CHECK(gb == g);
    }
    CHECK(parse_group("0").trivial());
}

TEST_CASE("round trips: elements, polynomials and mpolys") {
    std::mt19937_64 rng(0xd52);
    for (int i = 0; i < 200; ++i) {
        auto K = random_field(rng);
        Element x = random_element(K, rng);
        const std::string s = print_value(x, &K);
        INFO(K.name() << ": " << s);
        auto xb = std::get<Element>(parse_input(InputKind::Element, s, &K));
        CHECK(K.equal(xb, x));

        std::vector<Element> cs;
        const int deg = static_cast<int>(rng() % 4);
        for (int j = 0; j <= deg; ++j) cs.push_back(random_element(K, rng));
        if (rng() % 2 || K.is_zero(cs.back())) cs.back() = K.one();
        auto f = kp_make(K, cs);
        const std::string fs = print_value(f, &K);
        INFO(fs);
        auto fb = std::get<PolyOverK>(parse_input(InputKind::Poly, fs, &K));
        REQUIRE(fb.coeffs.size() == f.coeffs.size());
        for (std::size_t j = 0; j < f.coeffs.size(); ++j) CHECK(K.equal(fb[j], f[j]));

        const int nx = 1 + static_cast<int>(rng() % 2), ny = 1 + static_cast<int>(rng() % 2);
        std::vector<std::pair<MonoExp, Element>> terms;
        for (int j = 0; j < 3; ++j) {
            MonoExp e;
            for (int v = 0; v < nx; ++v) e.push_back(static_cast<long>(rng() % 5) - 2);
            for (int v = 0; v < ny; ++v) e.push_back(static_cast<long>(rng() % 3));
            terms.emplace_back(e, random_element(K, rng));
        }
        auto m = mpoly_make(K, nx, ny, terms);
        const std::string ms = mpoly_to_string(K, m);
        INFO(ms);
        auto mb = parse_mpoly(K, ms, nx, ny);
        REQUIRE(mb.terms.size() == m.terms.size());
        for (const auto& [e, c] : m.terms) {
            REQUIRE(mb.terms.count(e) == 1);
            CHECK(K.equal(mb.terms.at(e), c));
        }
    }
}

TEST_CASE("round trips: formulas through parse_input") {
    const char* samples[] = {"forall x exists y (y + y = x)", "exists x (x > 0 & forall y (y > 0 -> y >= x))",
                             "!(x = y) | 2*x < 3*z", "forall x, y (x < y -> exists z (x < z & z < y))"};
    for (const char* s : samples) {
        auto f = std::get<FormulaPtr>(parse_input(InputKind::Formula, s));
        auto g = std::get<FormulaPtr>(parse_input(InputKind::Formula, print_value(f)));
        CHECK(*f == *g);
    }
}
