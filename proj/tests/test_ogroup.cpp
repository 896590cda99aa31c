#include <doctest.h>

#include "tamefield/error.hpp"
#include "tamefield/ogroup.hpp"

#include <random>

using namespace tamefield;

namespace {

OGroupElem e1(long n, long d = 1) { return OGroupElem::scalar(make_rational(n, d)); }
OGroupElem e2(Rational a, Rational b) { return OGroupElem({a, b}); }

// Random element of an atom: integer numerator over an admissible denominator.
Rational random_coord(const Atom& atom, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<int> pick(0, 3);
    long den = 1;
    switch (atom.kind()) {
        case Atom::Kind::Integers: break;
        case Atom::Kind::Rationals: den = std::uniform_int_distribution<long>(1, 12)(rng); break;
        case Atom::Kind::Localized:
            for (int i = pick(rng); i > 0; --i) den *= atom.primes()[rng() % atom.primes().size()];
            break;
    }
    return make_rational(num(rng), den);
}

OGroupElem random_elem(const OGroupDesc& g, std::mt19937_64& rng) {
    std::vector<Rational> c;
    for (const auto& a : g.factors()) c.push_back(random_coord(a, rng));
    return OGroupElem(c);
}

// Subgroup of Q generated by rationals r_i is (gcd of numerators over common denominator) Z.
Rational rank1_generator(const std::vector<Rational>& gens) {
    Integer den = 1;
    for (const auto& r : gens) den = lcm(den, r.get_den());
    Integer g = 0;
    for (const auto& r : gens) {
        Integer n = r.get_num() * (den / r.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    return Rational(g, den);
}

}  // namespace

TEST_CASE("og_add examples") {
    CHECK(og_add(OGroupDesc::Z(), e1(2), e1(3)) == e1(5));
    CHECK(og_add(OGroupDesc::Z_inv(2), e1(1, 2), e1(1, 4)) == e1(3, 4));
    auto zz = OGroupDesc::Z().times(OGroupDesc::Z());
    CHECK(og_add(zz, e2(1, 2), e2(0, -2)) == e2(1, 0));
    CHECK_THROWS_AS(og_add(zz, e1(1), e2(1, 2)), Error);
}

TEST_CASE("og_cmp examples") {
    auto zz = OGroupDesc::Z().times(OGroupDesc::Z());
    CHECK(og_cmp(zz, e2(1, 0), e2(0, 5)) == Ordering::GT);
    CHECK(og_cmp(OGroupDesc::Q(), e1(1, 3), e1(1, 2)) == Ordering::LT);
    CHECK(og_cmp(zz, e2(3, -7), e2(3, -7)) == Ordering::EQ);
    try {
        og_cmp(zz, e1(1), e2(1, 1));
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("og_is_p_divisible examples") {
    CHECK(og_is_p_divisible(OGroupDesc::Q(), 3).divisible);
    auto z2 = og_is_p_divisible(OGroupDesc::Z(), 2);
    CHECK_FALSE(z2.divisible);
    REQUIRE(z2.witness);
    CHECK(*z2.witness == e1(1));
    CHECK(og_is_p_divisible(OGroupDesc::Z_inv(5), 5).divisible);
    auto z52 = og_is_p_divisible(OGroupDesc::Z_inv(5), 2);
    CHECK_FALSE(z52.divisible);
    CHECK(*z52.witness == e1(1));
    CHECK(og_is_p_divisible(OGroupDesc(), 7).divisible);
    auto qz = og_is_p_divisible(OGroupDesc::Q().times(OGroupDesc::Z()), 3);
    CHECK_FALSE(qz.divisible);
    CHECK(*qz.witness == e2(0, 1));
}

TEST_CASE("og_rationally_independent examples") {
    auto zz = OGroupDesc::Z().times(OGroupDesc::Z());
    CHECK(og_rationally_independent(zz, {e2(0, 1)}, {e2(1, 0)}));
    CHECK_FALSE(og_rationally_independent(OGroupDesc::Q(), {e1(1)}, {e1(1, 2)}));
    CHECK_FALSE(og_rationally_independent(zz, {}, {e2(1, 0), e2(2, 0)}));
    CHECK(og_rationally_independent(zz, {}, {e2(1, 0), e2(1, 1)}));
}

TEST_CASE("og_quotient_order examples") {
    CHECK(og_quotient_order(OGroupDesc::Q(), {e1(1)}, e1(1, 2)).order == 2);
    CHECK(og_quotient_order(OGroupDesc::Z(), {e1(1)}, e1(7)).order == 1);
    CHECK(og_quotient_order(OGroupDesc::Z_inv(3), {e1(1)}, e1(1, 9)).order == 9);
    auto zz = OGroupDesc::Z().times(OGroupDesc::Z());
    CHECK(og_quotient_order(zz, {e2(0, 1)}, e2(1, 0)).infinite);
    CHECK(og_quotient_order(OGroupDesc::Q(), {}, e1(1, 2)).infinite);
    try {
        og_quotient_order(OGroupDesc::Q(), {e1(1)}, e1(1, 20011));
        FAIL("expected BoundExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BoundExceeded);
    }
}

TEST_CASE("og_quotient_order agrees with a rank-1 lattice oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> gens;
        std::vector<OGroupElem> sub;
        int n = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i) {
            Rational r = make_rational(static_cast<long>(rng() % 40) + 1, static_cast<long>(rng() % 12) + 1);
            gens.push_back(r);
            sub.push_back(OGroupElem::scalar(r));
        }
        Rational a = make_rational(static_cast<long>(rng() % 60) - 30, static_cast<long>(rng() % 30) + 1);
        Rational gen = rank1_generator(gens);
        long expect = 0;
        for (long k = 1; k <= 100000; ++k) {
            Rational q = Rational(k) * a / gen;
            if (q.get_den() == 1) {
                expect = k;
                break;
            }
        }
        auto got = og_quotient_order(OGroupDesc::Q(), sub, OGroupElem::scalar(a));
        REQUIRE_FALSE(got.infinite);
        CHECK(got.order == expect);
        // j*a for j < k is outside the subgroup
        for (long j = 1; j < expect; ++j) CHECK(Rational(Rational(j) * a / gen).get_den() != 1);
    }
}

TEST_CASE("order is total and translation invariant") {
    std::mt19937_64 rng(7);
    std::vector<OGroupDesc> groups = {OGroupDesc::Z(), OGroupDesc::Q(), OGroupDesc::Z_inv(3),
                                      OGroupDesc::Q().times(OGroupDesc::Z()),
                                      OGroupDesc::Z_inv(2).times(OGroupDesc::Q())};
    for (const auto& g : groups) {
        for (int i = 0; i < 200; ++i) {
            auto a = random_elem(g, rng), b = random_elem(g, rng), c = random_elem(g, rng);
            auto ab = og_cmp(g, a, b);
            auto ba = og_cmp(g, b, a);
            CHECK((ab == Ordering::EQ) == (ba == Ordering::EQ));
            CHECK((ab == Ordering::LT) == (ba == Ordering::GT));
            if (ab == Ordering::LT) CHECK(og_cmp(g, og_add(g, a, c), og_add(g, b, c)) == Ordering::LT);
            CHECK(g.contains(og_add(g, a, b)));
        }
    }
}

TEST_CASE("p-divisible groups divide every sampled element") {
    std::mt19937_64 rng(5);
    std::vector<std::pair<OGroupDesc, std::int64_t>> cases = {
        {OGroupDesc::Q(), 3}, {OGroupDesc::Z_inv(5), 5}, {OGroupDesc::Q().times(OGroupDesc::Z_inv(2)), 2}};
    for (const auto& [g, p] : cases) {
        REQUIRE(og_is_p_divisible(g, p).divisible);
        for (int i = 0; i < 500; ++i) {
            auto a = random_elem(g, rng);
            auto b = og_divide(g, a, p);
            REQUIRE(b);
            CHECK(*b * Rational(p) == a);
        }
    }
}

TEST_CASE("embedding into the p-divisible hull preserves order and addition") {
    std::mt19937_64 rng(9);
    std::vector<OGroupDesc> groups = {OGroupDesc::Z(), OGroupDesc::Z().times(OGroupDesc::Z_inv(3))};
    for (const auto& g : groups) {
        auto h = g.p_divisible_hull(2);
        CHECK(og_is_p_divisible(h, 2).divisible);
        for (int i = 0; i < 500; ++i) {
            auto a = random_elem(g, rng), b = random_elem(g, rng);
            CHECK(h.contains(a));
            CHECK(og_cmp(g, a, b) == og_cmp(h, a, b));
            CHECK(og_add(g, a, b) == og_add(h, a, b));
        }
    }
    CHECK(OGroupDesc::Z().p_divisible_hull(5) == OGroupDesc::Z_inv(5));
}

TEST_CASE("group printing") {
    CHECK(OGroupDesc::Z().times(OGroupDesc::Q()).to_string() == "Z x Q");
    CHECK(OGroupDesc::Z_inv(5).to_string() == "Z[1/5]");
    CHECK(OGroupDesc().to_string() == "0");
    CHECK(e2(make_rational(-1, 2), 3).to_string() == "(-1/2, 3)");
}
