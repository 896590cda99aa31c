#pragma once

// Shared random generators for property tests. Everything is seeded by the caller.

#include "tamefield/valfield.hpp"

#include <random>

namespace tamefield::testing {

inline Rational random_coord(const Atom& atom, std::mt19937_64& rng, long lo = -6, long hi = 6) {
    long den = 1;
    switch (atom.kind()) {
        case Atom::Kind::Integers: break;
        case Atom::Kind::Rationals: den = std::uniform_int_distribution<long>(1, 4)(rng); break;
        case Atom::Kind::Localized:
            for (int i = static_cast<int>(rng() % 3); i > 0; --i) den *= atom.primes()[rng() % atom.primes().size()];
            break;
    }
    return make_rational(std::uniform_int_distribution<long>(lo * den, hi * den)(rng), den);
}

inline OGroupElem random_group_elem(const OGroupDesc& g, std::mt19937_64& rng, long lo = -6, long hi = 6) {
    std::vector<Rational> c;
    for (const auto& a : g.factors()) c.push_back(random_coord(a, rng, lo, hi));
    return OGroupElem(c);
}

inline ResidueElem random_nonzero(const ResidueField& k, std::mt19937_64& rng) {
    for (;;) {
        auto c = k.random(rng);
        if (!k.is_zero(c)) return c;
    }
}

/// Exact Hahn element with up to `max_terms` terms.
inline HahnSeries random_hahn(const HahnField& K, std::mt19937_64& rng, int max_terms = 4, long lo = -4, long hi = 6) {
    std::vector<HahnTerm> terms;
    int n = static_cast<int>(rng() % (max_terms + 1));
    for (int i = 0; i < n; ++i) terms.push_back({random_group_elem(K.group(), rng, lo, hi), random_nonzero(K.residue(), rng)});
    return K.make(std::move(terms));
}

/// Exact Hahn element of value >= 0.
inline HahnSeries random_hahn_integral(const HahnField& K, std::mt19937_64& rng, int max_terms = 4) {
    std::vector<HahnTerm> terms;
    int n = static_cast<int>(rng() % (max_terms + 1));
    for (int i = 0; i < n; ++i) {
        auto e = random_group_elem(K.group(), rng, 0, 5);
        if (e.sign() < 0) e = -e;
        terms.push_back({e, random_nonzero(K.residue(), rng)});
    }
    return K.make(std::move(terms));
}

inline LaurentPoly random_laurent(const RatFuncField& F, std::mt19937_64& rng, int max_terms, long lo, long hi) {
    LaurentPoly f;
    Integer den = F.value_generator().get_den();
    int n = 1 + static_cast<int>(rng() % max_terms);
    for (int i = 0; i < n; ++i) {
        long num = std::uniform_int_distribution<long>(lo, hi)(rng);
        Rational e(Integer(num), den);
        e.canonicalize();
        auto c = random_nonzero(F.residue(), rng);
        auto it = f.find(e);
        if (it == f.end())
            f.emplace(e, c);
        else
            it->second = F.residue().add(it->second, c);
    }
    for (auto it = f.begin(); it != f.end();)
        it = F.residue().is_zero(it->second) ? f.erase(it) : std::next(it);
    return f;
}

inline RatFuncElem random_ratfunc(const RatFuncField& F, std::mt19937_64& rng, bool allow_zero = true) {
    if (allow_zero && rng() % 10 == 0) return F.zero();
    for (;;) {
        auto num = random_laurent(F, rng, 3, -3, 4);
        auto den = random_laurent(F, rng, 2, 0, 3);
        if (num.empty() || den.empty()) continue;
        return F.make(num, den);
    }
}

inline OGroupElem q1(long n, long d = 1) { return OGroupElem::scalar(make_rational(n, d)); }

/// k((t^G)) with default precision `prec` in the first coordinate.
inline ValuedField hahn(std::int64_t p, int n, OGroupDesc g, long prec = 20) {
    std::vector<Rational> c = g.zero().coords();
    c[0] = prec;
    return ValuedField(HahnField(fq_make(p, n), std::move(g), OGroupElem(c)));
}

inline ValuedField ratfunc(std::int64_t p, std::optional<int> level) {
    return ValuedField(RatFuncField(fq_make(p, 1), level));
}

inline Element t_pow(const ValuedField& K, long n, long d = 1) {
    return K.monomial(K.residue_field().one(), q1(n, d));
}

}  // namespace tamefield::testing
