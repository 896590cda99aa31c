#pragma once

#include "tamefield/poly.hpp"
#include "tamefield/rational.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tamefield {

/// A residue field element: a coefficient vector over F_p (in the fixed
/// generator g of F_q) or an exact rational.
class ResidueElem {
public:
    ResidueElem() = default;
    explicit ResidueElem(std::vector<std::int64_t> coeffs) : rep_(std::move(coeffs)) {}
    explicit ResidueElem(Rational q) : rep_(std::move(q)) {}

    bool is_rational() const { return std::holds_alternative<Rational>(rep_); }
    const std::vector<std::int64_t>& coeffs() const { return std::get<std::vector<std::int64_t>>(rep_); }
    const Rational& rational() const { return std::get<Rational>(rep_); }

    bool operator==(const ResidueElem& other) const { return rep_ == other.rep_; }

private:
    std::variant<std::vector<std::int64_t>, Rational> rep_;
};

/// A residue field: F_q = F_p[g]/(modulus) or the rationals.
class ResidueField {
public:
    using Elem = ResidueElem;
    using Poly = poly::Poly<ResidueField>;

    /// F_{p^n} with the lexicographically smallest monic irreducible modulus,
    /// reading coefficients from X^{n-1} down to X^0 as base-p digits.
    static ResidueField finite(std::int64_t p, int n);
    /// F_{p^n} with a caller-chosen modulus (low degree first, monic); verified irreducible.
    static ResidueField finite_with_modulus(std::int64_t p, std::vector<std::int64_t> modulus);
    static ResidueField rationals();

    bool is_finite() const { return p_ != 0; }
    std::int64_t characteristic() const { return p_; }
    /// p for finite fields, 1 for Q.
    std::int64_t char_exponent() const { return p_ == 0 ? 1 : p_; }
    int degree() const { return n_; }
    /// q = p^n; 0 for Q.
    std::int64_t size() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    Elem zero() const;
    Elem one() const;
    Elem from_int(long n) const;
    Elem from_integer(const Integer& n) const;
    /// Q only.
    Elem from_rational(const Rational& q) const;
    /// The fixed generator g (the class of X); finite fields only.
    Elem generator() const;
    Elem from_coeffs(std::vector<std::int64_t> c) const;

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool contains(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, Integer e) const;
    Elem frobenius(const Elem& a) const;

    /// Every element of a finite field, in a fixed order (zero first).
    std::vector<Elem> elements() const;
    Elem random(std::mt19937_64& rng) const;

    /// Polynomial in g ("2*g^2 + g + 1"); rationals as "a/b".
    std::string to_string(const Elem& a) const;
    /// "F(q)" or "Q".
    std::string name() const;

    bool operator==(const ResidueField& other) const {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

private:
    std::int64_t p_ = 0;
    int n_ = 1;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> modulus_;  // monic, low degree first, length n+1

    std::int64_t reduce(std::int64_t c) const;
};

using ResiduePoly = ResidueField::Poly;

/// fq_make: deterministic construction of F_{p^n}; NotPrime if p is not prime.
ResidueField fq_make(std::int64_t p, int n);

/// Irreducibility over a finite field (Rabin's test).
bool fq_is_irreducible(const ResidueField& k, const ResiduePoly& f);

struct FactorEntry {
    ResiduePoly factor;  // monic irreducible
    int multiplicity;
};

struct Factorization {
    ResidueElem unit;  // leading coefficient
    std::vector<FactorEntry> factors;
};

/// Squarefree, distinct-degree and equal-degree splitting with a fixed seed.
/// UnsupportedField for Q; DivisionByZero for f = 0.
Factorization fq_poly_factor(const ResidueField& k, const ResiduePoly& f);

/// gcd(f, f') = 1. Works for both finite fields and Q.
bool fq_is_separable(const ResidueField& k, const ResiduePoly& f);

/// The unique b with b^p = a in F_q (b = a^{p^{n-1}}).
ResidueElem fq_pth_root(const ResidueField& k, const ResidueElem& a);

/// Roots of f in the (finite) field by exhaustive search.
std::vector<ResidueElem> fq_roots(const ResidueField& k, const ResiduePoly& f);

std::string poly_to_string(const ResidueField& k, const ResiduePoly& f, const std::string& var = "X");

}  // namespace tamefield
