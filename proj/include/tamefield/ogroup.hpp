#pragma once

#include "tamefield/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tamefield {

/// One lexicographic factor of an ordered group: Z, Q, or a localization
/// Z[1/S] of Z at a finite nonempty set S of primes.
class Atom {
public:
    enum class Kind { Integers, Rationals, Localized };

    static Atom integers() { return Atom(Kind::Integers, {}); }
    static Atom rationals() { return Atom(Kind::Rationals, {}); }
    /// Z[1/S]; `primes` must be nonempty and prime. Duplicates are dropped.
    static Atom localized(std::vector<std::int64_t> primes);

    Kind kind() const { return kind_; }
    const std::vector<std::int64_t>& primes() const { return primes_; }

    bool contains(const Rational& q) const;
    bool is_p_divisible(std::int64_t p) const;
    /// The p-divisible hull: Z -> Z[1/p], Z[1/S] -> Z[1/(S+p)], Q -> Q.
    Atom p_hull(std::int64_t p) const;

    std::string to_string() const;

    bool operator==(const Atom&) const = default;

private:
    Atom(Kind kind, std::vector<std::int64_t> primes) : kind_(kind), primes_(std::move(primes)) {}
    Kind kind_;
    std::vector<std::int64_t> primes_;
};

/// An element of a finite-rank ordered group, one exact coordinate per factor.
/// Comparison is lexicographic with the left-most coordinate most significant.
class OGroupElem {
public:
    OGroupElem() = default;
    explicit OGroupElem(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static OGroupElem zero(std::size_t rank) { return OGroupElem(std::vector<Rational>(rank)); }
    static OGroupElem unit(std::size_t rank, std::size_t index);
    static OGroupElem scalar(const Rational& q) { return OGroupElem({q}); }

    std::size_t rank() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;
    int sign() const;

    OGroupElem operator+(const OGroupElem& other) const;
    OGroupElem operator-(const OGroupElem& other) const;
    OGroupElem operator-() const;
    OGroupElem operator*(const Rational& k) const;
    OGroupElem operator/(const Rational& k) const;
    OGroupElem& operator+=(const OGroupElem& other);

    bool operator==(const OGroupElem& other) const;
    std::strong_ordering operator<=>(const OGroupElem& other) const;

    /// Rank-1 elements print as a bare rational, others as "(a, b, ...)".
    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

OGroupElem operator*(const Rational& k, const OGroupElem& a);

/// A lexicographic product of atoms; the empty product is the trivial group.
class OGroupDesc {
public:
    OGroupDesc() = default;
    explicit OGroupDesc(std::vector<Atom> factors) : factors_(std::move(factors)) {}

    static OGroupDesc Z() { return OGroupDesc({Atom::integers()}); }
    static OGroupDesc Q() { return OGroupDesc({Atom::rationals()}); }
    static OGroupDesc Z_inv(std::int64_t p) { return OGroupDesc({Atom::localized({p})}); }

    const std::vector<Atom>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    bool trivial() const { return factors_.empty(); }
    /// True when every factor is Q (and the group is nontrivial).
    bool divisible() const;

    bool contains(const OGroupElem& a) const;
    /// Throws InvalidElement (or DimensionMismatch) if `a` is not in the group.
    void require(const OGroupElem& a) const;

    OGroupElem zero() const { return OGroupElem::zero(rank()); }

    /// Lex product `this x other`.
    OGroupDesc times(const OGroupDesc& other) const;
    OGroupDesc p_divisible_hull(std::int64_t p) const;

    std::string to_string() const;
    bool operator==(const OGroupDesc&) const = default;

private:
    std::vector<Atom> factors_;
};

enum class Ordering { LT, EQ, GT };

std::string to_string(Ordering o);

OGroupElem og_add(const OGroupDesc& g, const OGroupElem& a, const OGroupElem& b);
Ordering og_cmp(const OGroupDesc& g, const OGroupElem& a, const OGroupElem& b);

struct PDivisibility {
    bool divisible = false;
    std::optional<OGroupElem> witness;  // an element with no p-th part, when not divisible
};

PDivisibility og_is_p_divisible(const OGroupDesc& g, std::int64_t p);

/// b in g with n*b = a, if one exists.
std::optional<OGroupElem> og_divide(const OGroupDesc& g, const OGroupElem& a, const Integer& n);

/// Dimension of the Q-span of `elems`.
std::size_t og_q_rank(const std::vector<OGroupElem>& elems);

/// True iff no nontrivial rational combination of `elems` lies in Q*span(over).
bool og_rationally_independent(const OGroupDesc& g, const std::vector<OGroupElem>& over,
                               const std::vector<OGroupElem>& elems);

struct QuotientOrder {
    bool infinite = false;
    Integer order = 1;  // meaningful when !infinite

    bool operator==(const QuotientOrder&) const = default;
};

inline constexpr std::int64_t kDefaultOrderBound = 10000;

/// Least k >= 1 with k*a in the subgroup generated by `sub_gens`, or INFINITE.
/// The answer comes from an integer echelon basis of the subgroup, so it is
/// always certified; orders beyond `bound` raise BoundExceeded.
QuotientOrder og_quotient_order(const OGroupDesc& g, const std::vector<OGroupElem>& sub_gens,
                                const OGroupElem& a, std::int64_t bound = kDefaultOrderBound);

/// Least k >= 1 with k*a in g, for a in the divisible hull Q (x) g.
Integer og_order_modulo(const OGroupDesc& g, const OGroupElem& a);

}  // namespace tamefield
