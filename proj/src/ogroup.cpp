#include "tamefield/ogroup.hpp"
#include "tamefield/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tamefield {

Atom Atom::localized(std::vector<std::int64_t> primes) {
    if (primes.empty()) throw Error(ErrorKind::SemanticError, "Z[1/S] needs at least one prime");
    for (auto p : primes)
        if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return Atom(Kind::Localized, std::move(primes));
}

bool Atom::contains(const Rational& q) const {
    switch (kind_) {
        case Kind::Integers: return q.get_den() == 1;
        case Kind::Rationals: return true;
        case Kind::Localized: return strip_primes(q.get_den(), primes_) == 1;
    }
    return false;
}

bool Atom::is_p_divisible(std::int64_t p) const {
    switch (kind_) {
        case Kind::Integers: return false;
        case Kind::Rationals: return true;
        case Kind::Localized: return std::find(primes_.begin(), primes_.end(), p) != primes_.end();
    }
    return false;
}

Atom Atom::p_hull(std::int64_t p) const {
    switch (kind_) {
        case Kind::Integers: return localized({p});
        case Kind::Rationals: return rationals();
        case Kind::Localized: {
            auto ps = primes_;
            ps.push_back(p);
            return localized(ps);
        }
    }
    return *this;
}

std::string Atom::to_string() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::Localized: {
            std::int64_t n = 1;
            for (auto p : primes_) n *= p;
            return "Z[1/" + std::to_string(n) + "]";
        }
    }
    return "?";
}

OGroupElem OGroupElem::unit(std::size_t rank, std::size_t index) {
    std::vector<Rational> c(rank);
    c.at(index) = 1;
    return OGroupElem(std::move(c));
}

bool OGroupElem::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

int OGroupElem::sign() const {
    for (const auto& c : coords_)
        if (c != 0) return sgn(c);
    return 0;
}

namespace {
void same_rank(const OGroupElem& a, const OGroupElem& b) {
    if (a.rank() != b.rank())
        throw Error(ErrorKind::DimensionMismatch, "coordinate lengths " + std::to_string(a.rank()) +
                                                      " and " + std::to_string(b.rank()) + " differ");
}
}  // namespace

OGroupElem OGroupElem::operator+(const OGroupElem& other) const {
    same_rank(*this, other);
    std::vector<Rational> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + other.coords_[i];
    return OGroupElem(std::move(c));
}

OGroupElem OGroupElem::operator-(const OGroupElem& other) const {
    same_rank(*this, other);
    std::vector<Rational> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - other.coords_[i];
    return OGroupElem(std::move(c));
}

OGroupElem OGroupElem::operator-() const {
    std::vector<Rational> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return OGroupElem(std::move(c));
}

OGroupElem OGroupElem::operator*(const Rational& k) const {
    std::vector<Rational> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * k;
    return OGroupElem(std::move(c));
}

OGroupElem OGroupElem::operator/(const Rational& k) const {
    if (k == 0) throw Error(ErrorKind::DivisionByZero, "group element divided by 0");
    std::vector<Rational> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] / k;
    return OGroupElem(std::move(c));
}

OGroupElem& OGroupElem::operator+=(const OGroupElem& other) {
    same_rank(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

OGroupElem operator*(const Rational& k, const OGroupElem& a) { return a * k; }

bool OGroupElem::operator==(const OGroupElem& other) const {
    same_rank(*this, other);
    return coords_ == other.coords_;
}

std::strong_ordering OGroupElem::operator<=>(const OGroupElem& other) const {
    same_rank(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        int c = cmp(coords_[i], other.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string OGroupElem::to_string() const {
    if (coords_.size() == 1) return coords_[0].get_str();
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ", ";
        out += coords_[i].get_str();
    }
    return out + ")";
}

bool OGroupDesc::divisible() const {
    return !factors_.empty() && std::all_of(factors_.begin(), factors_.end(), [](const Atom& a) {
               return a.kind() == Atom::Kind::Rationals;
           });
}

bool OGroupDesc::contains(const OGroupElem& a) const {
    if (a.rank() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
        if (!factors_[i].contains(a[i])) return false;
    return true;
}

void OGroupDesc::require(const OGroupElem& a) const {
    if (a.rank() != rank())
        throw Error(ErrorKind::DimensionMismatch, "element " + a.to_string() + " has " +
                                                      std::to_string(a.rank()) + " coordinates, group " +
                                                      to_string() + " has rank " + std::to_string(rank()));
    for (std::size_t i = 0; i < rank(); ++i)
        if (!factors_[i].contains(a[i]))
            throw Error(ErrorKind::InvalidElement,
                        "coordinate " + a[i].get_str() + " not in factor " + factors_[i].to_string());
}

OGroupDesc OGroupDesc::times(const OGroupDesc& other) const {
    auto f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return OGroupDesc(std::move(f));
}

OGroupDesc OGroupDesc::p_divisible_hull(std::int64_t p) const {
    std::vector<Atom> f;
    f.reserve(factors_.size());
    for (const auto& a : factors_) f.push_back(a.p_hull(p));
    return OGroupDesc(std::move(f));
}

std::string OGroupDesc::to_string() const {
    if (factors_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += " x ";
        out += factors_[i].to_string();
    }
    return out;
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        case Ordering::GT: return "GT";
    }
    return "?";
}

OGroupElem og_add(const OGroupDesc& g, const OGroupElem& a, const OGroupElem& b) {
    if (a.rank() != b.rank()) same_rank(a, b);
    g.require(a);
    g.require(b);
    return a + b;
}

Ordering og_cmp(const OGroupDesc& g, const OGroupElem& a, const OGroupElem& b) {
    if (a.rank() != b.rank()) same_rank(a, b);
    g.require(a);
    g.require(b);
    auto c = a <=> b;
    if (c < 0) return Ordering::LT;
    if (c > 0) return Ordering::GT;
    return Ordering::EQ;
}

PDivisibility og_is_p_divisible(const OGroupDesc& g, std::int64_t p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (!g.factors()[i].is_p_divisible(p)) return {false, OGroupElem::unit(g.rank(), i)};
    }
    return {true, std::nullopt};
}

std::optional<OGroupElem> og_divide(const OGroupDesc& g, const OGroupElem& a, const Integer& n) {
    if (n == 0) throw Error(ErrorKind::DivisionByZero, "division by 0 in group");
    g.require(a);
    OGroupElem b = a / Rational(n);
    if (!g.contains(b)) return std::nullopt;
    return b;
}

namespace {

// Row echelon form over Q; returns the rank.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Integer echelon basis of the lattice spanned by `rows` (all of equal length).
std::vector<std::vector<Integer>> integer_echelon(std::vector<std::vector<Integer>> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t top = 0;
    for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
        while (true) {
            // smallest nonzero |entry| in column c among rows[top..]
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool reduced = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
                for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[top][k];
                if (rows[r][c] != 0) reduced = false;
            }
            if (reduced) {
                ++top;
                break;
            }
        }
    }
    rows.resize(top);
    return rows;
}

}  // namespace

std::size_t og_q_rank(const std::vector<OGroupElem>& elems) {
    if (elems.empty()) return 0;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(elems.size());
    for (const auto& e : elems) {
        if (e.rank() != elems.front().rank()) same_rank(e, elems.front());
        rows.push_back(e.coords());
    }
    return rational_rank(std::move(rows));
}

bool og_rationally_independent(const OGroupDesc& g, const std::vector<OGroupElem>& over,
                               const std::vector<OGroupElem>& elems) {
    for (const auto& e : over) g.require(e);
    for (const auto& e : elems) g.require(e);
    if (elems.empty()) return true;
    std::vector<OGroupElem> all = over;
    all.insert(all.end(), elems.begin(), elems.end());
    return og_q_rank(all) == og_q_rank(over) + elems.size();
}

QuotientOrder og_quotient_order(const OGroupDesc& g, const std::vector<OGroupElem>& sub_gens,
                                const OGroupElem& a, std::int64_t bound) {
    g.require(a);
    for (const auto& s : sub_gens) g.require(s);
    const std::size_t n = g.rank();

    // Clear denominators with one common scale so the subgroup becomes an integer lattice.
    Integer scale = 1;
    for (const auto& c : a.coords()) scale = lcm(scale, c.get_den());
    for (const auto& s : sub_gens)
        for (const auto& c : s.coords()) scale = lcm(scale, c.get_den());

    auto to_int = [&](const OGroupElem& e) {
        std::vector<Integer> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational q = e[i] * Rational(scale);
            v[i] = q.get_num();
        }
        return v;
    };
    std::vector<std::vector<Integer>> rows;
    for (const auto& s : sub_gens) rows.push_back(to_int(s));
    auto basis = integer_echelon(std::move(rows));
    std::vector<Integer> target = to_int(a);

    // Express target in the echelon basis over Q; the basis is independent so this is unique.
    std::vector<Rational> residual(n);
    for (std::size_t i = 0; i < n; ++i) residual[i] = Rational(target[i]);
    std::vector<Rational> coeff;
    for (const auto& row : basis) {
        std::size_t piv = 0;
        while (row[piv] == 0) ++piv;
        Rational c = residual[piv] / Rational(row[piv]);
        for (std::size_t k = piv; k < n; ++k) residual[k] -= c * Rational(row[k]);
        coeff.push_back(c);
    }
    for (const auto& r : residual)
        if (r != 0) return {true, 1};

    Integer order = 1;
    for (const auto& c : coeff) order = lcm(order, c.get_den());
    if (order > bound)
        throw Error(ErrorKind::BoundExceeded,
                    "order " + order.get_str() + " exceeds search bound " + std::to_string(bound));
    return {false, order};
}

Integer og_order_modulo(const OGroupDesc& g, const OGroupElem& a) {
    if (a.rank() != g.rank())
        throw Error(ErrorKind::DimensionMismatch, "element rank does not match group rank");
    Integer order = 1;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const Atom& atom = g.factors()[i];
        Integer den = a[i].get_den();
        switch (atom.kind()) {
            case Atom::Kind::Integers: order = lcm(order, den); break;
            case Atom::Kind::Rationals: break;
            case Atom::Kind::Localized: order = lcm(order, strip_primes(den, atom.primes())); break;
        }
    }
    return order;
}

}  // namespace tamefield
