#include "tamefield/finfield.hpp"
#include "tamefield/error.hpp"

#include <algorithm>

namespace tamefield {

namespace {

using Fp = ResidueField;

std::string factor_text(const std::string& coeff) {
    if (coeff.find_first_of("+ ") != std::string::npos) return "(" + coeff + ")";
    return coeff;
}

}  // namespace

ResidueField ResidueField::finite_with_modulus(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() % p != 1)
        throw Error(ErrorKind::SemanticError, "modulus must be monic of degree >= 1");
    ResidueField k;
    k.p_ = p;
    k.n_ = static_cast<int>(modulus.size()) - 1;
    k.q_ = 1;
    for (int i = 0; i < k.n_; ++i) k.q_ *= p;
    for (auto& c : modulus) c = ((c % p) + p) % p;
    k.modulus_ = std::move(modulus);
    if (k.n_ > 1) {
        auto prime_field = finite(p, 1);
        ResiduePoly m;
        for (auto c : k.modulus_) m.push_back(prime_field.from_int(static_cast<long>(c)));
        if (!fq_is_irreducible(prime_field, m))
            throw Error(ErrorKind::SemanticError, "modulus is reducible over F_" + std::to_string(p));
    }
    return k;
}

ResidueField ResidueField::finite(std::int64_t p, int n) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) throw Error(ErrorKind::SemanticError, "extension degree must be >= 1");
    if (n == 1) {
        ResidueField k;
        k.p_ = p;
        k.n_ = 1;
        k.q_ = p;
        k.modulus_ = {0, 1};
        return k;
    }
    auto prime_field = finite(p, 1);
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> m(n + 1, 0);
        std::int64_t r = idx;
        for (int i = 0; i < n; ++i) {
            m[i] = r % p;
            r /= p;
        }
        m[n] = 1;
        if (m[0] == 0) continue;  // divisible by X
        ResiduePoly f;
        for (auto c : m) f.push_back(prime_field.from_int(static_cast<long>(c)));
        if (fq_is_irreducible(prime_field, f)) {
            ResidueField k;
            k.p_ = p;
            k.n_ = n;
            k.q_ = count;
            k.modulus_ = std::move(m);
            return k;
        }
    }
    throw Error(ErrorKind::SemanticError, "no irreducible polynomial found");  // unreachable
}

ResidueField ResidueField::rationals() { return ResidueField(); }

ResidueField fq_make(std::int64_t p, int n) { return ResidueField::finite(p, n); }

std::int64_t ResidueField::reduce(std::int64_t c) const {
    c %= p_;
    return c < 0 ? c + p_ : c;
}

ResidueElem ResidueField::zero() const {
    if (!is_finite()) return ResidueElem(Rational(0));
    return ResidueElem(std::vector<std::int64_t>(n_, 0));
}

ResidueElem ResidueField::one() const { return from_int(1); }

ResidueElem ResidueField::from_int(long n) const {
    if (!is_finite()) return ResidueElem(Rational(n));
    std::vector<std::int64_t> c(n_, 0);
    c[0] = reduce(n);
    return ResidueElem(std::move(c));
}

ResidueElem ResidueField::from_integer(const Integer& n) const {
    if (!is_finite()) return ResidueElem(Rational(n));
    Integer r = n % p_;
    if (r < 0) r += p_;
    return from_int(r.get_si());
}

ResidueElem ResidueField::from_rational(const Rational& q) const {
    if (is_finite()) return div(from_integer(q.get_num()), from_integer(q.get_den()));
    return ResidueElem(q);
}

ResidueElem ResidueField::generator() const {
    if (!is_finite()) throw Error(ErrorKind::UnsupportedField, "Q has no generator g");
    if (n_ == 1) return from_int(-modulus_[0]);
    std::vector<std::int64_t> c(n_, 0);
    c[1] = 1;
    return ResidueElem(std::move(c));
}

ResidueElem ResidueField::from_coeffs(std::vector<std::int64_t> c) const {
    if (!is_finite()) throw Error(ErrorKind::UnsupportedField, "coefficient vectors need a finite field");
    if (static_cast<int>(c.size()) > n_) {
        // reduce a longer polynomial in g modulo the modulus
        ResidueElem acc = zero();
        ResidueElem gpow = one();
        for (auto v : c) {
            acc = add(acc, mul(from_int(static_cast<long>(reduce(v))), gpow));
            gpow = mul(gpow, generator());
        }
        return acc;
    }
    c.resize(n_, 0);
    for (auto& v : c) v = reduce(v);
    return ResidueElem(std::move(c));
}

bool ResidueField::is_zero(const Elem& a) const {
    if (!is_finite()) return a.rational() == 0;
    const auto& c = a.coeffs();
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

bool ResidueField::is_one(const Elem& a) const { return a == one(); }

bool ResidueField::contains(const Elem& a) const {
    if (!is_finite()) return a.is_rational();
    if (a.is_rational()) return false;
    const auto& c = a.coeffs();
    if (static_cast<int>(c.size()) != n_) return false;
    return std::all_of(c.begin(), c.end(), [&](std::int64_t v) { return v >= 0 && v < p_; });
}

ResidueElem ResidueField::add(const Elem& a, const Elem& b) const {
    if (!is_finite()) return ResidueElem(Rational(a.rational() + b.rational()));
    std::vector<std::int64_t> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = reduce(a.coeffs()[i] + b.coeffs()[i]);
    return ResidueElem(std::move(c));
}

ResidueElem ResidueField::sub(const Elem& a, const Elem& b) const {
    if (!is_finite()) return ResidueElem(Rational(a.rational() - b.rational()));
    std::vector<std::int64_t> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = reduce(a.coeffs()[i] - b.coeffs()[i]);
    return ResidueElem(std::move(c));
}

ResidueElem ResidueField::neg(const Elem& a) const {
    if (!is_finite()) return ResidueElem(Rational(-a.rational()));
    std::vector<std::int64_t> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = reduce(-a.coeffs()[i]);
    return ResidueElem(std::move(c));
}

ResidueElem ResidueField::mul(const Elem& a, const Elem& b) const {
    if (!is_finite()) return ResidueElem(Rational(a.rational() * b.rational()));
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    if (n_ == 1) return ResidueElem(std::vector<std::int64_t>{reduce(x[0] * y[0])});
    std::vector<std::int64_t> r(2 * n_ - 1, 0);
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) r[i + j] = reduce(r[i + j] + x[i] * y[j]);
    }
    for (int d = 2 * n_ - 2; d >= n_; --d) {
        const std::int64_t c = r[d];
        if (c == 0) continue;
        for (int i = 0; i < n_; ++i) r[d - n_ + i] = reduce(r[d - n_ + i] - c * modulus_[i]);
        r[d] = 0;
    }
    r.resize(n_);
    return ResidueElem(std::move(r));
}

ResidueElem ResidueField::pow(const Elem& a, Integer e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem result = one();
    Elem base = a;
    while (e > 0) {
        if (e % 2 == 1) result = mul(result, base);
        e /= 2;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

ResidueElem ResidueField::inv(const Elem& a) const {
    if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in " + name());
    if (!is_finite()) return ResidueElem(Rational(1 / a.rational()));
    return pow(a, Integer(q_ - 2));
}

ResidueElem ResidueField::frobenius(const Elem& a) const {
    if (!is_finite()) return a;
    return pow(a, Integer(p_));
}

std::vector<ResidueElem> ResidueField::elements() const {
    if (!is_finite()) throw Error(ErrorKind::UnsupportedField, "Q is infinite");
    std::vector<ResidueElem> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (std::int64_t idx = 0; idx < q_; ++idx) {
        std::vector<std::int64_t> c(n_);
        std::int64_t r = idx;
        for (int i = 0; i < n_; ++i) {
            c[i] = r % p_;
            r /= p_;
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

ResidueElem ResidueField::random(std::mt19937_64& rng) const {
    if (!is_finite()) {
        std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
        return ResidueElem(make_rational(num(rng), den(rng)));
    }
    std::uniform_int_distribution<std::int64_t> d(0, p_ - 1);
    std::vector<std::int64_t> c(n_);
    for (auto& v : c) v = d(rng);
    return ResidueElem(std::move(c));
}

std::string ResidueField::to_string(const Elem& a) const {
    if (!is_finite()) return a.rational().get_str();
    const auto& c = a.coeffs();
    std::string out;
    for (int d = n_ - 1; d >= 0; --d) {
        if (c[d] == 0) continue;
        std::string term;
        if (d == 0) {
            term = std::to_string(c[d]);
        } else {
            term = c[d] == 1 ? "" : std::to_string(c[d]) + "*";
            term += d == 1 ? "g" : "g^" + std::to_string(d);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string ResidueField::name() const {
    if (!is_finite()) return "Q";
    return "F(" + std::to_string(q_) + ")";
}

bool fq_is_irreducible(const Fp& k, const ResiduePoly& f0) {
    if (!k.is_finite()) throw Error(ErrorKind::UnsupportedField, "irreducibility test needs a finite field");
    ResiduePoly f = f0;
    poly::trim(k, f);
    const int d = poly::degree<Fp>(f);
    if (d < 1) return false;
    if (d == 1) return true;
    f = poly::make_monic(k, f);
    const auto X = poly::x(k);
    auto frob_power = [&](int j) {
        ResiduePoly h = poly::rem(k, X, f);
        for (int i = 0; i < j; ++i) h = poly::pow_mod(k, h, Integer(k.size()), f);
        return h;
    };
    if (!poly::equal(k, frob_power(d), poly::rem(k, X, f))) return false;
    for (auto r : prime_factors(d)) {
        auto h = poly::sub(k, frob_power(d / static_cast<int>(r)), X);
        auto g = poly::gcd(k, f, h);
        if (poly::degree<Fp>(g) != 0) return false;
    }
    return true;
}

namespace {

ResiduePoly poly_pth_root(const Fp& k, const ResiduePoly& f) {
    const auto p = static_cast<std::size_t>(k.characteristic());
    ResiduePoly r;
    for (std::size_t i = 0; i < f.size(); i += p) r.push_back(fq_pth_root(k, f[i]));
    poly::trim(k, r);
    return r;
}

bool is_one(const Fp& k, const ResiduePoly& f) { return f.size() == 1 && k.is_one(f[0]); }

void squarefree(const Fp& k, const ResiduePoly& f, int mult, std::vector<FactorEntry>& out) {
    if (poly::degree<Fp>(f) < 1) return;
    auto g = poly::derivative(k, f);
    if (g.empty()) {
        squarefree(k, poly_pth_root(k, f), mult * static_cast<int>(k.characteristic()), out);
        return;
    }
    auto c = poly::gcd(k, f, g);
    auto w = poly::divmod(k, f, c).first;
    int i = 1;
    while (!is_one(k, w)) {
        auto y = poly::gcd(k, w, c);
        auto fac = poly::divmod(k, w, y).first;
        if (!is_one(k, fac)) out.push_back({poly::make_monic(k, fac), i * mult});
        ++i;
        w = y;
        c = poly::divmod(k, c, y).first;
    }
    if (!is_one(k, c))
        squarefree(k, poly_pth_root(k, c), mult * static_cast<int>(k.characteristic()), out);
}

std::vector<std::pair<ResiduePoly, int>> distinct_degree(const Fp& k, ResiduePoly f) {
    std::vector<std::pair<ResiduePoly, int>> out;
    const auto X = poly::x(k);
    ResiduePoly h = poly::rem(k, X, f);
    int i = 1;
    while (poly::degree<Fp>(f) >= 2 * i) {
        h = poly::pow_mod(k, h, Integer(k.size()), f);
        auto g = poly::gcd(k, poly::sub(k, h, X), f);
        if (!is_one(k, g)) {
            out.emplace_back(g, i);
            f = poly::divmod(k, f, g).first;
            h = poly::rem(k, h, f);
        }
        ++i;
    }
    if (poly::degree<Fp>(f) >= 1) out.emplace_back(f, poly::degree<Fp>(f));
    return out;
}

void equal_degree(const Fp& k, const ResiduePoly& f, int d, std::mt19937_64& rng,
                  std::vector<ResiduePoly>& out) {
    const int n = poly::degree<Fp>(f);
    if (n == d) {
        out.push_back(poly::make_monic(k, f));
        return;
    }
    Integer qd = 1;
    for (int i = 0; i < d; ++i) qd *= k.size();
    while (true) {
        ResiduePoly a(n, k.zero());
        for (auto& c : a) c = k.random(rng);
        poly::trim(k, a);
        if (poly::degree<Fp>(a) < 1) continue;
        ResiduePoly b;
        if (k.characteristic() == 2) {
            // trace map a + a^2 + ... + a^{2^{m d - 1}} where q = 2^m
            ResiduePoly t = poly::rem(k, a, f), acc = t;
            const int steps = k.degree() * d;
            for (int i = 1; i < steps; ++i) {
                t = poly::mul_mod(k, t, t, f);
                acc = poly::add(k, acc, t);
            }
            b = acc;
        } else {
            b = poly::sub(k, poly::pow_mod(k, a, Integer((qd - 1) / 2), f), poly::constant(k, k.one()));
        }
        auto g = poly::gcd(k, b, f);
        const int dg = poly::degree<Fp>(g);
        if (dg > 0 && dg < n) {
            equal_degree(k, g, d, rng, out);
            equal_degree(k, poly::divmod(k, f, g).first, d, rng, out);
            return;
        }
    }
}

bool poly_less(const ResiduePoly& a, const ResiduePoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i].coeffs() != b[i].coeffs()) return a[i].coeffs() < b[i].coeffs();
    }
    return false;
}

}  // namespace

Factorization fq_poly_factor(const Fp& k, const ResiduePoly& f0) {
    if (!k.is_finite())
        throw Error(ErrorKind::UnsupportedField, "factorization over Q is limited to gcd diagnostics");
    ResiduePoly f = f0;
    poly::trim(k, f);
    if (f.empty()) throw Error(ErrorKind::DivisionByZero, "cannot factor the zero polynomial");
    Factorization result{f.back(), {}};
    if (f.size() == 1) return result;
    f = poly::make_monic(k, f);

    std::vector<FactorEntry> sqf;
    squarefree(k, f, 1, sqf);

    std::mt19937_64 rng(0x7a3e5eedULL);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(k, part)) {
            std::vector<ResiduePoly> irr;
            equal_degree(k, block, d, rng, irr);
            for (auto& g : irr) {
                auto it = std::find_if(result.factors.begin(), result.factors.end(),
                                       [&](const FactorEntry& e) { return poly::equal(k, e.factor, g); });
                if (it != result.factors.end())
                    it->multiplicity += mult;
                else
                    result.factors.push_back({std::move(g), mult});
            }
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return poly_less(a.factor, b.factor); });
    return result;
}

bool fq_is_separable(const Fp& k, const ResiduePoly& f0) {
    ResiduePoly f = f0;
    poly::trim(k, f);
    auto g = poly::gcd(k, f, poly::derivative(k, f));
    return g.size() == 1;
}

ResidueElem fq_pth_root(const Fp& k, const ResidueElem& a) {
    if (!k.is_finite()) throw Error(ErrorKind::UnsupportedField, "p-th roots need residue characteristic p > 0");
    ResidueElem b = a;
    for (int i = 1; i < k.degree(); ++i) b = k.frobenius(b);
    return b;
}

std::vector<ResidueElem> fq_roots(const Fp& k, const ResiduePoly& f) {
    std::vector<ResidueElem> out;
    for (const auto& a : k.elements())
        if (k.is_zero(poly::eval(k, f, a))) out.push_back(a);
    return out;
}

std::string poly_to_string(const Fp& k, const ResiduePoly& f, const std::string& var) {
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (k.is_zero(f[i])) continue;
        std::string c = k.to_string(f[i]);
        std::string term;
        if (i == 0) {
            term = c;
        } else {
            std::string mono = i == 1 ? var : var + "^" + std::to_string(i);
            term = k.is_one(f[i]) ? mono : factor_text(c) + "*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace tamefield
