#pragma once

// Dense univariate polynomial algorithms over any field-like descriptor F that
// provides Elem, zero(), one(), add, sub, neg, mul, inv, is_zero and equal.
// Coefficients are stored low degree first; the zero polynomial is empty.

#include "tamefield/error.hpp"

#include <utility>
#include <vector>

namespace tamefield::poly {

template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void trim(const F& k, Poly<F>& f) {
    while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

template <class F>
int degree(const Poly<F>& f) {
    return static_cast<int>(f.size()) - 1;
}

template <class F>
bool equal(const F& k, const Poly<F>& a, const Poly<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!k.equal(a[i], b[i])) return false;
    return true;
}

template <class F>
Poly<F> constant(const F& k, typename F::Elem c) {
    Poly<F> f{std::move(c)};
    trim(k, f);
    return f;
}

template <class F>
Poly<F> monomial(const F& k, typename F::Elem c, int deg) {
    if (k.is_zero(c)) return {};
    Poly<F> f(deg + 1, k.zero());
    f[deg] = std::move(c);
    return f;
}

template <class F>
Poly<F> x(const F& k) {
    return monomial(k, k.one(), 1);
}

template <class F>
Poly<F> add(const F& k, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    trim(k, r);
    return r;
}

template <class F>
Poly<F> neg(const F& k, const Poly<F>& a) {
    Poly<F> r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(k.neg(c));
    return r;
}

template <class F>
Poly<F> sub(const F& k, const Poly<F>& a, const Poly<F>& b) {
    return add(k, a, neg(k, b));
}

template <class F>
Poly<F> scale(const F& k, const Poly<F>& a, const typename F::Elem& c) {
    Poly<F> r;
    r.reserve(a.size());
    for (const auto& e : a) r.push_back(k.mul(e, c));
    trim(k, r);
    return r;
}

template <class F>
Poly<F> mul(const F& k, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (k.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    trim(k, r);
    return r;
}

template <class F>
Poly<F> derivative(const F& k, const Poly<F>& a) {
    if (a.size() <= 1) return {};
    Poly<F> r(a.size() - 1, k.zero());
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = k.mul(k.from_int(static_cast<long>(i)), a[i]);
    trim(k, r);
    return r;
}

template <class F>
typename F::Elem eval(const F& k, const Poly<F>& a, const typename F::Elem& x) {
    auto acc = k.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = k.add(k.mul(acc, x), a[i]);
    return acc;
}

/// Quotient and remainder; the divisor's leading coefficient must be invertible.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& k, const Poly<F>& a, const Poly<F>& b) {
    if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    Poly<F> rem = a;
    trim(k, rem);
    if (rem.size() < b.size()) return {{}, rem};
    Poly<F> quo(rem.size() - b.size() + 1, k.zero());
    const auto lead_inv = k.inv(b.back());
    while (!rem.empty() && rem.size() >= b.size()) {
        const std::size_t shift = rem.size() - b.size();
        auto c = k.mul(rem.back(), lead_inv);
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] = k.sub(rem[shift + i], k.mul(c, b[i]));
        rem.pop_back();
        trim(k, rem);
    }
    trim(k, quo);
    return {quo, rem};
}

template <class F>
Poly<F> rem(const F& k, const Poly<F>& a, const Poly<F>& b) {
    return divmod(k, a, b).second;
}

template <class F>
Poly<F> make_monic(const F& k, const Poly<F>& a) {
    if (a.empty()) return a;
    return scale(k, a, k.inv(a.back()));
}

/// Monic gcd (zero if both are zero).
template <class F>
Poly<F> gcd(const F& k, Poly<F> a, Poly<F> b) {
    trim(k, a);
    trim(k, b);
    while (!b.empty()) {
        auto r = rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(k, a);
}

template <class F>
Poly<F> mul_mod(const F& k, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
    return rem(k, mul(k, a, b), m);
}

/// base^e mod m for a nonnegative integer exponent given as an mpz-like value.
template <class F, class Int>
Poly<F> pow_mod(const F& k, Poly<F> base, Int e, const Poly<F>& m) {
    Poly<F> result = rem(k, constant(k, k.one()), m);
    base = rem(k, base, m);
    while (e > 0) {
        if (e % 2 == 1) result = mul_mod(k, result, base, m);
        e /= 2;
        if (e > 0) base = mul_mod(k, base, base, m);
    }
    return result;
}

template <class F>
Poly<F> pow(const F& k, const Poly<F>& base, unsigned e) {
    Poly<F> result = constant(k, k.one());
    for (unsigned i = 0; i < e; ++i) result = mul(k, result, base);
    return result;
}

}  // namespace tamefield::poly
