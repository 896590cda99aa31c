#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace tamefield {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "a" or "a/b" (optionally signed); throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);

/// True when n >= 2 has no divisor other than 1 and itself.
bool is_prime(std::int64_t n);

/// Distinct prime divisors of n > 0, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Writes n = p^k for prime p; returns false if n is not a prime power.
bool prime_power(std::int64_t n, std::int64_t& p, int& k);

/// True iff z > 0 and z = p^k for some k >= 0.
bool is_power_of(const Integer& z, std::int64_t p);

/// The part of z > 0 coprime to every prime in `primes`.
Integer strip_primes(Integer z, const std::vector<std::int64_t>& primes);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace tamefield
