#include "tamefield/rational.hpp"
#include "tamefield/error.hpp"

#include <stdexcept>

namespace tamefield {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::WrongRing: return "WrongRing";
        case ErrorKind::PrecisionLoss: return "PrecisionLoss";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::NonUnitValue: return "NonUnitValue";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::UnsupportedBackend: return "UnsupportedBackend";
        case ErrorKind::DependentValues: return "DependentValues";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::UnsupportedShape: return "UnsupportedShape";
        case ErrorKind::StepBoundExceeded: return "StepBoundExceeded";
        case ErrorKind::TailTooShort: return "TailTooShort";
        case ErrorKind::InstanceIllFormed: return "InstanceIllFormed";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::DepthBoundExceeded: return "DepthBoundExceeded";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::SemanticError: return "SemanticError";
        case ErrorKind::InvalidElement: return "InvalidElement";
    }
    return "Unknown";
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool prime_power(std::int64_t n, std::int64_t& p, int& k) {
    if (n < 2) return false;
    auto factors = prime_factors(n);
    if (factors.size() != 1) return false;
    p = factors.front();
    k = 0;
    while (n > 1) {
        n /= p;
        ++k;
    }
    return true;
}

bool is_power_of(const Integer& z, std::int64_t p) {
    if (z <= 0) return false;
    Integer r = z;
    while (r > 1) {
        if (r % p != 0) return false;
        r /= p;
    }
    return true;
}

Integer strip_primes(Integer z, const std::vector<std::int64_t>& primes) {
    if (z < 0) z = -z;
    for (auto p : primes)
        while (z != 0 && z % p == 0) z /= p;
    return z;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace tamefield
