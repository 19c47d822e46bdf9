#ifndef ALGINT_RATIONAL_HPP
#define ALGINT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algint {

using Integer = mpz_class;
/// Exact rational scalar. mpq_class keeps itself canonical (lowest terms,
/// positive denominator) as long as it is built through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Parses "p/q" or "p" (decimal, optional sign). Floats are rejected.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Always "num/den", including "/1" for integers.
std::string format_rational(const Rational& value);
std::string format_integer(const Integer& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
int sign_of(const Rational& value);
int sign_of(const Integer& value);

/// base^exponent for a signed machine exponent; base must be nonzero when
/// exponent < 0.
Rational power(const Rational& base, long exponent);
Integer power(const Integer& base, unsigned long exponent);

/// base^exponent when the result is rational, e.g. 4^(3/2) = 8; nullopt
/// when it is irrational (2^(1/2)). base must be positive.
std::optional<Rational> rational_power(const Integer& base, const Rational& exponent);
/// Same as rational_power but raises ErrorKind::inexact_power.
Rational exact_power(const Integer& base, const Rational& exponent);

Integer factorial(unsigned long n);

/// Deterministic for |n| < 2^64 (trial division / strong probable-prime
/// bases), GMP's probabilistic test above that.
bool is_prime(const Integer& n);

/// All positive divisors of |n| in ascending order; n must be nonzero.
std::vector<Integer> positive_divisors(const Integer& n);

/// Half-open interval (low, high].
struct Interval {
    Rational low;
    Rational high;

    Rational length() const { return high - low; }
    bool contains(const Rational& x) const { return low < x && x <= high; }
};

/// Parses "a,b" into (a, b].
Interval parse_interval(std::string_view text);

} // namespace algint

#endif
