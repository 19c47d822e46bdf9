#ifndef ALGINT_POLY_HPP
#define ALGINT_POLY_HPP

#include "algint/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace algint {

/// Dense polynomial with integer coefficients, stored low-to-high. The
/// highest stored coefficient is always nonzero; the zero polynomial has an
/// empty coefficient sequence and no degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    /// t^n
    static IntPolynomial monomial(std::size_t n, const Integer& coefficient = 1);

    const std::vector<Integer>& coefficients() const { return coefficients_; }
    /// a_j, zero beyond the degree.
    Integer coefficient(std::size_t j) const;

    bool is_zero() const { return coefficients_.empty(); }
    std::optional<std::size_t> degree() const;
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const;
    const Integer& leading() const;
    bool is_monic() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const Integer& k, const IntPolynomial& a);

private:
    void trim();

    std::vector<Integer> coefficients_;
};

Rational evaluate(const IntPolynomial& p, const Rational& x);
Integer evaluate(const IntPolynomial& p, const Integer& x);
/// Sign of p(x) computed on the homogenised integer form, without building
/// the rational value.
int sign_at(const IntPolynomial& p, const Rational& x);

IntPolynomial derivative(const IntPolynomial& p);

/// max |a_j| over all coefficients; undefined-input for the zero polynomial.
Integer height(const IntPolynomial& p);

/// Eisenstein conditions at p: leading coefficient not divisible by p, every
/// lower coefficient divisible by p, constant term not divisible by p^2.
bool eisenstein_check(const IntPolynomial& poly, const Integer& p);

/// Monic irreducibility over the integers (equivalently the rationals).
bool is_irreducible(const IntPolynomial& poly);

/// H(P) + 1 for monic P: every complex root has modulus at most this.
Integer root_bound(const IntPolynomial& poly);

/// Cauchy bound 1 + max|a_j / a_n| for any nonzero polynomial of degree >= 1.
Rational cauchy_bound(const IntPolynomial& poly);

/// gcd of the coefficients (positive), 0 for the zero polynomial.
Integer content(const IntPolynomial& p);
/// p / content(p), normalised to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Quotient and remainder for a monic divisor.
std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& a, const IntPolynomial& monic);
/// Remainder of lc(b)^(deg a - deg b + 1) * a by b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// p / gcd(p, p'), primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Integer polynomial proportional to p(s + c*t) for c = +1 or -1, made
/// primitive with positive leading coefficient. Roots map as r -> (r - s)/c.
IntPolynomial affine_substitute(const IntPolynomial& p, const Rational& s, int c);

/// Text form "[a_0,a_1,...,a_n]", low to high.
IntPolynomial parse_polynomial(std::string_view text);
std::string format_polynomial(const IntPolynomial& p);

/// Rational-coefficient polynomial in the same low-to-high layout; used for
/// curves y = f(x).
struct RationalPolynomial {
    std::vector<Rational> coefficients;

    Rational operator()(const Rational& x) const;
    /// sup |f'| over [low, high], bounded by sum j|c_j| max(|low|,|high|)^(j-1).
    Rational derivative_bound(const Rational& low, const Rational& high) const;
};

RationalPolynomial parse_rational_polynomial(std::string_view text);

} // namespace algint

#endif
