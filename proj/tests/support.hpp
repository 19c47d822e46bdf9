#ifndef ALGINT_TESTS_SUPPORT_HPP
#define ALGINT_TESTS_SUPPORT_HPP

// Shared generators and brute-force oracles for the unit tests.

#include "algint/error.hpp"
#include "algint/poly.hpp"
#include "algint/rational.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace testing {

using algint::Integer;
using algint::IntPolynomial;
using algint::Rational;

inline Rational q(long num, long den = 1) { return algint::make_rational(num, den); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    // k/den in [lo, hi], den uniform in [1, max_den]
    Rational rational(const Rational& lo, const Rational& hi, long max_den) {
        long den;
        Integer a, b;
        do {
            den = integer(1, max_den);
            a = algint::ceil_of(lo * den);
            b = algint::floor_of(hi * den);
        } while (a > b);
        long k = integer(a.get_si(), b.get_si());
        return q(k, den);
    }

    IntPolynomial monic(std::size_t degree, long h) {
        std::vector<Integer> c(degree + 1);
        for (std::size_t j = 0; j < degree; ++j) c[j] = integer(-h, h);
        c[degree] = 1;
        return IntPolynomial(c);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Long division by a monic divisor using schoolbook arithmetic.
inline bool divides(const IntPolynomial& d, const IntPolynomial& p) {
    std::vector<Integer> r = p.coefficients();
    const auto& dc = d.coefficients();
    const std::size_t dd = dc.size() - 1;
    for (std::size_t top = r.size(); top-- > dd;) {
        Integer lead = r[top];
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) r[top - dd + j] -= lead * dc[j];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

// Tries every monic factor of degree 1..deg/2 with coefficients bounded by
// `bound`; independent of the library's interpolation search.
inline bool brute_force_reducible(const IntPolynomial& p, long bound) {
    const std::size_t n = p.deg();
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        std::vector<long> c(k, -bound);
        for (;;) {
            std::vector<Integer> coeffs(c.begin(), c.end());
            coeffs.push_back(1);
            if (divides(IntPolynomial(coeffs), p)) return true;
            std::size_t i = 0;
            while (i < k && c[i] == bound) c[i++] = -bound;
            if (i == k) break;
            ++c[i];
        }
    }
    return false;
}

// Durand-Kerner, floating point; used only to classify the nearest root.
inline std::vector<std::complex<long double>> complex_roots(const IntPolynomial& p) {
    using C = std::complex<long double>;
    const std::size_t n = p.deg();
    std::vector<long double> a(n + 1);
    for (std::size_t j = 0; j <= n; ++j) a[j] = p.coefficient(j).get_d() / p.leading().get_d();
    std::vector<C> z(n);
    const C seed(0.4L, 0.9L);
    C pw = 1;
    for (auto& zi : z) zi = (pw *= seed);
    for (int iter = 0; iter < 2000; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < n; ++i) {
            C num = 0;
            for (std::size_t j = n + 1; j-- > 0;) num = num * z[i] + a[j];
            C den = 1;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) den *= z[i] - z[k];
            C step = num / den;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-18L) break;
    }
    return z;
}

// p + q sqrt(d) for a fixed non-square d > 0, with exact sign.
struct Surd {
    Rational p;
    Rational q;
    long d = 0;

    friend Surd operator+(const Surd& a, const Surd& b) { return {a.p + b.p, a.q + b.q, a.d}; }
    friend Surd operator-(const Surd& a, const Surd& b) { return {a.p - b.p, a.q - b.q, a.d}; }
    friend Surd operator*(const Surd& a, const Surd& b) {
        return {a.p * b.p + a.q * b.q * a.d, a.p * b.q + a.q * b.p, a.d};
    }
    Surd plus(const Rational& r) const { return {p + r, q, d}; }

    int sign() const {
        int sp = sgn(p), sq = sgn(q);
        if (sq == 0) return sp;
        if (sp == 0 || sp == sq) return sq;
        return p * p > q * q * d ? sp : sq;
    }
};

// Horner evaluation of a rational polynomial at a surd.
inline Surd evaluate_surd(const std::vector<Rational>& f, const Surd& x) {
    Surd acc{0, 0, x.d};
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x).plus(*it);
    return acc;
}

// Kind of the algint::Error thrown by fn, internal if none is thrown.
template <class F>
algint::ErrorKind kind_of(F&& fn) {
    try {
        fn();
    } catch (const algint::Error& e) {
        return e.kind();
    }
    return algint::ErrorKind::internal;
}

} // namespace testing

#endif
