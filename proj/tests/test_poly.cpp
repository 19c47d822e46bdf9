#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algint/error.hpp"
#include "algint/poly.hpp"
#include "algint/rational.hpp"
#include "support.hpp"

using namespace algint;
using testing::q;

TEST_CASE("rationals parse and print exactly") {
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("-7") == q(-7));
    CHECK(format_rational(q(-3, 6)) == "-1/2");
    CHECK(format_rational(q(5)) == "5/1");
    CHECK_THROWS_AS(parse_rational("0.5"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK(floor_of(q(-7, 2)) == -4);
    CHECK(ceil_of(q(-7, 2)) == -3);
    Interval i = parse_interval("-1/2,1/2");
    CHECK(i.low == q(-1, 2));
    CHECK(i.length() == 1);
    CHECK_FALSE(i.contains(q(-1, 2)));
    CHECK(i.contains(q(1, 2)));
}

TEST_CASE("exact powers") {
    CHECK(exact_power(Integer(4), q(-3, 2)) == q(1, 8));
    CHECK(exact_power(Integer(256), q(1, 4)) == 4);
    CHECK_FALSE(rational_power(Integer(2), q(1, 2)).has_value());
    try {
        exact_power(Integer(2), q(1, 2));
        FAIL("expected inexact-power");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::inexact_power);
    }
}

TEST_CASE("primes and divisors") {
    CHECK(is_prime(Integer(2)));
    CHECK_FALSE(is_prime(Integer(1)));
    CHECK(is_prime(Integer(127)));
    CHECK_FALSE(is_prime(Integer(3) * 5 * 7 * 11));
    CHECK(is_prime(Integer("18446744073709551557")));
    CHECK_FALSE(is_prime(Integer("18446744073709551559")));
    // sieve cross-check below 5000
    std::vector<bool> composite(5000, false);
    for (unsigned long i = 2; i < 5000; ++i) {
        if (!composite[i])
            for (unsigned long j = i * i; j < 5000; j += i) composite[j] = true;
        CHECK(is_prime(Integer(i)) == !composite[i]);
    }
    CHECK(positive_divisors(Integer(-12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    Integer big = Integer(1000003) * 998244353;
    auto d = positive_divisors(big);
    CHECK(d.size() == 4);
    CHECK(d[1] == 1000003);
}

TEST_CASE("evaluate") {
    CHECK(evaluate(IntPolynomial{-2, 0, 1}, q(3, 2)) == q(1, 4));
    CHECK(evaluate(IntPolynomial{0, 1}, q(0)) == 0);
    CHECK(evaluate(IntPolynomial{1, 2, 0, 1}, q(1)) == 4);
    CHECK(evaluate(IntPolynomial{}, q(5)) == 0);
}

TEST_CASE("derivative") {
    CHECK(derivative(IntPolynomial{-2, 0, 1}) == IntPolynomial{0, 2});
    CHECK(derivative(IntPolynomial{5}).is_zero());
    CHECK(derivative(IntPolynomial{1, 2, 0, 1}) == IntPolynomial{2, 0, 3});
}

TEST_CASE("height") {
    CHECK(height(IntPolynomial{2, -5, 0, 1}) == 5);
    CHECK(height(IntPolynomial::monomial(7)) == 1);
    CHECK(height(IntPolynomial{-7}) == 7);
    try {
        height(IntPolynomial{});
        FAIL("expected undefined-input");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::undefined_input);
    }
}

TEST_CASE("eisenstein_check") {
    CHECK(eisenstein_check(IntPolynomial{-2, 0, 1}, Integer(2)));
    CHECK_FALSE(eisenstein_check(IntPolynomial{-1, 0, 1}, Integer(2)));
    CHECK_FALSE(eisenstein_check(IntPolynomial{4, 0, 1}, Integer(2)));
    try {
        eisenstein_check(IntPolynomial{-2, 0, 1}, Integer(4));
        FAIL("expected invalid-argument");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_argument);
    }
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(IntPolynomial{-2, 0, 1}));
    CHECK_FALSE(is_irreducible(IntPolynomial{-1, 0, 1}));
    CHECK(is_irreducible(IntPolynomial{1, 0, 0, 0, 1}));
    CHECK_FALSE(is_irreducible(IntPolynomial{4, 0, 0, 0, 1})); // (t^2+2t+2)(t^2-2t+2)
    CHECK_FALSE(is_irreducible(IntPolynomial{1, 0, 1, 0, 1})); // (t^2+t+1)(t^2-t+1)
    CHECK(is_irreducible(IntPolynomial{-1, -1, 0, 0, 0, 1}));
    CHECK_THROWS_AS(is_irreducible(IntPolynomial{1, 2}), Error);
    CHECK_THROWS_AS(is_irreducible(IntPolynomial{3}), Error);
}

TEST_CASE("is_irreducible matches brute-force factor search (deg <= 3, H <= 5)") {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<long> c(n, -5);
        for (;;) {
            std::vector<Integer> coeffs(c.begin(), c.end());
            coeffs.push_back(1);
            IntPolynomial p(coeffs);
            // any monic factor of degree 1 has a root of size at most H+1
            CHECK_MESSAGE(is_irreducible(p) == !testing::brute_force_reducible(p, 6), format_polynomial(p));
            ++checked;
            std::size_t i = 0;
            while (i < n && c[i] == 5) c[i++] = -5;
            if (i == n) break;
            ++c[i];
        }
    }
    CHECK(checked == 11 + 121 + 1331);
}

TEST_CASE("is_irreducible matches brute force on random quartics and quintics") {
    testing::Gen gen(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 4 + static_cast<std::size_t>(trial % 2);
        IntPolynomial p = gen.monic(n, 3);
        // deg-2 factor coefficients are bounded by C(n,2) (H+1)^2
        CHECK_MESSAGE(is_irreducible(p) == !testing::brute_force_reducible(p, n == 4 ? 96 : 24), format_polynomial(p));
    }
    // products are always caught
    for (int trial = 0; trial < 60; ++trial) {
        IntPolynomial a = gen.monic(2, 4), b = gen.monic(static_cast<std::size_t>(1 + trial % 3), 4);
        CHECK_FALSE(is_irreducible(a * b));
    }
}

TEST_CASE("Eisenstein implies irreducible (deg <= 4, H <= 10, p <= 50)") {
    testing::Gen gen(5);
    const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    std::size_t eisenstein = 0;
    // all Eisenstein polynomials in the box, enumerated directly: p | a_j, p^2 does not divide a_0
    for (long p : primes) {
        for (std::size_t n = 1; n <= 4; ++n) {
            std::vector<long> multiples;
            for (long v = -10; v <= 10; ++v)
                if (v % p == 0) multiples.push_back(v);
            std::vector<std::size_t> idx(n, 0);
            for (;;) {
                std::vector<Integer> coeffs;
                for (std::size_t j = 0; j < n; ++j) coeffs.emplace_back(multiples[idx[j]]);
                coeffs.emplace_back(1);
                IntPolynomial poly(coeffs);
                if (eisenstein_check(poly, Integer(p))) {
                    ++eisenstein;
                    CHECK(is_irreducible(poly));
                }
                std::size_t i = 0;
                while (i < n && idx[i] + 1 == multiples.size()) idx[i++] = 0;
                if (i == n) break;
                ++idx[i];
            }
        }
    }
    CHECK(eisenstein > 1000);
    // and the check itself agrees with its definition on random inputs
    for (int trial = 0; trial < 2000; ++trial) {
        long p = primes[gen.integer(0, 14)];
        IntPolynomial poly = gen.monic(static_cast<std::size_t>(gen.integer(1, 4)), 10);
        bool expected = poly.coefficient(0) % (p * p) != 0;
        for (std::size_t j = 0; j < poly.deg(); ++j) expected = expected && poly.coefficient(j) % p == 0;
        CHECK(eisenstein_check(poly, Integer(p)) == expected);
    }
}

TEST_CASE("root_bound") {
    CHECK(root_bound(IntPolynomial{-2, 0, 1}) == 3);
    CHECK(root_bound(IntPolynomial{2, -5, 0, 1}) == 6);
    CHECK(root_bound(IntPolynomial::monomial(6)) == 2);
}

TEST_CASE("Taylor identity P(x+h) = sum P^(k)(x) h^k / k!") {
    testing::Gen gen(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Integer> c;
        std::size_t n = static_cast<std::size_t>(gen.integer(0, 6));
        for (std::size_t j = 0; j <= n; ++j) c.emplace_back(gen.integer(-20, 20));
        IntPolynomial p(c);
        Rational x = gen.rational(q(-3), q(3), 50);
        Rational h = gen.rational(q(-2), q(2), 50);
        if (h == 0) h = q(1, 7);
        Rational sum = 0, hk = 1, fact = 1;
        IntPolynomial d = p;
        for (std::size_t k = 0; k <= n + 1; ++k) {
            sum += evaluate(d, x) * hk / fact;
            d = derivative(d);
            hk *= h;
            fact *= Rational(static_cast<unsigned long>(k + 1));
        }
        CHECK(evaluate(p, x + h) == sum);
        CHECK(sign_at(p, x) == sgn(evaluate(p, x)));
    }
}

TEST_CASE("gcd, square-free part, and affine substitution") {
    IntPolynomial a{-1, 0, 1};  // (t-1)(t+1)
    IntPolynomial b{1, 2, 1};   // (t+1)^2
    CHECK(gcd(a, b) == IntPolynomial{1, 1});
    CHECK(square_free_part(b * IntPolynomial{-2, 1}) == IntPolynomial{-2, -1, 1});
    // roots of p(s + c t) are (r - s)/c
    IntPolynomial shifted = affine_substitute(IntPolynomial{-2, 0, 1}, q(1, 2), -1);
    CHECK(evaluate(shifted, q(1, 2) - q(3, 2)) != 0);
    IntPolynomial lin = affine_substitute(IntPolynomial{-3, 2}, q(1, 4), 1); // root 3/2 -> 5/4
    CHECK(evaluate(lin, q(5, 4)) == 0);
    IntPolynomial ref = affine_substitute(IntPolynomial{-3, 2}, q(1, 4), -1); // -> -5/4
    CHECK(evaluate(ref, q(-5, 4)) == 0);
}

TEST_CASE("polynomial text format round-trips") {
    IntPolynomial p = parse_polynomial("[-2, 0, 1]");
    CHECK(p == IntPolynomial{-2, 0, 1});
    CHECK(format_polynomial(p) == "[-2,0,1]");
    CHECK(parse_polynomial("[0,0]").is_zero());
    CHECK_THROWS_AS(parse_polynomial("-2,0,1"), Error);
    CHECK_THROWS_AS(parse_polynomial("[1.5]"), Error);
    RationalPolynomial f = parse_rational_polynomial("[0,0,1]");
    CHECK(f(q(1, 3)) == q(1, 9));
    CHECK(f.derivative_bound(q(1, 10), q(2, 5)) == q(4, 5));
}
