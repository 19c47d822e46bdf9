#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algint/error.hpp"
#include "algint/lattice.hpp"
#include "support.hpp"

using namespace algint;
using testing::q;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal;
}

// Minimum scaled norm over all nonzero integer vectors with |a_j| <= box.
Rational exhaustive_first_minimum(const FormSystem& body, long box) {
    const std::size_t n = body.dimension();
    std::vector<long> c(n, -box);
    std::optional<Rational> best;
    for (;;) {
        bool zero = std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
        if (!zero) {
            IntPolynomial v(std::vector<Integer>(c.begin(), c.end()));
            Rational s = scaled_norm(body, v);
            if (!best || s < *best) best = s;
        }
        std::size_t i = 0;
        while (i < n && c[i] == box) c[i++] = -box;
        if (i == n) break;
        ++c[i];
    }
    return *best;
}

Rational norm_product(const ReducedBasis& basis) {
    Rational prod = 1;
    for (const auto& s : basis.norms) prod *= s;
    return prod;
}

void check_basis_shape(const ReducedBasis& basis, const FormSystem& body) {
    const std::size_t n = body.dimension();
    REQUIRE(basis.dimension() == n);
    IntegerMatrix a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = basis.coefficient(i, j);
        CHECK(basis.norms[i] == scaled_norm(body, basis.vectors[i]));
        if (i > 0) CHECK(basis.norms[i - 1] <= basis.norms[i]);
    }
    CHECK(determinant(a) == basis.delta);
    CHECK(basis.delta > 0);
}

} // namespace

TEST_CASE("linear algebra") {
    RationalMatrix m{{q(2), q(1)}, {q(1), q(3)}};
    CHECK(determinant(m) == 5);
    IntegerMatrix mi{{Integer(0), Integer(2), Integer(1)}, {Integer(1), Integer(0), Integer(4)}, {Integer(3), Integer(5), Integer(0)}};
    CHECK(determinant(mi) == 0 * 0 - 2 * (0 - 12) + 1 * (5 - 0));
    auto x = solve(m, {q(3), q(4)});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve({{q(1), q(2)}, {q(2), q(4)}}, {q(1), q(1)}));
    // Bareiss agrees with rational elimination
    testing::Gen gen(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
        IntegerMatrix a(n, std::vector<Integer>(n));
        RationalMatrix r(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r[i][j] = a[i][j] = gen.integer(-3, 3);
        CHECK(Rational(determinant(a)) == determinant(r));
    }
}

TEST_CASE("body_1d") {
    FormSystem unit = body_1d(q(0), Integer(1), 2);
    CHECK(unit.forms == RationalMatrix{{q(1), q(0)}, {q(0), q(1)}});
    CHECK(unit.bounds == std::vector<Rational>{q(1), q(1)});

    FormSystem b = body_1d(q(1, 2), Integer(4), 3);
    CHECK(b.forms[0] == std::vector<Rational>{q(1), q(1, 2), q(1, 4)});
    CHECK(b.bounds[0] == q(1, 16));
    CHECK(b.forms[1] == std::vector<Rational>{q(0), q(1), q(1)});
    CHECK(b.bounds[1] == 4);
    CHECK(b.forms[2] == std::vector<Rational>{q(0), q(0), q(1)});
    CHECK(b.bounds[2] == 4);

    FormSystem c = body_1d(q(1, 4), Integer(8), 2);
    CHECK(c.forms == RationalMatrix{{q(1), q(1, 4)}, {q(0), q(1)}});
    CHECK(c.bounds == std::vector<Rational>{q(1, 8), q(8)});

    CHECK(kind_of([] { body_1d(q(0), Integer(4), 1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("body_2d") {
    FormSystem a = body_2d(q(-1, 4), q(1, 4), Integer(16), 4, q(1), q(1));
    CHECK(a.dimension() == 4);
    FormSystem b = body_2d(q(0), q(1, 2), Integer(4), 5, q(3, 2), q(3, 2));
    CHECK(b.bounds == std::vector<Rational>{q(1, 8), q(1, 8), q(4), q(4), q(4)});
    CHECK(b.forms[1] == std::vector<Rational>{q(1), q(1, 2), q(1, 4), q(1, 8), q(1, 16)});
    CHECK(b.forms[3] == std::vector<Rational>{q(0), q(1), q(1), q(3, 4), q(1, 2)});
    CHECK(kind_of([] { body_2d(q(0), q(1, 2), Integer(4), 5, q(2), q(2)); }) == ErrorKind::constraint_violation);
    CHECK(kind_of([] { body_2d(q(0), q(1, 2), Integer(4), 3, q(1, 2), q(1, 2)); }) == ErrorKind::unsupported_degree);
}

TEST_CASE("reduce: unit box gives the standard basis") {
    FormSystem unit = body_1d(q(0), Integer(1), 2);
    ReducedBasis basis = reduce(unit);
    CHECK(basis.norms == std::vector<Rational>{q(1), q(1)});
    CHECK(basis.delta == 1);
    for (const auto& v : basis.vectors) CHECK(height(v) == 1);
    check_basis_shape(basis, unit);
}

TEST_CASE("reduce: small bodies against exhaustive search") {
    FormSystem b = body_1d(q(1, 4), Integer(8), 2);
    ReducedBasis basis = reduce(b);
    check_basis_shape(basis, b);
    Rational first = exhaustive_first_minimum(b, 16);
    CHECK(basis.norms[0] == first);
    CHECK(basis.norms[1] <= first * 2 * reduction_slack(2));

    FormSystem c = body_1d(q(1, 3), Integer(16), 3);
    ReducedBasis bc = reduce(c);
    check_basis_shape(bc, c);
    CHECK(norm_product(bc) <= reduction_slack(3));
    CHECK(reduction_slack(3) == 48);

    testing::Gen gen(33);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(2, 3));
        Integer Q = gen.integer(1, 6);
        FormSystem body = body_1d(gen.rational(q(-1, 2), q(1, 2), 16), Q, n);
        ReducedBasis r = reduce(body);
        Rational exact = exhaustive_first_minimum(body, n == 2 ? 32 : 12);
        CHECK(r.norms[0] <= exact);
        CHECK(r.norms[0] * r.norms[0] <= exact * exact * (1 << (n - 1)));
    }
}

TEST_CASE("reduce: product bound and independence on random bodies") {
    testing::Gen gen(77);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
        Integer Q = Integer(1) << static_cast<unsigned>(gen.integer(0, 12));
        Rational x0 = gen.rational(q(-1, 2), q(1, 2), 1024);
        FormSystem body = body_1d(x0, Q, n);
        ReducedBasis basis = reduce(body);
        check_basis_shape(basis, body);
        // the body has unit determinant, so the product is bounded absolutely
        CHECK(abs(determinant(body.forms)) / [&] {
            Rational p = 1;
            for (const auto& b : body.bounds) p *= b;
            return p;
        }() == 1);
        CHECK(norm_product(basis) <= reduction_slack(n));
    }
}

TEST_CASE("reduce: 2D bodies") {
    testing::Gen gen(78);
    for (int trial = 0; trial < 60; ++trial) {
        Integer Q = Integer(1) << static_cast<unsigned>(2 * gen.integer(1, 5));
        Rational x0 = gen.rational(q(-1, 2), q(0), 64);
        Rational y0 = gen.rational(q(1, 8), q(1, 2), 64);
        FormSystem body = body_2d(x0, y0, Q, 4, q(1), q(1));
        ReducedBasis basis = reduce(body);
        check_basis_shape(basis, body);
        CHECK(norm_product(basis) <= reduction_slack(4));
    }
}

TEST_CASE("reduce rejects singular bodies") {
    FormSystem singular{{{q(1), q(2)}, {q(2), q(4)}}, {q(1), q(1)}};
    CHECK(kind_of([&] { reduce(singular); }) == ErrorKind::degenerate_body);
}

TEST_CASE("verify_basis_bounds") {
    FormSystem unit = body_1d(q(0), Integer(1), 2);
    ReducedBasis basis = reduce(unit);
    for (const auto& v : verify_basis_bounds(basis, unit, q(1))) CHECK(v.pass);
    for (const auto& v : verify_basis_bounds(basis, unit, q(0))) CHECK_FALSE(v.pass);

    const std::size_t n = 3;
    FormSystem body = body_1d(q(1, 4), Integer(1024), n);
    ReducedBasis r = reduce(body);
    Rational delta0 = q(1, 1L << (n + 8)) / ((n - 1) * (n - 1));
    for (const auto& v : verify_basis_bounds(r, body, power(delta0, -static_cast<long>(n - 1)))) CHECK(v.pass);
}

TEST_CASE("scaling the bounds scales the norm report by the inverse") {
    testing::Gen gen(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
        FormSystem body = body_1d(gen.rational(q(-1, 2), q(1, 2), 100), Integer(gen.integer(1, 300)), n);
        ReducedBasis basis = reduce(body);
        Rational lambda = gen.rational(q(1, 10), q(10), 20);
        if (lambda == 0) lambda = 1;
        FormSystem scaled = body;
        for (auto& b : scaled.bounds) b *= lambda;
        for (const auto& v : basis.vectors) {
            CHECK(scaled_norm(scaled, v) == scaled_norm(body, v) / lambda);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(abs(form_value(scaled, i, v)) / scaled.bounds[i] == abs(form_value(body, i, v)) / body.bounds[i] / lambda);
        }
    }
}
