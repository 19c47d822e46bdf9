#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "algint/curve_cover.hpp"
#include "support.hpp"

#include <cmath>

using namespace algint;
using testing::kind_of;
using testing::q;

namespace {

CurveSpec parabola() {
    CurveSpec s;
    s.f.coefficients = {0, 0, 1};
    s.M = q(4, 5);
    s.a = q(1, 10);
    s.b = q(2, 5);
    s.lambda = q(1, 4);
    s.Q = 256;
    return s;
}

CurveSpec lifted_parabola() {
    CurveSpec s;
    s.f.coefficients = {2, 0, 1};
    s.M = 2;
    s.a = 0;
    s.b = 1;
    s.lambda = q(1, 3);
    s.Q = 8;
    return s;
}

bool is_square(long v) {
    long r = std::lround(std::sqrt(static_cast<double>(v)));
    return r * r == v;
}

// Ordered conjugate pairs of irreducible quadratics in the strip over
// (a, a + m step], decided in Q(sqrt d) arithmetic.
std::size_t surd_strip_count(const CurveSpec& spec, const Rational& x_high) {
    const Rational w = spec.width();
    std::size_t count = 0;
    for (long b = -spec.Q; b <= spec.Q; ++b) {
        for (long c = -spec.Q; c <= spec.Q; ++c) {
            long d = b * b - 4 * c;
            if (d <= 0 || is_square(d)) continue;
            testing::Surd plus{q(-b, 2), q(1, 2), d}, minus{q(-b, 2), q(-1, 2), d};
            for (auto [alpha, beta] : {std::pair{plus, minus}, std::pair{minus, plus}}) {
                if (alpha.plus(-spec.a).sign() <= 0 || alpha.plus(-x_high).sign() > 0) continue;
                testing::Surd gap = beta - testing::evaluate_surd(spec.f.coefficients, alpha);
                if (gap.plus(-w).sign() < 0 && gap.plus(w).sign() > 0) ++count;
            }
        }
    }
    return count;
}

} // namespace

TEST_CASE("subdivide examples") {
    CurveSpec s;
    s.f.coefficients = {q(1, 3)};
    s.M = 0;
    s.a = 0;
    s.b = 1;
    s.lambda = q(1, 4);
    s.Q = 10000;
    Tiling t = subdivide(s);
    CHECK(t.step == q(1, 10));
    REQUIRE(t.tiles.size() == 10);
    CHECK(t.tiles[0].midpoint == q(1, 20));
    CHECK(t.tiles[1].midpoint == q(3, 20));
    CHECK(t.tiles[9].x.high == 1);
    CHECK(t.c10 == q(1, 2));
    CHECK(t.c11 == q(1, 2));

    CurveSpec p = parabola();
    Tiling tp = subdivide(p);
    CHECK(tp.c10 == q(5, 18));
    for (const auto& tile : tp.tiles) CHECK(rectangle_in_tile(p, tp, tile));

    s.b = q(1, 20);
    CHECK(kind_of([&] { subdivide(s); }) == ErrorKind::empty_tiling);
    s.b = 1;
    s.Q = 8;
    CHECK(kind_of([&] { subdivide(s); }) == ErrorKind::inexact_power);
    s.Q = 16;
    s.lambda = q(1, 2);
    CHECK(kind_of([&] { subdivide(s); }) == ErrorKind::invalid_argument);
}

TEST_CASE("tiling properties on random polynomial curves") {
    testing::Gen g(61);
    for (int trial = 0; trial < 100; ++trial) {
        CurveSpec s;
        for (int j = 0; j < 4; ++j) s.f.coefficients.push_back(g.rational(-2, 2, 5));
        s.a = g.rational(-1, 1, 6);
        s.b = s.a + g.rational(q(1, 2), 3, 6);
        s.M = s.f.derivative_bound(s.a, s.b);
        s.lambda = q(1, 4);
        s.Q = std::vector<long>{16, 81, 256, 625}[g.integer(0, 3)];
        if (s.b - s.a < s.width()) continue;
        Tiling t = subdivide(s);
        const Rational length = s.b - s.a;
        CHECK(Rational(static_cast<unsigned long>(t.tiles.size())) >= length / t.step - 1);
        CHECK(s.b - t.tiles.back().x.high < t.step);
        for (std::size_t i = 0; i < t.tiles.size(); ++i) {
            CHECK(t.tiles[i].x.length() == t.step);
            if (i > 0) CHECK(t.tiles[i - 1].x.high == t.tiles[i].x.low);
            CHECK(rectangle_in_tile(s, t, t.tiles[i]));
        }
        CHECK(t.c11 + t.c10 * s.M < 1);
    }
}

TEST_CASE("in_strip decides exactly") {
    CurveSpec s = parabola();
    const Rational w = s.width();
    auto point = [](const Rational& x) { return RootInterval{x, x, IntPolynomial({Integer(-x.get_num()), x.get_den()})}; };
    CHECK(in_strip(s, point(q(1, 5)), point(q(1, 25))));
    CHECK(in_strip(s, point(q(1, 5)), point(q(1, 25) + w - q(1, 1000))));
    CHECK_FALSE(in_strip(s, point(q(1, 5)), point(q(1, 25) + w)));
    CHECK_FALSE(in_strip(s, point(q(1, 2)), point(q(1, 4))));
    // sqrt 2 / 4 as a root of 8t^2 - 1, beta = 1/8 = f(alpha)
    RootInterval alpha{q(1, 4), q(2, 5), IntPolynomial({-1, 0, 8})};
    CHECK(in_strip(s, alpha, point(q(1, 8))));
    CHECK(in_strip(s, alpha, point(q(1, 8) - w + q(1, 100000))));
    CHECK_FALSE(in_strip(s, alpha, point(q(1, 8) + w + q(1, 100000))));
}

TEST_CASE("construct mode on the parabola") {
    CurveSpec s = parabola();
    auto report = count_near_curve(s, 4, CoverMode::construct);
    REQUIRE(report.tiles.size() == 1);
    CHECK(report.total >= 1);
    CHECK(report.fitted_c8 > 0);
    for (const auto& tile : report.tiles) {
        if (tile.count == 0) continue;
        REQUIRE(tile.certificate);
        CHECK(tile.status == "certified");
        const auto& roots = tile.certificate->roots;
        double a = roots[0].enclosure.midpoint().get_d(), b = roots[1].enclosure.midpoint().get_d();
        CHECK(std::fabs(b - a * a) < s.width().get_d());
        CHECK(a >= 0.1);
        CHECK(a <= 0.4);
    }
}

TEST_CASE("diagonal tiles are skipped") {
    CurveSpec s;
    s.f.coefficients = {0, 1};
    s.M = 1;
    s.a = 0;
    s.b = q(1, 2);
    s.lambda = q(1, 4);
    s.Q = 16;
    auto c = count_near_curve(s, 4, CoverMode::construct);
    REQUIRE(c.tiles.size() == 1);
    CHECK(c.tiles[0].status == "skipped-diagonal");
    auto e = count_near_curve(s, 2, CoverMode::enumerate);
    CHECK(e.tiles[0].status == "skipped-diagonal");
    CHECK(e.total == 0);
}

TEST_CASE("enumerate mode matches the whole-strip brute force") {
    CurveSpec s = lifted_parabola();
    auto report = count_near_curve(s, 2, CoverMode::enumerate);
    for (const auto& tile : report.tiles) CHECK(tile.status == "counted");
    const Rational covered = report.tiling.tiles.back().x.high;
    const std::size_t expected = surd_strip_count(s, covered);
    CHECK(expected > 0);
    CHECK(report.total == expected);

    testing::Gen g(67);
    for (int trial = 0; trial < 6; ++trial) {
        CurveSpec r;
        r.f.coefficients = {g.rational(2, 4, 4), g.rational(-1, 1, 4), g.rational(-1, 1, 4)};
        r.a = g.rational(-1, 1, 4);
        r.b = r.a + 1;
        r.M = r.f.derivative_bound(r.a, r.b);
        r.lambda = q(1, 3);
        r.Q = 8;
        auto rep = count_near_curve(r, 2, CoverMode::enumerate);
        bool skipped = std::any_of(rep.tiles.begin(), rep.tiles.end(),
                                   [](const TileResult& t) { return t.status != "counted"; });
        if (skipped) continue;
        CHECK(rep.total == surd_strip_count(r, rep.tiling.tiles.back().x.high));
    }
}
