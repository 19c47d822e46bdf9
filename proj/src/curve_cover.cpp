#include "algint/curve_cover.hpp"

#include "algint/error.hpp"
#include "algint/regular_system.hpp"

#include <algorithm>

namespace algint {

namespace {

constexpr int kMembershipRefinements = 4096;

void require_spec(const CurveSpec& spec) {
    if (spec.Q < 1) fail(ErrorKind::invalid_argument, "Q must be at least 1");
    if (spec.lambda <= 0 || spec.lambda >= Rational(1, 2)) fail(ErrorKind::invalid_argument, "lambda must lie in (0, 1/2)");
    if (spec.M < 0) fail(ErrorKind::invalid_argument, "derivative bound M must be non-negative");
    if (spec.a > spec.b) fail(ErrorKind::invalid_argument, "J = [a, b] needs a <= b");
    if (spec.f.coefficients.empty()) fail(ErrorKind::invalid_argument, "f needs at least one coefficient");
}

bool within_J(const CurveSpec& spec, const RootInterval& alpha) {
    RootInterval x = alpha;
    return compare(x, spec.a) >= 0 && compare(x, spec.b) <= 0;
}

TileResult construct_tile(const CurveSpec& spec, std::size_t n, const Tile& tile) {
    TileResult r;
    r.index = tile.index;
    if (abs(tile.midpoint - tile.value) <= spec.epsilon) {
        r.status = "skipped-diagonal";
        return r;
    }
    if (abs(tile.midpoint) > Rational(1, 2) || abs(tile.value) > Rational(1, 2)) {
        r.status = "out-of-domain";
        return r;
    }
    ConstructorConfig config = ConstructorConfig::for_2d(n, spec.Q);
    config.epsilon = spec.epsilon;
    r.certificate = construct_2d(tile.midpoint, tile.value, config);
    r.status = r.certificate->status;
    if (r.status != "certified") return r;
    const RootInterval& alpha = r.certificate->roots.at(0).enclosure;
    const RootInterval& beta = r.certificate->roots.at(1).enclosure;
    if (!in_strip(spec, alpha, beta)) {
        r.status = "outside-strip";
        return r;
    }
    r.count = 1;
    return r;
}

TileResult enumerate_tile(const CurveSpec& spec, std::size_t n, const Tiling& tiling, const Tile& tile,
                          unsigned workers) {
    TileResult r;
    r.index = tile.index;
    // f over the tile stays within M * step/2 of the midpoint value
    const Rational reach = spec.M * tiling.step / 2 + spec.width();
    Rectangle box{tile.x, {tile.value - reach, tile.value + reach}};
    try {
        require_off_diagonal(box, spec.epsilon);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::diagonal_violation) throw;
        r.status = "skipped-diagonal";
        return r;
    }
    for (auto& p : conjugate_pairs_in(n, spec.Q, box, workers))
        if (in_strip(spec, p.alpha.enclosure, p.beta.enclosure)) r.points.push_back(std::move(p));
    r.count = r.points.size();
    r.status = "counted";
    return r;
}

} // namespace

Rational CurveSpec::width() const { return 1 / exact_power(Integer(Q), lambda); }

Tiling subdivide(const CurveSpec& spec) {
    require_spec(spec);
    Tiling t;
    t.step = spec.width();
    const Rational length = spec.b - spec.a;
    if (length < t.step) fail(ErrorKind::empty_tiling, "|J| is shorter than one tile " + format_rational(t.step));
    t.c10 = std::min(Rational(1, 2), Rational(1 / (2 * (1 + spec.M))));
    t.c11 = Rational(1, 2);
    const Integer m = floor_of(length / t.step);
    for (Integer i = 1; i <= m; ++i) {
        Tile tile;
        tile.index = i.get_ui();
        tile.x = {spec.a + (i - 1) * t.step, spec.a + i * t.step};
        tile.midpoint = spec.a + (i * 2 - 1) * t.step / 2;
        tile.value = spec.f(tile.midpoint);
        t.tiles.push_back(std::move(tile));
    }
    return t;
}

bool rectangle_in_tile(const CurveSpec& spec, const Tiling& tiling, const Tile& tile) {
    const Rational hx = tiling.c10 * tiling.step, hy = tiling.c11 * tiling.step;
    if (tile.midpoint - hx < tile.x.low || tile.midpoint + hx > tile.x.high) return false;
    const Rational w = spec.width();
    for (const Rational& x : {Rational(tile.midpoint - hx), Rational(tile.midpoint + hx)})
        for (const Rational& y : {Rational(tile.value - hy), Rational(tile.value + hy)})
            if (abs(y - spec.f(x)) >= w) return false;
    return true;
}

bool in_strip(const CurveSpec& spec, const RootInterval& alpha, const RootInterval& beta) {
    if (!within_J(spec, alpha)) return false;
    const Rational w = spec.width();
    RootInterval x = alpha, y = beta;
    for (int i = 0; i < kMembershipRefinements; ++i) {
        // f(alpha) lies within slope * radius of f(mid)
        const Rational mid = x.midpoint();
        const Rational spread = spec.f.derivative_bound(x.low, x.high) * x.width() / 2;
        const Rational f_mid = spec.f(mid);
        const Rational low = y.low - f_mid - spread, high = y.high - f_mid + spread;
        if (low > -w && high < w) return true;
        if (low >= w || high <= -w) return false;
        x.bisect();
        y.bisect();
    }
    fail(ErrorKind::internal, "strip membership undecided after refinement");
}

CurveReport count_near_curve(const CurveSpec& spec, std::size_t n, CoverMode mode, unsigned workers) {
    CurveReport report;
    report.mode = mode;
    report.n = n;
    report.tiling = subdivide(spec);
    for (const auto& tile : report.tiling.tiles) {
        TileResult r = mode == CoverMode::construct ? construct_tile(spec, n, tile)
                                                    : enumerate_tile(spec, n, report.tiling, tile, workers);
        report.total += r.count;
        report.tiles.push_back(std::move(r));
    }
    const Rational Qn(power(Integer(spec.Q), static_cast<unsigned long>(n)));
    report.fitted_c8 = Rational(static_cast<unsigned long>(report.total)) / (Qn * report.tiling.step);
    return report;
}

} // namespace algint
