#ifndef ALGINT_CURVE_COVER_HPP
#define ALGINT_CURVE_COVER_HPP

#include "algint/constructor.hpp"
#include "algint/enumeration.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algint {

/// The strip |y - f(x)| < Q^-lambda over x in J = [a, b]; M >= sup_J |f'|.
struct CurveSpec {
    RationalPolynomial f;
    Rational M;
    Rational a;
    Rational b;
    Rational lambda;
    long Q = 1;
    Rational epsilon{1, 8};

    Rational width() const; // Q^-lambda
};

struct Tile {
    std::size_t index = 0;
    Interval x; // (x_{i-1}, x_i]
    Rational midpoint;
    Rational value; // f(midpoint)
};

struct Tiling {
    Rational step; // Q^-lambda
    Rational c10;
    Rational c11;
    std::vector<Tile> tiles;
};

/// m = floor(|J| Q^lambda) tiles of width Q^-lambda from a, with
/// c10 = min(1/2, 1/(2(1+M))) and c11 = 1/2.
Tiling subdivide(const CurveSpec& spec);

/// E_i = [midpoint +- c10 step] x [value +- c11 step] lies in the strip over
/// the tile, checked at the four corners.
bool rectangle_in_tile(const CurveSpec& spec, const Tiling& tiling, const Tile& tile);

/// Exact test of alpha in J and |beta - f(alpha)| < Q^-lambda.
bool in_strip(const CurveSpec& spec, const RootInterval& alpha, const RootInterval& beta);

enum class CoverMode { enumerate, construct };

struct TileResult {
    std::size_t index = 0;
    std::string status; // counted, certified, audit-failed, no-real-root, outside-strip, skipped-diagonal, out-of-domain
    std::size_t count = 0;
    std::vector<ConjugatePair> points;                   // enumerate mode
    std::optional<ConstructionCertificate> certificate; // construct mode
};

struct CurveReport {
    CoverMode mode = CoverMode::enumerate;
    std::size_t n = 0;
    Tiling tiling;
    std::vector<TileResult> tiles;
    std::size_t total = 0;
    Rational fitted_c8; // total / Q^(n - lambda)
};

CurveReport count_near_curve(const CurveSpec& spec, std::size_t n, CoverMode mode, unsigned workers = 1);

} // namespace algint

#endif
