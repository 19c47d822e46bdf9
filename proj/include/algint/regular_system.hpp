#ifndef ALGINT_REGULAR_SYSTEM_HPP
#define ALGINT_REGULAR_SYSTEM_HPP

#include "algint/enumeration.hpp"

#include <vector>

namespace algint {

/// A point of a regular system with its weight N.
struct WeightedPoint {
    RootInterval value;
    Integer weight;
};

/// Degenerate enclosure for a rational point.
WeightedPoint rational_point(const Rational& x, const Integer& weight = 1);

struct RegularSystemReport {
    std::vector<WeightedPoint> points;
    Integer T;
    Interval interval;
    Rational separation;
    std::size_t candidates = 0; // before the greedy pass
    std::size_t count = 0;
    bool maximal = false; // every rejected candidate lies within the separation of a kept point
    Rational fitted_c5;   // count / (T |I|)
};

struct RegularPairReport {
    std::vector<ConjugatePair> pairs;
    Integer T;
    Rectangle box;
    Rational separation_x;
    Rational separation_y;
    Rational c16;
    std::size_t candidates = 0;
    std::size_t count = 0;
    bool maximal = false;
    Rational fitted; // count c16^2 / (Q^n area)
};

/// Left-to-right greedy: keeps an item iff it is more than s above the last
/// kept one. Input must be ascending.
std::vector<std::size_t> greedy_separated(const std::vector<RootInterval>& points, const Rational& s);
std::vector<Rational> greedy_separated(const std::vector<Rational>& points, const Rational& s);

/// Algebraic integers of degree n, height <= Q in I, thinned at T = Q^n.
RegularSystemReport build_1d(std::size_t n, long Q, const Interval& I, unsigned workers = 1);

/// Greedy packing of conjugate pairs in the box: a pair is kept iff every kept
/// pair differs by more than c16 Q^(-u1-1) in alpha or c16 Q^(-u2-1) in beta.
RegularPairReport build_2d(std::size_t n, long Q, const Rectangle& box, const Rational& epsilon, const Rational& u1,
                           const Rational& u2, const Rational& c16 = 1, unsigned workers = 1);

/// True iff a and b are within sx in alpha and within sy in beta.
bool pairs_conflict(const ConjugatePair& a, const ConjugatePair& b, const Rational& sx, const Rational& sy);

struct RegularityVerdict {
    bool weights = false;   // N(gamma) <= T
    bool separated = false; // pairwise gaps > 1/T
    bool dense = false;     // count > c5 T |I|

    bool all() const { return weights && separated && dense; }
};

RegularityVerdict verify_regularity(const RegularSystemReport& report, const Rational& c5);

/// Diagonal-violation unless |x - y| > epsilon on the whole box.
void require_off_diagonal(const Rectangle& box, const Rational& epsilon);

} // namespace algint

#endif
