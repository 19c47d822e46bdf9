#ifndef ALGINT_ENUMERATION_HPP
#define ALGINT_ENUMERATION_HPP

#include "algint/poly.hpp"
#include "algint/rational.hpp"
#include "algint/roots.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace algint {

struct EnumerationQuery {
    std::size_t degree = 1;
    long Q = 1;
    Interval interval;
};

/// Visits the (2Q+1)^n monic polynomials t^n + a_{n-1}t^{n-1} + ... + a_0
/// with |a_j| <= Q in lexicographic order of (a_{n-1}, ..., a_0).
void for_each_monic(std::size_t n, long Q, const std::function<void(const IntPolynomial&)>& visit);
std::vector<IntPolynomial> enumerate_monic(std::size_t n, long Q);

/// Real roots in q.interval of every monic irreducible degree-n polynomial of
/// height <= Q, ascending. Enclosures lie strictly above interval.low.
std::vector<AlgebraicInteger> algebraic_integers_in(const EnumerationQuery& q, unsigned workers = 1);
std::size_t count_in_interval(const EnumerationQuery& q, unsigned workers = 1);

/// Half-open box (x.low, x.high] x (y.low, y.high].
struct Rectangle {
    Interval x;
    Interval y;

    Rational area() const { return x.length() * y.length(); }
};

/// Ordered pair of distinct roots of one minimal polynomial.
struct ConjugatePair {
    AlgebraicInteger alpha;
    AlgebraicInteger beta;
};

/// Every conjugate pair of degree n, height <= Q with alpha in box.x and beta
/// in box.y, sorted by (alpha, beta).
std::vector<ConjugatePair> conjugate_pairs_in(std::size_t n, long Q, const Rectangle& box, unsigned workers = 1);

/// Algebraic integers of every degree 1..n_max, merged and sorted.
std::vector<AlgebraicInteger> algebraic_integers_up_to(std::size_t n_max, long Q, const Interval& interval,
                                                       unsigned workers = 1);

/// Exact ascending sort of algebraic integers.
void sort_ascending(std::vector<AlgebraicInteger>& points);

/// First interval (a, a + 1/(2Q)] inside the region free of algebraic
/// integers of degree <= n_max and height <= Q, found by sliding past the
/// largest obstruction in each candidate.
std::optional<Interval> find_gap(long Q, std::size_t n_max, const Interval& region, unsigned workers = 1);

/// True iff no nonzero P with deg P <= n, H(P) <= Q has |P(x0)| < Q^-n and
/// |P'(x0)| < delta0 Q. Budget-exceeded beyond 10^7 candidates.
bool check_not_in_exceptional(const Rational& x0, std::size_t n, long Q, const Rational& delta0);

} // namespace algint

#endif
