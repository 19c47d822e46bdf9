#ifndef ALGINT_ROOTS_HPP
#define ALGINT_ROOTS_HPP

#include "algint/poly.hpp"
#include "algint/rational.hpp"

#include <vector>

namespace algint {

/// Closed enclosure [low, high] of exactly one real root of `polynomial`.
/// Either low == high and the root is that rational, or the polynomial has
/// opposite nonzero signs at the two endpoints.
struct RootInterval {
    Rational low;
    Rational high;
    IntPolynomial polynomial;

    Rational width() const { return high - low; }
    Rational midpoint() const { return (low + high) / 2; }
    bool is_exact() const { return low == high; }

    /// Halves the enclosure once (no-op when exact).
    void bisect();
    /// Bisects until width() <= width.
    void refine(const Rational& width);
};

/// A real root of a monic irreducible integer polynomial.
struct AlgebraicInteger {
    IntPolynomial minimal_polynomial;
    RootInterval enclosure;
    std::size_t degree = 0;
    Integer height;

    /// Checks monicity and irreducibility; the enclosure must isolate a root
    /// of `minimal_polynomial`.
    static AlgebraicInteger from_enclosure(RootInterval enclosure);
};

/// Sturm chain of a square-free polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const IntPolynomial& square_free);

    /// Sign variations at x (zeros skipped).
    std::size_t variations(const Rational& x) const;
    /// Distinct roots in (low, high].
    std::size_t count(const Rational& low, const Rational& high) const;
    const IntPolynomial& polynomial() const { return chain_.front(); }

private:
    std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of p in (interval.low, interval.high].
std::size_t count_real_roots_in(const IntPolynomial& p, const Interval& interval);

/// One enclosure per real root of the square-free p, ascending, pairwise
/// disjoint, each no wider than `width`.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const Rational& width);

/// Same, restricted to roots inside (interval.low, interval.high].
std::vector<RootInterval> isolate_real_roots_in(const IntPolynomial& p, const Interval& interval, const Rational& width);

/// n |P(x)| / |P'(x)|: some complex root of P lies within this distance of x.
Rational nearest_root_distance_bound(const IntPolynomial& p, const Rational& x);

/// Enclosure of the real root nearest to x (smaller root on ties), refined to
/// `width`.
RootInterval nearest_real_root(const IntPolynomial& p, const Rational& x, const Rational& width);

/// Exact sign of (alpha - q).
int compare(RootInterval& alpha, const Rational& q);
/// Exact sign of (alpha - beta); refines both enclosures as needed.
int compare(RootInterval& alpha, RootInterval& beta);

/// The root (alpha + s), or (s - alpha) when `reflect` is set, as a new enclosure.
RootInterval shifted(const RootInterval& alpha, const Rational& s, bool reflect = false);

/// Exact sign of |alpha - beta| - s for s >= 0.
int compare_distance(RootInterval& alpha, RootInterval& beta, const Rational& s);
/// Exact sign of |alpha - x| - s for s >= 0.
int compare_distance(RootInterval& alpha, const Rational& x, const Rational& s);

/// Rational upper bound on |alpha - x| read off the enclosure.
Rational distance_upper_bound(const RootInterval& alpha, const Rational& x);

} // namespace algint

#endif
