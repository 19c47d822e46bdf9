#include "algint/regular_system.hpp"

#include "algint/error.hpp"

namespace algint {

namespace {

// |a - b| > s, exactly
bool farther_than(const RootInterval& a, const RootInterval& b, const Rational& s) {
    if (a.high + s < b.low || b.high + s < a.low) return true;
    RootInterval x = a, y = b;
    return compare_distance(x, y, s) > 0;
}

Integer weight_of(const AlgebraicInteger& a) { return power(a.height, a.degree); }

} // namespace

WeightedPoint rational_point(const Rational& x, const Integer& weight) {
    // x is the root of den*t - num
    IntPolynomial p({Integer(-x.get_num()), x.get_den()});
    return {{x, x, p}, weight};
}

std::vector<std::size_t> greedy_separated(const std::vector<RootInterval>& points, const Rational& s) {
    if (s < 0) fail(ErrorKind::invalid_argument, "separation must be non-negative");
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (kept.empty() || farther_than(points[i], points[kept.back()], s)) kept.push_back(i);
    }
    return kept;
}

std::vector<Rational> greedy_separated(const std::vector<Rational>& points, const Rational& s) {
    if (s < 0) fail(ErrorKind::invalid_argument, "separation must be non-negative");
    std::vector<Rational> kept;
    for (const auto& x : points)
        if (kept.empty() || x - kept.back() > s) kept.push_back(x);
    return kept;
}

RegularSystemReport build_1d(std::size_t n, long Q, const Interval& I, unsigned workers) {
    if (Q < 1) fail(ErrorKind::invalid_argument, "Q must be at least 1");
    if (I.length() < Rational(1, Q)) fail(ErrorKind::invalid_argument, "interval shorter than 1/Q");
    RegularSystemReport r;
    r.T = power(Integer(Q), static_cast<unsigned long>(n));
    r.interval = I;
    r.separation = Rational(1) / r.T;
    auto points = algebraic_integers_in({n, Q, I}, workers);
    r.candidates = points.size();
    std::vector<RootInterval> enclosures;
    for (const auto& p : points) enclosures.push_back(p.enclosure);
    auto kept = greedy_separated(enclosures, r.separation);

    // maximality: each rejected point is within s of the nearest kept point below it
    r.maximal = true;
    std::size_t k = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (k < kept.size() && kept[k] == i) {
            ++k;
            continue;
        }
        if (k == 0 || farther_than(enclosures[i], enclosures[kept[k - 1]], r.separation)) r.maximal = false;
    }
    for (auto i : kept) r.points.push_back({points[i].enclosure, weight_of(points[i])});
    r.count = r.points.size();
    r.fitted_c5 = Rational(static_cast<unsigned long>(r.count)) / (r.T * I.length());
    return r;
}

bool pairs_conflict(const ConjugatePair& a, const ConjugatePair& b, const Rational& sx, const Rational& sy) {
    return !farther_than(a.alpha.enclosure, b.alpha.enclosure, sx) &&
           !farther_than(a.beta.enclosure, b.beta.enclosure, sy);
}

void require_off_diagonal(const Rectangle& box, const Rational& epsilon) {
    // over the closure, y - x ranges over [y.low - x.high, y.high - x.low]
    Rational below = box.x.low - box.y.high;
    Rational above = box.y.low - box.x.high;
    if (std::max(below, above) <= epsilon)
        fail(ErrorKind::diagonal_violation, "box comes within epsilon = " + format_rational(epsilon) + " of y = x");
}

RegularPairReport build_2d(std::size_t n, long Q, const Rectangle& box, const Rational& epsilon, const Rational& u1,
                           const Rational& u2, const Rational& c16, unsigned workers) {
    if (Q < 1) fail(ErrorKind::invalid_argument, "Q must be at least 1");
    if (c16 <= 0) fail(ErrorKind::invalid_argument, "c16 must be positive");
    require_off_diagonal(box, epsilon);
    RegularPairReport r;
    r.T = power(Integer(Q), static_cast<unsigned long>(n));
    r.box = box;
    r.c16 = c16;
    r.separation_x = c16 / exact_power(Integer(Q), u1 + 1);
    r.separation_y = c16 / exact_power(Integer(Q), u2 + 1);
    auto pairs = conjugate_pairs_in(n, Q, box, workers);
    r.candidates = pairs.size();
    std::vector<bool> keep(pairs.size(), false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; ok && j < i; ++j)
            if (keep[j] && pairs_conflict(pairs[i], pairs[j], r.separation_x, r.separation_y)) ok = false;
        keep[i] = ok;
    }
    r.maximal = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (keep[i]) continue;
        bool blocked = false;
        for (std::size_t j = 0; !blocked && j < pairs.size(); ++j)
            blocked = keep[j] && pairs_conflict(pairs[i], pairs[j], r.separation_x, r.separation_y);
        r.maximal = r.maximal && blocked;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (keep[i]) r.pairs.push_back(pairs[i]);
    r.count = r.pairs.size();
    r.fitted = Rational(static_cast<unsigned long>(r.count)) * c16 * c16 / (r.T * box.area());
    return r;
}

RegularityVerdict verify_regularity(const RegularSystemReport& report, const Rational& c5) {
    RegularityVerdict v;
    v.weights = true;
    for (const auto& p : report.points) v.weights = v.weights && p.weight <= report.T;
    // ascending order plus consecutive gaps > 1/T gives every pairwise gap
    const Rational gap = Rational(1) / report.T;
    v.separated = true;
    for (std::size_t i = 1; v.separated && i < report.points.size(); ++i) {
        RootInterval a = report.points[i - 1].value, b = report.points[i].value;
        v.separated = compare(a, b) < 0 && farther_than(a, b, gap);
    }
    v.dense = Rational(static_cast<unsigned long>(report.points.size())) > c5 * report.T * report.interval.length();
    return v;
}

} // namespace algint
