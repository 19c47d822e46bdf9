#include "algint/roots.hpp"

#include "algint/error.hpp"

#include <functional>
#include <optional>

namespace algint {

void RootInterval::bisect() {
    if (is_exact()) return;
    Rational mid = midpoint();
    int s = sign_at(polynomial, mid);
    if (s == 0) {
        low = high = mid;
    } else if (s == sign_at(polynomial, low)) {
        low = std::move(mid);
    } else {
        high = std::move(mid);
    }
}

void RootInterval::refine(const Rational& target) {
    if (target <= 0) fail(ErrorKind::invalid_argument, "refinement width must be positive");
    while (width() > target) bisect();
}

AlgebraicInteger AlgebraicInteger::from_enclosure(RootInterval enclosure) {
    const IntPolynomial& p = enclosure.polynomial;
    if (!p.is_monic() || !is_irreducible(p))
        fail(ErrorKind::invalid_argument, "minimal polynomial must be monic and irreducible: " + format_polynomial(p));
    AlgebraicInteger out;
    out.degree = p.deg();
    out.height = algint::height(p);
    out.minimal_polynomial = p;
    out.enclosure = std::move(enclosure);
    return out;
}

SturmSequence::SturmSequence(const IntPolynomial& square_free) {
    if (square_free.is_zero()) fail(ErrorKind::undefined_input, "Sturm sequence of the zero polynomial");
    chain_.push_back(square_free);
    IntPolynomial next = derivative(square_free);
    while (!next.is_zero()) {
        chain_.push_back(next);
        const IntPolynomial& a = chain_[chain_.size() - 2];
        const IntPolynomial& b = chain_.back();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // prem multiplies a by lc(b)^(deg a - deg b + 1); undo its sign, then negate
        const std::size_t e = a.deg() - b.deg() + 1;
        const bool negative_multiplier = b.leading() < 0 && e % 2 == 1;
        Integer c = content(r);
        if (!negative_multiplier) c = -c;
        std::vector<Integer> coeffs(r.coefficients());
        for (auto& x : coeffs) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        next = IntPolynomial(std::move(coeffs));
    }
}

std::size_t SturmSequence::variations(const Rational& x) const {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::size_t SturmSequence::count(const Rational& low, const Rational& high) const {
    if (low > high) fail(ErrorKind::invalid_argument, "degenerate interval: low > high");
    const std::size_t vl = variations(low);
    const std::size_t vh = variations(high);
    return vl - vh;
}

std::size_t count_real_roots_in(const IntPolynomial& p, const Interval& interval) {
    if (interval.low > interval.high) fail(ErrorKind::invalid_argument, "degenerate interval: low > high");
    if (p.is_zero()) fail(ErrorKind::undefined_input, "root count of the zero polynomial");
    IntPolynomial sf = square_free_part(p);
    if (sf.deg() == 0) return 0;
    return SturmSequence(sf).count(interval.low, interval.high);
}

namespace {

void require_square_free(const IntPolynomial& p) {
    if (p.is_zero()) fail(ErrorKind::undefined_input, "root isolation of the zero polynomial");
    if (p.deg() >= 1 && gcd(p, derivative(p)).deg() > 0)
        fail(ErrorKind::invalid_argument, "polynomial is not square-free: " + format_polynomial(p));
}

// Closed enclosure of the single root known to lie in (low, high].
RootInterval enclose_single(const SturmSequence& sturm, Rational low, Rational high) {
    const IntPolynomial& p = sturm.polynomial();
    if (sign_at(p, high) == 0) return {high, high, p};
    while (sign_at(p, low) == 0) {
        // low is a neighbouring root outside (low, high]; move past it
        Rational mid = (low + high) / 2;
        if (sturm.count(mid, high) == 1) {
            low = mid;
        } else {
            high = mid;
            if (sign_at(p, high) == 0) return {high, high, p};
        }
    }
    return {std::move(low), std::move(high), p};
}

void isolate_range(const SturmSequence& sturm, const Rational& low, const Rational& high, std::size_t roots,
                   std::vector<RootInterval>& out) {
    if (roots == 0) return;
    if (roots == 1) {
        out.push_back(enclose_single(sturm, low, high));
        return;
    }
    Rational mid = (low + high) / 2;
    const std::size_t left = sturm.count(low, mid);
    isolate_range(sturm, low, mid, left, out);
    isolate_range(sturm, mid, high, roots - left, out);
}

void separate_neighbours(std::vector<RootInterval>& roots) {
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
        while (roots[k].high >= roots[k + 1].low) {
            roots[k].bisect();
            roots[k + 1].bisect();
        }
    }
}

std::vector<RootInterval> isolate(const IntPolynomial& p, const Rational& low, const Rational& high,
                                  const Rational& width) {
    if (width <= 0) fail(ErrorKind::invalid_argument, "isolation width must be positive");
    require_square_free(p);
    std::vector<RootInterval> out;
    if (p.deg() == 0) return out;
    SturmSequence sturm(p);
    isolate_range(sturm, low, high, sturm.count(low, high), out);
    separate_neighbours(out);
    for (auto& r : out) r.refine(width);
    return out;
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p, const Rational& width) {
    require_square_free(p);
    if (p.deg() == 0) return {};
    Rational bound = cauchy_bound(p);
    return isolate(p, -bound, bound, width);
}

std::vector<RootInterval> isolate_real_roots_in(const IntPolynomial& p, const Interval& interval,
                                                const Rational& width) {
    if (interval.low > interval.high) fail(ErrorKind::invalid_argument, "degenerate interval: low > high");
    return isolate(p, interval.low, interval.high, width);
}

Rational nearest_root_distance_bound(const IntPolynomial& p, const Rational& x) {
    Rational slope = evaluate(derivative(p), x);
    if (slope == 0) fail(ErrorKind::derivative_vanishes, "P'(x) = 0 at x = " + format_rational(x));
    return Rational(static_cast<unsigned long>(p.deg())) * abs(evaluate(p, x)) / abs(slope);
}

int compare(RootInterval& alpha, const Rational& q) {
    if (q < alpha.low) return 1;
    if (q > alpha.high) return -1;
    if (alpha.is_exact()) return 0;
    int s = sign_at(alpha.polynomial, q);
    if (s == 0) {
        alpha.low = alpha.high = q;
        return 0;
    }
    if (s == sign_at(alpha.polynomial, alpha.low)) {
        alpha.low = q;
        return 1;
    }
    alpha.high = q;
    return -1;
}

int compare(RootInterval& alpha, RootInterval& beta) {
    std::optional<SturmSequence> common;
    bool checked_common = false;
    for (;;) {
        if (alpha.high < beta.low) return -1;
        if (beta.high < alpha.low) return 1;
        if (alpha.is_exact()) return -compare(beta, alpha.low);
        if (beta.is_exact()) return compare(alpha, beta.low);
        if (!checked_common) {
            checked_common = true;
            IntPolynomial g = gcd(alpha.polynomial, beta.polynomial);
            if (g.deg() > 0) common.emplace(square_free_part(g));
        }
        if (common) {
            // a common root inside both enclosures is alpha and beta at once
            Rational lo = std::max(alpha.low, beta.low);
            Rational hi = std::min(alpha.high, beta.high);
            if (common->count(lo, hi) > 0 || sign_at(common->polynomial(), lo) == 0) return 0;
        }
        alpha.bisect();
        beta.bisect();
    }
}

RootInterval shifted(const RootInterval& alpha, const Rational& s, bool reflect) {
    if (reflect) return {s - alpha.high, s - alpha.low, affine_substitute(alpha.polynomial, s, -1)};
    return {alpha.low + s, alpha.high + s, affine_substitute(alpha.polynomial, -s, 1)};
}

namespace {

// Decides sign(|d| - s) for d known to lie in [lo, hi], or nullopt.
std::optional<int> distance_sign_from_range(const Rational& lo, const Rational& hi, const Rational& s) {
    Rational min_abs = (lo > 0) ? lo : (hi < 0 ? Rational(-hi) : Rational(0));
    Rational max_abs = std::max(Rational(abs(lo)), Rational(abs(hi)));
    if (min_abs > s) return 1;
    if (max_abs < s) return -1;
    return std::nullopt;
}

constexpr int kCheapRefinements = 64;

} // namespace

int compare_distance(RootInterval& alpha, RootInterval& beta, const Rational& s) {
    for (int i = 0; i < kCheapRefinements; ++i) {
        if (auto d = distance_sign_from_range(alpha.low - beta.high, alpha.high - beta.low, s)) return *d;
        alpha.bisect();
        beta.bisect();
    }
    RootInterval beta_up = shifted(beta, s);
    int above = compare(alpha, beta_up); // alpha vs beta + s
    if (above > 0) return 1;
    RootInterval alpha_up = shifted(alpha, s);
    int below = compare(beta, alpha_up); // beta vs alpha + s
    if (below > 0) return 1;
    if (above == 0 || below == 0) return 0;
    return -1;
}

int compare_distance(RootInterval& alpha, const Rational& x, const Rational& s) {
    int above = compare(alpha, x + s);
    if (above > 0) return 1;
    int below = compare(alpha, x - s);
    if (below < 0) return 1;
    if (above == 0 || below == 0) return 0;
    return -1;
}

Rational distance_upper_bound(const RootInterval& alpha, const Rational& x) {
    return std::max(Rational(abs(x - alpha.low)), Rational(abs(x - alpha.high)));
}

RootInterval nearest_real_root(const IntPolynomial& p, const Rational& x, const Rational& width) {
    if (width <= 0) fail(ErrorKind::invalid_argument, "refinement width must be positive");
    if (p.is_zero()) fail(ErrorKind::undefined_input, "nearest root of the zero polynomial");
    IntPolynomial sf = square_free_part(p);
    std::vector<RootInterval> roots = isolate_real_roots(sf, cauchy_bound(sf) * 2);
    if (roots.empty()) fail(ErrorKind::no_real_root, format_polynomial(p) + " has no real roots");

    // first root >= x
    std::size_t k = 0;
    while (k < roots.size()) {
        int c = compare(roots[k], x);
        if (c == 0) {
            roots[k].refine(width);
            return roots[k];
        }
        if (c > 0) break;
        ++k;
    }
    std::size_t pick;
    if (k == 0) {
        pick = 0;
    } else if (k == roots.size()) {
        pick = k - 1;
    } else {
        // sign of (right - x) - (x - left) = right - (2x - left)
        RootInterval mirrored = shifted(roots[k - 1], 2 * x, true);
        int c = compare(roots[k], mirrored);
        pick = (c >= 0) ? k - 1 : k;
    }
    roots[pick].refine(width);
    return roots[pick];
}

} // namespace algint
