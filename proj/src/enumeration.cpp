#include "algint/enumeration.hpp"

#include "algint/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace algint {

namespace {

constexpr long kExceptionalBudget = 10'000'000;

void require_query(std::size_t n, long Q) {
    if (n < 1) fail(ErrorKind::invalid_argument, "degree must be at least 1");
    if (Q < 1) fail(ErrorKind::invalid_argument, "Q must be at least 1");
}

// Odometer over (a_{n-2}, ..., a_0) with a_{n-1} fixed; a_0 moves fastest.
template <class Visit>
void for_each_in_block(std::size_t n, long Q, long top, Visit&& visit) {
    std::vector<Integer> c(n + 1, Integer(-Q));
    c[n] = 1;
    c[n - 1] = top;
    for (;;) {
        visit(c);
        std::size_t j = 0;
        while (j + 1 < n && c[j] == Q) c[j++] = -Q;
        if (j + 1 >= n) return;
        ++c[j];
    }
}

// Runs fn(block) for block = 0 .. blocks-1 on up to `workers` threads.
template <class Fn>
void parallel_blocks(std::size_t blocks, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(blocks)));
    if (workers == 1) {
        for (std::size_t b = 0; b < blocks; ++b) fn(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t b = next++; b < blocks; b = next++) fn(b);
        });
    }
    for (auto& t : pool) t.join();
}

// Descartes test on (low, high): the coefficients of
// (D(1+t))^n P((l + h t) / (D(1+t))) with low = l/D, high = h/D.
class IntervalFilter {
public:
    IntervalFilter(const Interval& interval, std::size_t n) {
        Integer D = lcm(interval.low.get_den(), interval.high.get_den());
        l_ = Rational(interval.low * D).get_num();
        h_ = Rational(interval.high * D).get_num();
        powers_.push_back({Integer(1)});
        for (std::size_t k = 1; k <= n; ++k) {
            const auto& prev = powers_.back();
            std::vector<Integer> next(prev.size() + 1, Integer(0));
            for (std::size_t i = 0; i < prev.size(); ++i) {
                next[i] += D * prev[i];
                next[i + 1] += D * prev[i];
            }
            powers_.push_back(std::move(next));
        }
    }

    struct Verdict {
        std::size_t variations = 0;
        bool root_at_high = false;
    };

    // c is low-to-high and monic of degree n
    Verdict operator()(const std::vector<Integer>& c) {
        const std::size_t n = c.size() - 1;
        r_.assign(1, c[n]);
        for (std::size_t j = n; j-- > 0;) {
            tmp_.assign(r_.size() + 1, Integer(0));
            for (std::size_t i = 0; i < r_.size(); ++i) {
                tmp_[i] += l_ * r_[i];
                tmp_[i + 1] += h_ * r_[i];
            }
            if (c[j] != 0) {
                const auto& b = powers_[n - j];
                for (std::size_t i = 0; i < b.size(); ++i) tmp_[i] += c[j] * b[i];
            }
            r_.swap(tmp_);
        }
        Verdict v;
        v.root_at_high = r_[n] == 0;
        int last = 0;
        for (const auto& x : r_) {
            int s = sgn(x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v.variations;
            last = s;
        }
        return v;
    }

private:
    Integer l_, h_;
    std::vector<std::vector<Integer>> powers_;
    std::vector<Integer> r_, tmp_;
};

// Roots of c in the interval when c is a candidate minimal polynomial;
// returns the number of roots, zero if c is reducible or rootless there.
std::size_t roots_if_irreducible(const std::vector<Integer>& c, const Interval& interval, IntervalFilter& filter,
                                 std::optional<IntPolynomial>& poly) {
    const std::size_t n = c.size() - 1;
    if (n >= 2 && c[0] == 0) return 0;
    auto verdict = filter(c);
    std::size_t known = verdict.variations + (verdict.root_at_high ? 1 : 0);
    if (known == 0) return 0;
    poly.emplace(c);
    if (!is_irreducible(*poly)) return 0;
    if (verdict.variations <= 1) return known;
    return SturmSequence(*poly).count(interval.low, interval.high);
}

AlgebraicInteger make_point(const IntPolynomial& p, RootInterval enclosure) {
    AlgebraicInteger a;
    a.minimal_polynomial = p;
    a.degree = p.deg();
    a.height = height(p);
    a.enclosure = std::move(enclosure);
    return a;
}

Rational enclosure_width(const Interval& interval) { return interval.length() / (Integer(1) << 32); }

std::vector<RootInterval> roots_inside(const IntPolynomial& p, const Interval& interval) {
    auto roots = isolate_real_roots_in(p, interval, enclosure_width(interval));
    for (auto& e : roots)
        while (e.low <= interval.low) e.bisect();
    return roots;
}

void collect_degree(std::size_t n, long Q, const Interval& interval, unsigned workers,
                    std::vector<AlgebraicInteger>& out) {
    require_query(n, Q);
    if (interval.low >= interval.high) return;
    if (n == 1) {
        for (long a0 = Q; a0 >= -Q; --a0) {
            Rational r(-a0);
            if (interval.contains(r)) out.push_back(make_point(IntPolynomial({a0, 1}), {r, r, IntPolynomial({a0, 1})}));
        }
        return;
    }
    const std::size_t blocks = static_cast<std::size_t>(2 * Q + 1);
    std::vector<std::vector<AlgebraicInteger>> found(blocks);
    parallel_blocks(blocks, workers, [&](std::size_t b) {
        IntervalFilter filter(interval, n);
        std::optional<IntPolynomial> poly;
        for_each_in_block(n, Q, static_cast<long>(b) - Q, [&](const std::vector<Integer>& c) {
            if (roots_if_irreducible(c, interval, filter, poly) == 0) return;
            for (auto& e : roots_inside(*poly, interval)) found[b].push_back(make_point(*poly, std::move(e)));
        });
    });
    for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(out));
}

} // namespace

void for_each_monic(std::size_t n, long Q, const std::function<void(const IntPolynomial&)>& visit) {
    require_query(n, Q);
    for (long top = -Q; top <= Q; ++top)
        for_each_in_block(n, Q, top, [&](const std::vector<Integer>& c) { visit(IntPolynomial(c)); });
}

std::vector<IntPolynomial> enumerate_monic(std::size_t n, long Q) {
    std::vector<IntPolynomial> out;
    for_each_monic(n, Q, [&](const IntPolynomial& p) { out.push_back(p); });
    return out;
}

void sort_ascending(std::vector<AlgebraicInteger>& points) {
    std::stable_sort(points.begin(), points.end(), [](const AlgebraicInteger& a, const AlgebraicInteger& b) {
        if (a.enclosure.high < b.enclosure.low) return true;
        if (b.enclosure.high < a.enclosure.low) return false;
        RootInterval x = a.enclosure, y = b.enclosure;
        return compare(x, y) < 0;
    });
}

std::vector<AlgebraicInteger> algebraic_integers_in(const EnumerationQuery& q, unsigned workers) {
    std::vector<AlgebraicInteger> out;
    collect_degree(q.degree, q.Q, q.interval, workers, out);
    sort_ascending(out);
    return out;
}

std::size_t count_in_interval(const EnumerationQuery& q, unsigned workers) {
    require_query(q.degree, q.Q);
    if (q.interval.low >= q.interval.high) return 0;
    if (q.degree == 1) {
        std::size_t count = 0;
        for (long a0 = -q.Q; a0 <= q.Q; ++a0) count += q.interval.contains(Rational(-a0));
        return count;
    }
    const std::size_t blocks = static_cast<std::size_t>(2 * q.Q + 1);
    std::vector<std::size_t> counts(blocks, 0);
    parallel_blocks(blocks, workers, [&](std::size_t b) {
        IntervalFilter filter(q.interval, q.degree);
        std::optional<IntPolynomial> poly;
        for_each_in_block(q.degree, q.Q, static_cast<long>(b) - q.Q, [&](const std::vector<Integer>& c) {
            counts[b] += roots_if_irreducible(c, q.interval, filter, poly);
        });
    });
    std::size_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::vector<ConjugatePair> conjugate_pairs_in(std::size_t n, long Q, const Rectangle& box, unsigned workers) {
    require_query(n, Q);
    if (box.x.low >= box.x.high || box.y.low >= box.y.high) return {};
    if (n == 1) return {};
    const std::size_t blocks = static_cast<std::size_t>(2 * Q + 1);
    std::vector<std::vector<ConjugatePair>> found(blocks);
    parallel_blocks(blocks, workers, [&](std::size_t b) {
        IntervalFilter fx(box.x, n), fy(box.y, n);
        std::optional<IntPolynomial> poly;
        for_each_in_block(n, Q, static_cast<long>(b) - Q, [&](const std::vector<Integer>& c) {
            if (roots_if_irreducible(c, box.x, fx, poly) == 0) return;
            auto vy = fy(c);
            if (vy.variations == 0 && !vy.root_at_high) return;
            auto xs = roots_inside(*poly, box.x);
            auto ys = roots_inside(*poly, box.y);
            for (const auto& ex : xs) {
                for (const auto& ey : ys) {
                    RootInterval a = ex, bb = ey;
                    if (compare(a, bb) == 0) continue;
                    found[b].push_back({make_point(*poly, ex), make_point(*poly, ey)});
                }
            }
        });
    });
    std::vector<ConjugatePair> out;
    for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(out));
    auto exact = [](const AlgebraicInteger& a, const AlgebraicInteger& b) {
        RootInterval x = a.enclosure, y = b.enclosure;
        return compare(x, y);
    };
    std::stable_sort(out.begin(), out.end(), [&](const ConjugatePair& p, const ConjugatePair& r) {
        int c = exact(p.alpha, r.alpha);
        return c != 0 ? c < 0 : exact(p.beta, r.beta) < 0;
    });
    return out;
}

std::vector<AlgebraicInteger> algebraic_integers_up_to(std::size_t n_max, long Q, const Interval& interval,
                                                       unsigned workers) {
    std::vector<AlgebraicInteger> out;
    for (std::size_t n = 1; n <= n_max; ++n) collect_degree(n, Q, interval, workers, out);
    sort_ascending(out);
    return out;
}

std::optional<Interval> find_gap(long Q, std::size_t n_max, const Interval& region, unsigned workers) {
    require_query(n_max, Q);
    const Rational length(1, 2 * Q);
    Rational a = region.low;
    while (a + length <= region.high) {
        Interval candidate{a, a + length};
        auto points = algebraic_integers_up_to(n_max, Q, candidate, workers);
        if (points.empty()) return candidate;
        RootInterval last = points.back().enclosure;
        last.refine(length / (Integer(1) << 40));
        a = last.high;
    }
    return std::nullopt;
}

bool check_not_in_exceptional(const Rational& x0, std::size_t n, long Q, const Rational& delta0) {
    require_query(n, Q);
    if (delta0 <= 0) fail(ErrorKind::invalid_argument, "delta0 must be positive");
    double total = 1;
    for (std::size_t j = 0; j <= n; ++j) total *= static_cast<double>(2 * Q + 1);
    if (total > kExceptionalBudget)
        fail(ErrorKind::budget_exceeded, "(2Q+1)^(n+1) exceeds " + std::to_string(kExceptionalBudget));

    // b^n P(a/b) = sum c_j a^j b^(n-j),  b^(n-1) P'(a/b) = sum j c_j a^(j-1) b^(n-j)
    const Integer a = x0.get_num(), b = x0.get_den();
    std::vector<Integer> value_w(n + 1), slope_w(n + 1, Integer(0));
    for (std::size_t j = 0; j <= n; ++j) {
        value_w[j] = power(a, j) * power(b, n - j);
        if (j >= 1) slope_w[j] = Integer(static_cast<unsigned long>(j)) * power(a, j - 1) * power(b, n - j);
    }
    const Integer Qn = power(Integer(Q), n);
    const Integer bn = power(b, n);
    // |V| Q^n < b^n  and  |S| den(delta0) < num(delta0) Q b^(n-1)
    const Integer slope_limit = delta0.get_num() * Q * power(b, n - 1);
    const Integer& slope_scale = delta0.get_den();

    std::vector<long> c(n + 1, -Q);
    Integer value, slope;
    for (;;) {
        bool zero = std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
        if (!zero) {
            value = 0;
            slope = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                if (c[j] == 0) continue;
                value += c[j] * value_w[j];
                slope += c[j] * slope_w[j];
            }
            if (abs(value) * Qn < bn && abs(slope) * slope_scale < slope_limit) return false;
        }
        std::size_t j = 0;
        while (j <= n && c[j] == Q) c[j++] = -Q;
        if (j > n) return true;
        ++c[j];
    }
}

} // namespace algint
