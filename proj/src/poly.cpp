#include "algint/poly.hpp"

#include "algint/error.hpp"

#include <algorithm>
#include <cctype>

namespace algint {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coefficients_.reserve(coefficients.size());
    for (long c : coefficients) coefficients_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t n, const Integer& coefficient) {
    std::vector<Integer> c(n + 1, Integer(0));
    c[n] = coefficient;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t j) const {
    return j < coefficients_.size() ? coefficients_[j] : Integer(0);
}

std::optional<std::size_t> IntPolynomial::degree() const {
    if (is_zero()) return std::nullopt;
    return coefficients_.size() - 1;
}

std::size_t IntPolynomial::deg() const {
    if (is_zero()) fail(ErrorKind::undefined_input, "degree of the zero polynomial");
    return coefficients_.size() - 1;
}

const Integer& IntPolynomial::leading() const {
    if (is_zero()) fail(ErrorKind::undefined_input, "leading coefficient of the zero polynomial");
    return coefficients_.back();
}

bool IntPolynomial::is_monic() const { return !is_zero() && coefficients_.back() == 1; }

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Integer> c(coefficients_);
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.coefficients_.size(), b.coefficients_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coefficients_.size() + b.coefficients_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& k, const IntPolynomial& a) {
    std::vector<Integer> c(a.coefficients_);
    for (auto& x : c) x *= k;
    return IntPolynomial(std::move(c));
}

Rational evaluate(const IntPolynomial& p, const Rational& x) {
    Rational acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Integer evaluate(const IntPolynomial& p, const Integer& x) {
    Integer acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_at(const IntPolynomial& p, const Rational& x) {
    const auto& c = p.coefficients();
    if (c.empty()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    // den^d * p(num/den), den > 0 so the sign is unchanged
    Integer acc = c.back();
    Integer den_power = 1;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        den_power *= den;
        acc = acc * num + c[j] * den_power;
    }
    return sgn(acc);
}

IntPolynomial derivative(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Integer> d(c.size() - 1);
    for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = c[j] * static_cast<unsigned long>(j);
    return IntPolynomial(std::move(d));
}

Integer height(const IntPolynomial& p) {
    if (p.is_zero()) fail(ErrorKind::undefined_input, "height of the zero polynomial");
    Integer h = 0;
    for (const auto& c : p.coefficients()) h = std::max(h, Integer(abs(c)));
    return h;
}

bool eisenstein_check(const IntPolynomial& poly, const Integer& p) {
    if (!is_prime(p)) fail(ErrorKind::invalid_argument, p.get_str() + " is not prime");
    if (poly.is_zero() || poly.deg() < 1) fail(ErrorKind::invalid_argument, "Eisenstein check needs degree >= 1");
    const auto& c = poly.coefficients();
    auto divisible = [](const Integer& a, const Integer& b) {
        return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
    };
    if (divisible(c.back(), p)) return false;
    for (std::size_t j = 0; j + 1 < c.size(); ++j)
        if (!divisible(c[j], p)) return false;
    return !divisible(c[0], p * p);
}

namespace {

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// Monic g of degree k with g(x_i) = v_i, when it has integer coefficients.
std::optional<IntPolynomial> interpolate_monic(const std::vector<Integer>& xs, const std::vector<Integer>& vs) {
    const std::size_t k = xs.size();
    // Newton form for h = g - t^k, degree <= k-1
    std::vector<Rational> dd(k);
    for (std::size_t i = 0; i < k; ++i) dd[i] = Rational(vs[i] - power(xs[i], static_cast<unsigned long>(k)));
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    // expand Newton form into monomial coefficients
    std::vector<Rational> h(k, Rational(0));
    for (std::size_t i = k; i-- > 0;) {
        // h = h * (t - x_i) + dd[i]
        std::vector<Rational> next(k, Rational(0));
        for (std::size_t j = 0; j < k; ++j) {
            if (j + 1 < k) next[j + 1] += h[j];
            next[j] -= h[j] * xs[i];
        }
        next[0] += dd[i];
        h = std::move(next);
    }
    std::vector<Integer> coefficients(k + 1);
    for (std::size_t j = 0; j < k; ++j) {
        if (h[j].get_den() != 1) return std::nullopt;
        coefficients[j] = h[j].get_num();
    }
    coefficients[k] = 1;
    return IntPolynomial(std::move(coefficients));
}

} // namespace

bool is_irreducible(const IntPolynomial& poly) {
    if (!poly.is_monic()) fail(ErrorKind::invalid_argument, "is_irreducible expects a monic polynomial");
    const std::size_t d = poly.deg();
    if (d == 0) fail(ErrorKind::invalid_argument, "is_irreducible expects degree >= 1");
    if (d == 1) return true;
    if (poly.coefficient(0) == 0) return false;

    const std::size_t half = d / 2;
    const Integer coefficient_bound =
        binomial(d, half) * power(Integer(height(poly) + 1), static_cast<unsigned long>(half));

    // Evaluation points 0, 1, -1, 2, -2, ...; an integer root means a linear factor.
    struct Point {
        Integer x;
        Integer value;
        std::vector<Integer> divisors;
    };
    std::vector<Point> points;
    for (long step = 0; points.size() < half + 3; ++step) {
        Integer x = (step % 2 == 1) ? Integer((step + 1) / 2) : Integer(-(step / 2));
        Integer value = evaluate(poly, x);
        if (value == 0) return false;
        points.push_back({x, value, positive_divisors(value)});
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });

    for (std::size_t k = 1; k <= half; ++k) {
        std::vector<Integer> xs(k);
        for (std::size_t i = 0; i < k; ++i) xs[i] = points[i].x;
        std::vector<std::size_t> odometer(k, 0);
        std::vector<Integer> vs(k);
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) {
                const auto& divs = points[i].divisors;
                std::size_t slot = odometer[i];
                vs[i] = (slot % 2 == 0) ? divs[slot / 2] : Integer(-divs[slot / 2]);
            }
            if (auto g = interpolate_monic(xs, vs)) {
                bool plausible = true;
                for (const auto& c : g->coefficients())
                    if (abs(c) > coefficient_bound) {
                        plausible = false;
                        break;
                    }
                for (std::size_t i = k; plausible && i < points.size(); ++i) {
                    Integer gv = evaluate(*g, points[i].x);
                    plausible = gv != 0 && mpz_divisible_p(points[i].value.get_mpz_t(), gv.get_mpz_t()) != 0;
                }
                if (plausible && divide_monic(poly, *g).second.is_zero()) return false;
            }
            std::size_t i = 0;
            while (i < k && ++odometer[i] == 2 * points[i].divisors.size()) odometer[i++] = 0;
            if (i == k) break;
        }
    }
    return true;
}

Integer root_bound(const IntPolynomial& poly) {
    if (!poly.is_monic() || poly.deg() < 1) fail(ErrorKind::invalid_argument, "root_bound expects a monic polynomial of degree >= 1");
    return height(poly) + 1;
}

Rational cauchy_bound(const IntPolynomial& poly) {
    if (poly.is_zero() || poly.deg() < 1) fail(ErrorKind::invalid_argument, "cauchy_bound expects degree >= 1");
    const auto& c = poly.coefficients();
    Integer m = 0;
    for (std::size_t j = 0; j + 1 < c.size(); ++j) m = std::max(m, Integer(abs(c[j])));
    return 1 + Rational(m, abs(c.back()));
}

Integer content(const IntPolynomial& p) {
    Integer g = 0;
    for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Integer> c(p.coefficients());
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& a, const IntPolynomial& monic) {
    if (!monic.is_monic()) fail(ErrorKind::invalid_argument, "divide_monic expects a monic divisor");
    if (a.is_zero() || a.deg() < monic.deg()) return {IntPolynomial{}, a};
    std::vector<Integer> r(a.coefficients());
    const auto& m = monic.coefficients();
    const std::size_t db = monic.deg();
    std::vector<Integer> q(a.deg() - db + 1, Integer(0));
    for (std::size_t i = a.deg() + 1; i-- > db;) {
        Integer lead = r[i];
        if (lead == 0) continue;
        q[i - db] = lead;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= lead * m[j];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

namespace {

std::pair<IntPolynomial, IntPolynomial> pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) fail(ErrorKind::invalid_argument, "division by the zero polynomial");
    if (a.is_zero() || a.deg() < b.deg()) return {IntPolynomial{}, a};
    const std::size_t db = b.deg();
    const Integer& lb = b.leading();
    std::vector<Integer> r(a.coefficients());
    std::vector<Integer> q(a.deg() - db + 1, Integer(0));
    const std::size_t rounds = a.deg() - db + 1;
    for (std::size_t step = 0; step < rounds; ++step) {
        const std::size_t i = a.deg() - step;
        // r <- lb * r - r_i t^(i-db) b ; q <- lb * q + r_i t^(i-db)
        Integer lead = r[i];
        for (auto& x : q) x *= lb;
        q[i - db] += lead;
        for (auto& x : r) x *= lb;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= lead * b.coefficients()[j];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

} // namespace

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) { return pseudo_divide(a, b).second; }

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = primitive_part(a);
    IntPolynomial y = primitive_part(b);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.deg() < y.deg()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return primitive_part(x);
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.is_zero()) fail(ErrorKind::undefined_input, "square-free part of the zero polynomial");
    if (p.deg() == 0) return IntPolynomial{1};
    IntPolynomial g = gcd(p, derivative(p));
    if (g.deg() == 0) return primitive_part(p);
    return primitive_part(pseudo_divide(p, g).first);
}

IntPolynomial affine_substitute(const IntPolynomial& p, const Rational& s, int c) {
    if (c != 1 && c != -1) fail(ErrorKind::invalid_argument, "affine_substitute scale must be +1 or -1");
    if (p.is_zero()) return p;
    // Horner in the polynomial ring: acc = acc * (s + c t) + a_j
    std::vector<Rational> acc;
    const auto& a = p.coefficients();
    for (std::size_t j = a.size(); j-- > 0;) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * s;
            next[i + 1] += acc[i] * c;
        }
        next[0] += a[j];
        acc = std::move(next);
    }
    Integer lcm = 1;
    for (const auto& x : acc) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = Rational(acc[i] * lcm).get_num();
    return primitive_part(IntPolynomial(std::move(out)));
}

namespace {

std::vector<std::string_view> split_list(std::string_view text) {
    auto is_space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        fail(ErrorKind::invalid_argument, "polynomial must be written as [a_0,...,a_n]");
    text = text.substr(1, text.size() - 2);
    std::vector<std::string_view> items;
    bool blank = std::all_of(text.begin(), text.end(), is_space);
    if (blank) return items;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        items.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return items;
}

} // namespace

IntPolynomial parse_polynomial(std::string_view text) {
    std::vector<Integer> c;
    for (auto item : split_list(text)) c.push_back(parse_integer(item));
    return IntPolynomial(std::move(c));
}

std::string format_polynomial(const IntPolynomial& p) {
    std::string out = "[";
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += c[i].get_str();
    }
    return out + "]";
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational RationalPolynomial::derivative_bound(const Rational& low, const Rational& high) const {
    Rational m = std::max(Rational(abs(low)), Rational(abs(high)));
    Rational total = 0;
    Rational m_power = 1;
    for (std::size_t j = 1; j < coefficients.size(); ++j) {
        total += Rational(abs(coefficients[j])) * static_cast<unsigned long>(j) * m_power;
        m_power *= m;
    }
    return total;
}

RationalPolynomial parse_rational_polynomial(std::string_view text) {
    RationalPolynomial out;
    for (auto item : split_list(text)) out.coefficients.push_back(parse_rational(item));
    return out;
}

} // namespace algint
