#include "algint/lattice.hpp"

#include "algint/error.hpp"

#include <algorithm>
#include <numeric>

namespace algint {

namespace {

using Vector = std::vector<Rational>;
using Coefficients = std::vector<Integer>;

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational sup_norm(const Vector& v) {
    Rational best = 0;
    for (const auto& x : v) best = std::max(best, Rational(abs(x)));
    return best;
}

Integer round_nearest(const Rational& x) { return floor_of(x + Rational(1, 2)); }

Integer isqrt_floor(const Rational& w) {
    Integer f = floor_of(w);
    if (f <= 0) return 0;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return r;
}

// Lattice spanned by the columns of the scaled form matrix, kept alongside
// the integer coefficient vectors that produce each basis vector.
struct Lattice {
    std::vector<Vector> b;
    std::vector<Coefficients> u;
    std::vector<Vector> bstar;
    std::vector<Vector> mu;
    Vector norm2;

    std::size_t size() const { return b.size(); }

    void gram_schmidt() {
        const std::size_t n = size();
        bstar.assign(n, Vector(n));
        mu.assign(n, Vector(n, Rational(0)));
        norm2.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            bstar[i] = b[i];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(b[i], bstar[j]) / norm2[j];
                for (std::size_t k = 0; k < n; ++k) bstar[i][k] -= mu[i][j] * bstar[j][k];
            }
            norm2[i] = dot(bstar[i], bstar[i]);
        }
    }

    void subtract(std::size_t k, std::size_t j, const Integer& q) {
        for (std::size_t c = 0; c < size(); ++c) {
            b[k][c] -= q * b[j][c];
            u[k][c] -= q * u[j][c];
        }
        for (std::size_t l = 0; l < j; ++l) mu[k][l] -= q * mu[j][l];
        mu[k][j] -= q;
    }

    void lll() {
        const Rational delta(3, 4);
        gram_schmidt();
        std::size_t k = 1;
        while (k < size()) {
            for (std::size_t j = k; j-- > 0;) {
                Integer q = round_nearest(mu[k][j]);
                if (q != 0) subtract(k, j, q);
            }
            if (norm2[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
                ++k;
            } else {
                std::swap(b[k], b[k - 1]);
                std::swap(u[k], u[k - 1]);
                gram_schmidt();
                k = std::max<std::size_t>(k - 1, 1);
            }
        }
    }
};

// Fincke-Pohst search for the nonzero lattice vector of least sup norm,
// restricted to vectors strictly shorter than `bound`.
class ShortestSearch {
public:
    ShortestSearch(const Lattice& lattice, Rational bound)
        : lattice_(lattice), best_(std::move(bound)), c_(lattice.size(), Integer(0)) {
        const std::size_t n = lattice.size();
        radius2_ = Rational(static_cast<unsigned long>(n)) * best_ * best_;
        search(n - 1, 0);
    }

    bool found() const { return !best_c_.empty(); }
    const Coefficients& combination() const { return best_c_; }
    const Rational& norm() const { return best_; }

private:
    void search(std::size_t level, const Rational& partial) {
        const std::size_t n = lattice_.size();
        Rational center = 0;
        for (std::size_t i = level + 1; i < n; ++i) center -= c_[i] * lattice_.mu[i][level];
        Rational remaining = radius2_ - partial;
        if (remaining < 0) return;
        Rational w = remaining / lattice_.norm2[level];
        Integer r = isqrt_floor(w) + 1;
        Integer lo = floor_of(center) - r;
        Integer hi = ceil_of(center) + r;
        for (Integer x = lo; x <= hi; ++x) {
            Rational d = x - center;
            if (d * d > w) continue;
            c_[level] = x;
            Rational next = partial + d * d * lattice_.norm2[level];
            if (next > radius2_) continue;
            if (level > 0) {
                search(level - 1, next);
            } else {
                consider();
            }
        }
        c_[level] = 0;
    }

    void consider() {
        const std::size_t n = lattice_.size();
        if (std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x == 0; })) return;
        Vector v(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t k = 0; k < n; ++k) v[k] += c_[i] * lattice_.b[i][k];
        }
        Rational s = sup_norm(v);
        if (s < best_) {
            best_ = s;
            best_c_ = c_;
            radius2_ = Rational(static_cast<unsigned long>(n)) * best_ * best_;
        }
    }

    const Lattice& lattice_;
    Rational best_;
    Rational radius2_;
    Coefficients c_;
    Coefficients best_c_;
};

IntPolynomial to_polynomial(const Coefficients& c) { return IntPolynomial(c); }

} // namespace

FormSystem body_1d(const Rational& x0, const Integer& Q, std::size_t n) {
    if (n < 2) fail(ErrorKind::invalid_argument, "degree must be at least 2");
    if (Q < 1) fail(ErrorKind::invalid_argument, "Q must be at least 1");
    if (abs(x0) > Rational(1, 2)) fail(ErrorKind::out_of_domain, "|x0| must not exceed 1/2");
    FormSystem body;
    Vector value(n), slope(n, Rational(0));
    Rational pw = 1;
    for (std::size_t j = 0; j < n; ++j) {
        value[j] = pw;
        if (j + 1 < n) slope[j + 1] = Rational(static_cast<unsigned long>(j + 1)) * pw;
        pw *= x0;
    }
    body.forms.push_back(std::move(value));
    body.bounds.push_back(power(Rational(Q), -static_cast<long>(n - 1)));
    body.forms.push_back(std::move(slope));
    body.bounds.emplace_back(Q);
    for (std::size_t j = 2; j < n; ++j) {
        Vector e(n, Rational(0));
        e[j] = 1;
        body.forms.push_back(std::move(e));
        body.bounds.emplace_back(Q);
    }
    return body;
}

FormSystem body_2d(const Rational& x0, const Rational& y0, const Integer& Q, std::size_t n, const Rational& u1,
                   const Rational& u2) {
    if (n < 4) fail(ErrorKind::unsupported_degree, "the two-point body needs degree at least 4");
    if (Q < 1) fail(ErrorKind::invalid_argument, "Q must be at least 1");
    if (u1 + u2 != static_cast<long>(n) - 2) fail(ErrorKind::constraint_violation, "u1 + u2 must equal n - 2");
    if (u1 <= 0 || u2 <= 0) fail(ErrorKind::constraint_violation, "u1 and u2 must be positive");
    if (abs(x0) > Rational(1, 2) || abs(y0) > Rational(1, 2))
        fail(ErrorKind::out_of_domain, "|x0| and |y0| must not exceed 1/2");
    auto value_form = [n](const Rational& x) {
        Vector v(n);
        Rational pw = 1;
        for (std::size_t j = 0; j < n; ++j, pw *= x) v[j] = pw;
        return v;
    };
    auto slope_form = [n](const Rational& x) {
        Vector v(n, Rational(0));
        Rational pw = 1;
        for (std::size_t j = 1; j < n; ++j, pw *= x) v[j] = Rational(static_cast<unsigned long>(j)) * pw;
        return v;
    };
    FormSystem body;
    body.forms = {value_form(x0), value_form(y0), slope_form(x0), slope_form(y0)};
    body.bounds = {1 / exact_power(Q, u1), 1 / exact_power(Q, u2), Rational(Q), Rational(Q)};
    for (std::size_t j = 4; j < n; ++j) {
        Vector e(n, Rational(0));
        e[j] = 1;
        body.forms.push_back(std::move(e));
        body.bounds.emplace_back(Q);
    }
    return body;
}

Rational form_value(const FormSystem& body, std::size_t i, const IntPolynomial& a) {
    const Vector& row = body.forms.at(i);
    Rational s = 0;
    const auto& c = a.coefficients();
    if (c.size() > row.size()) fail(ErrorKind::invalid_argument, "vector longer than the form system");
    for (std::size_t j = 0; j < c.size(); ++j) s += row[j] * c[j];
    return s;
}

Rational scaled_norm(const FormSystem& body, const IntPolynomial& a) {
    Rational best = 0;
    for (std::size_t i = 0; i < body.dimension(); ++i)
        best = std::max(best, Rational(abs(form_value(body, i, a)) / body.bounds[i]));
    return best;
}

Integer reduction_slack(std::size_t n) {
    Integer two_power = power(Integer(2), static_cast<unsigned long>(n * (n - 1) / 2));
    return two_power * factorial(static_cast<unsigned long>(n));
}

ReducedBasis reduce(const FormSystem& body) {
    const std::size_t n = body.dimension();
    if (n == 0 || body.bounds.size() != n) fail(ErrorKind::invalid_argument, "form system must be square");
    for (const auto& row : body.forms)
        if (row.size() != n) fail(ErrorKind::invalid_argument, "form system must be square");
    for (const auto& bound : body.bounds)
        if (bound <= 0) fail(ErrorKind::invalid_argument, "form bounds must be positive");
    if (determinant(body.forms) == 0) fail(ErrorKind::degenerate_body, "form matrix is singular");

    Lattice lattice;
    for (std::size_t j = 0; j < n; ++j) {
        Vector column(n);
        for (std::size_t i = 0; i < n; ++i) column[i] = body.forms[i][j] / body.bounds[i];
        lattice.b.push_back(std::move(column));
        Coefficients e(n, Integer(0));
        e[j] = 1;
        lattice.u.push_back(std::move(e));
    }
    lattice.lll();

    Rational shortest = sup_norm(lattice.b[0]);
    for (const auto& v : lattice.b) shortest = std::min(shortest, sup_norm(v));
    ShortestSearch search(lattice, shortest);
    if (search.found()) {
        const Coefficients& c = search.combination();
        // swap the new vector in where the combination has its smallest nonzero weight
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            if (k == n || abs(c[i]) < abs(c[k]) ||
                (abs(c[i]) == abs(c[k]) && sup_norm(lattice.b[i]) > sup_norm(lattice.b[k])))
                k = i;
        }
        Vector v(n, Rational(0));
        Coefficients w(n, Integer(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                v[j] += c[i] * lattice.b[i][j];
                w[j] += c[i] * lattice.u[i][j];
            }
        }
        lattice.b[k] = std::move(v);
        lattice.u[k] = std::move(w);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Rational> norms(n);
    for (std::size_t i = 0; i < n; ++i) norms[i] = sup_norm(lattice.b[i]);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] < norms[b]; });

    ReducedBasis out;
    IntegerMatrix a;
    for (std::size_t i : order) {
        a.push_back(lattice.u[i]);
        out.norms.push_back(norms[i]);
    }
    Integer det = determinant(a);
    if (det == 0) fail(ErrorKind::internal, "reduced vectors are dependent");
    if (det < 0) {
        for (auto& x : a.back()) x = -x;
        det = -det;
    }
    out.delta = det;
    for (auto& row : a) out.vectors.push_back(to_polynomial(row));
    return out;
}

std::vector<VectorBoundReport> verify_basis_bounds(const ReducedBasis& basis, const FormSystem& body,
                                                   const Rational& slack) {
    std::vector<VectorBoundReport> out;
    for (const auto& v : basis.vectors) {
        VectorBoundReport report;
        report.pass = true;
        for (std::size_t i = 0; i < body.dimension(); ++i) {
            FormBound f;
            f.value = abs(form_value(body, i, v));
            f.limit = slack * body.bounds[i];
            f.pass = f.value <= f.limit;
            report.pass = report.pass && f.pass;
            report.forms.push_back(std::move(f));
        }
        out.push_back(std::move(report));
    }
    return out;
}

} // namespace algint
