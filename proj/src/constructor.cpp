#include "algint/constructor.hpp"

#include "algint/error.hpp"

#include <algorithm>

namespace algint {

namespace {

Rational ulong_q(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

Rational q_power(const Integer& Q, long e) { return power(Rational(Q), e); }

Integer inner_coefficient(const std::vector<Integer>& t, const ReducedBasis& basis, std::size_t j) {
    Integer s = 0;
    for (std::size_t i = 0; i < t.size(); ++i) s += t[i] * basis.coefficient(i, j);
    return s;
}

void require_basis(const ReducedBasis& basis) {
    if (basis.dimension() == 0 || basis.delta == 0) fail(ErrorKind::invalid_argument, "basis must be independent");
}

class CheckList {
public:
    explicit CheckList(std::vector<Check>& out) : out_(out) {}

    bool add(std::string id, Rational lhs, std::string rel, Rational rhs) {
        Check c{std::move(id), std::move(lhs), std::move(rel), std::move(rhs), false};
        c.pass = evaluate_relation(c.lhs, c.rel, c.rhs);
        out_.push_back(std::move(c));
        return out_.back().pass;
    }

    // |x - root| <= radius, decided exactly; lhs records the enclosure bound
    bool add_distance(std::string id, const RootInterval& root, const Rational& x, const Rational& radius) {
        Check c{std::move(id), distance_upper_bound(root, x), "<=", radius, false};
        RootInterval probe = root;
        c.pass = compare_distance(probe, x, radius) <= 0;
        out_.push_back(std::move(c));
        return out_.back().pass;
    }

private:
    std::vector<Check>& out_;
};

Rational max_theta_gap(const std::vector<Rational>& theta, const std::vector<Integer>& t) {
    Rational gap = 0;
    for (std::size_t i = 0; i < theta.size(); ++i) gap = std::max(gap, Rational(abs(theta[i] - t[i])));
    return gap;
}

void add_prime_checks(CheckList& checks, const Integer& p, const Integer& delta, std::size_t n) {
    Integer f = factorial(static_cast<unsigned long>(n));
    checks.add("prime_lower", Rational(f), "<", Rational(p));
    checks.add("prime_upper", Rational(p), "<", Rational(2 * f));
    Integer r = delta % p;
    checks.add("prime_coprime", Rational(r), "!=", Rational(0));
}

Rational largest_norm(const ReducedBasis& basis) {
    return *std::max_element(basis.norms.begin(), basis.norms.end());
}

void finish(ConstructionCertificate& cert) {
    bool ok = cert.eisenstein;
    for (const auto& c : cert.checks) ok = ok && c.pass;
    if (cert.roots.size() < (cert.two_point ? 2u : 1u)) {
        cert.status = "no-real-root";
    } else {
        cert.status = ok ? "certified" : "audit-failed";
    }
}

} // namespace

ConstructorConfig ConstructorConfig::for_1d(std::size_t n, const Integer& Q) {
    if (n < 2) fail(ErrorKind::invalid_argument, "degree must be at least 2");
    ConstructorConfig c;
    c.n = n;
    c.Q = Q;
    c.delta0 = Rational(1) / (Rational(Integer(1) << static_cast<unsigned>(n + 8)) * ulong_q((n - 1) * (n - 1)));
    c.u1 = c.u2 = Rational(0);
    c.root_width = q_power(Q, -2 * static_cast<long>(n));
    return c;
}

ConstructorConfig ConstructorConfig::for_2d(std::size_t n, const Integer& Q) {
    if (n < 4) fail(ErrorKind::unsupported_degree, "the two-point construction needs degree at least 4");
    ConstructorConfig c;
    c.n = n;
    c.Q = Q;
    c.delta0 = Rational(1) / (Rational(Integer(1) << static_cast<unsigned>(n + 40)) * power(ulong_q(n - 1), 4));
    c.u1 = c.u2 = Rational(static_cast<long>(n) - 2, 2);
    c.u1.canonicalize();
    c.u2.canonicalize();
    c.root_width = q_power(Q, -2 * static_cast<long>(n));
    return c;
}

bool evaluate_relation(const Rational& lhs, const std::string& rel, const Rational& rhs) {
    if (rel == "<=") return lhs <= rhs;
    if (rel == "<") return lhs < rhs;
    if (rel == "==") return lhs == rhs;
    if (rel == "!=") return lhs != rhs;
    fail(ErrorKind::invalid_argument, "unknown relation '" + rel + "'");
}

const Check* ConstructionCertificate::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    for (const auto& c : paper_checks)
        if (c.id == id) return &c;
    return nullptr;
}

bool ConstructionCertificate::basis_bounds_pass() const {
    const Check* c = find("basis_bounds");
    return c != nullptr && c->pass;
}

Integer select_prime(const Integer& delta, std::size_t n) {
    if (n < 2) fail(ErrorKind::invalid_argument, "degree must be at least 2");
    if (delta == 0) fail(ErrorKind::invalid_argument, "delta must be nonzero");
    const Integer f = factorial(static_cast<unsigned long>(n));
    Integer p = f;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p >= 2 * f) break;
        if (delta % p != 0) return p;
    }
    fail(ErrorKind::no_prime, "every prime in (n!, 2n!) divides delta = " + delta.get_str());
}

LinearSystem theta_system_1d(const ReducedBasis& basis, const Rational& x0, const Integer& Q, const Integer& p,
                             const Rational& slack) {
    require_basis(basis);
    const std::size_t n = basis.dimension();
    LinearSystem sys;
    std::vector<Rational> value(n), slope(n);
    Rational slope_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        value[i] = p * evaluate(basis.vectors[i], x0);
        Rational d = evaluate(derivative(basis.vectors[i]), x0);
        slope[i] = p * d;
        slope_sum += abs(d);
    }
    sys.matrix.push_back(std::move(value));
    sys.rhs.push_back(p * ulong_q(n + 1) * slack * q_power(Q, 1 - static_cast<long>(n)) - power(x0, static_cast<long>(n)));
    sys.matrix.push_back(std::move(slope));
    sys.rhs.push_back(p * Q + p * slope_sum - ulong_q(n) * power(x0, static_cast<long>(n) - 1));
    for (std::size_t j = 2; j < n; ++j) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = basis.coefficient(i, j);
        sys.matrix.push_back(std::move(row));
        sys.rhs.emplace_back(0);
    }
    return sys;
}

LinearSystem theta_system_2d(const ReducedBasis& basis, const Rational& x0, const Rational& y0, const Integer& Q,
                             const Integer& p, const Rational& slack, const Rational& u1, const Rational& u2) {
    require_basis(basis);
    const std::size_t n = basis.dimension();
    if (n < 4) fail(ErrorKind::unsupported_degree, "the two-point system needs degree at least 4");
    if (x0 == y0) fail(ErrorKind::degenerate_pair, "x0 and y0 coincide");
    LinearSystem sys;
    auto point_rows = [&](const Rational& x, const Rational& u) {
        std::vector<Rational> value(n), slope(n);
        Rational slope_sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            value[i] = p * evaluate(basis.vectors[i], x);
            Rational d = evaluate(derivative(basis.vectors[i]), x);
            slope[i] = p * d;
            slope_sum += abs(d);
        }
        sys.matrix.push_back(std::move(value));
        sys.rhs.push_back(p * ulong_q(n + 1) * slack / exact_power(Q, u) - power(x, static_cast<long>(n)));
        sys.matrix.push_back(std::move(slope));
        sys.rhs.push_back(p * Q + p * slope_sum - ulong_q(n) * power(x, static_cast<long>(n) - 1));
    };
    point_rows(x0, u1);
    point_rows(y0, u2);
    for (std::size_t j = 4; j < n; ++j) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = basis.coefficient(i, j);
        sys.matrix.push_back(std::move(row));
        sys.rhs.emplace_back(0);
    }
    return sys;
}

std::vector<Rational> solve_theta_1d(const ReducedBasis& basis, const Rational& x0, const Integer& Q, const Integer& p,
                                     const Rational& slack) {
    LinearSystem sys = theta_system_1d(basis, x0, Q, p, slack);
    auto theta = solve(sys.matrix, sys.rhs);
    if (!theta) fail(ErrorKind::internal, "theta system is singular");
    return *theta;
}

std::vector<Rational> solve_theta_2d(const ReducedBasis& basis, const Rational& x0, const Rational& y0,
                                     const Integer& Q, const Integer& p, const Rational& slack, const Rational& u1,
                                     const Rational& u2) {
    LinearSystem sys = theta_system_2d(basis, x0, y0, Q, p, slack, u1, u2);
    auto theta = solve(sys.matrix, sys.rhs);
    if (!theta) fail(ErrorKind::internal, "theta system is singular");
    return *theta;
}

std::vector<Integer> round_theta_eisenstein(const std::vector<Rational>& theta, const ReducedBasis& basis,
                                            const Integer& p) {
    if (theta.size() != basis.dimension()) fail(ErrorKind::invalid_argument, "theta and basis sizes differ");
    std::vector<Integer> t(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) t[i] = floor_of(theta[i]);
    if (inner_coefficient(t, basis, 0) % p != 0) return t;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (basis.coefficient(i, 0) % p != 0) {
            t[i] += 1;
            return t;
        }
    }
    fail(ErrorKind::invalid_argument, "p divides every constant coefficient of the basis");
}

IntPolynomial assemble(const std::vector<Integer>& t, const ReducedBasis& basis, const Integer& p, std::size_t n) {
    if (t.size() != basis.dimension()) fail(ErrorKind::invalid_argument, "t and basis sizes differ");
    std::vector<Integer> c(n + 1, Integer(0));
    for (std::size_t j = 0; j < n; ++j) c[j] = p * inner_coefficient(t, basis, j);
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

ConstructionCertificate construct_1d(const Rational& x0, const ConstructorConfig& config) {
    const std::size_t n = config.n;
    const Integer& Q = config.Q;
    if (n < 2) fail(ErrorKind::invalid_argument, "degree must be at least 2");
    if (Q < 1) fail(ErrorKind::invalid_argument, "Q must be at least 1");
    if (config.delta0 <= 0 || config.root_width <= 0)
        fail(ErrorKind::invalid_argument, "delta0 and root width must be positive");
    if (abs(x0) > Rational(1, 2)) fail(ErrorKind::out_of_domain, "|x0| must not exceed 1/2");

    ConstructionCertificate cert;
    cert.config = config;
    cert.x0 = x0;
    const long ln = static_cast<long>(n);
    FormSystem body = body_1d(x0, Q, n);
    cert.basis = reduce(body);
    cert.slack = largest_norm(cert.basis);
    cert.reduction_slack = reduction_slack(n);
    cert.prime = select_prime(cert.basis.delta, n);
    const Integer& p = cert.prime;
    const Rational& s = cert.slack;
    const Rational paper_slack = power(config.delta0, 1 - ln);

    LinearSystem sys = theta_system_1d(cert.basis, x0, Q, p, s);
    cert.system_determinant = determinant(sys.matrix);
    cert.theta = solve_theta_1d(cert.basis, x0, Q, p, s);
    cert.t = round_theta_eisenstein(cert.theta, cert.basis, p);
    cert.polynomial = assemble(cert.t, cert.basis, p, n);
    cert.eisenstein = eisenstein_check(cert.polynomial, p);
    cert.c_paper = ulong_q(n * (2 * n + 1)) * paper_slack;
    cert.c_slack = ulong_q(n * (2 * n + 1)) * s;

    const Rational value = abs(evaluate(cert.polynomial, x0));
    const Rational slope = abs(evaluate(derivative(cert.polynomial), x0));
    const Rational Qv = q_power(Q, 1 - ln);
    const Rational sQ = s * Q;
    CheckList checks(cert.checks), paper(cert.paper_checks);

    checks.add("basis_bounds", s, "<=", paper_slack * Rational(Integer(1) << static_cast<unsigned>(n * (n - 1) / 2)));
    paper.add("basis_bounds_paper", s, "<=", paper_slack);
    add_prime_checks(checks, p, cert.basis.delta, n);
    checks.add("eq6", max_theta_gap(cert.theta, cert.t), "<=", Rational(1));
    checks.add("det_system", cert.system_determinant, "==", Rational(p * p * cert.basis.delta));
    checks.add("eq7_lower", p * s * Qv, "<=", value);
    checks.add("eq7_upper", value, "<=", p * ulong_q(2 * n + 1) * s * Qv);
    checks.add("eq8_lower", Rational(p * Q), "<=", slope);
    checks.add("eq8_upper", slope, "<=", (p + 2 * p * ulong_q(n) * s) * Q);
    for (std::size_t j = 2; j < n; ++j)
        checks.add("eq9_" + std::to_string(j), Rational(abs(inner_coefficient(cert.t, cert.basis, j))), "<=",
                   ulong_q(n) * sQ);

    // bounds on P's own coefficients b_1, b_0 from the value, slope and inner bounds with |x0| <= 1/2
    const Rational b_j_bound = p * ulong_q(n) * sQ;
    Rational rhs10 = (p + 2 * p * ulong_q(n) * s) * Q + ulong_q(n) * power(Rational(1, 2), ln - 1);
    Rational rhs11 = p * ulong_q(2 * n + 1) * s * Qv + power(Rational(1, 2), ln);
    for (std::size_t j = 2; j < n; ++j) {
        rhs10 += ulong_q(j) * b_j_bound * power(Rational(1, 2), static_cast<long>(j) - 1);
        rhs11 += b_j_bound * power(Rational(1, 2), static_cast<long>(j));
    }
    rhs11 += rhs10 / 2;
    checks.add("eq10", Rational(abs(cert.polynomial.coefficient(1))), "<=", rhs10);
    checks.add("eq11", Rational(abs(cert.polynomial.coefficient(0))), "<=", rhs11);

    const Rational H(height(cert.polynomial));
    const Rational f6 = 6 * Rational(factorial(static_cast<unsigned long>(n + 1)));
    checks.add("eq12", H, "<=", f6 * sQ);
    paper.add("eq12_paper", H, "<=", f6 * paper_slack * Q);

    const Rational Qn = q_power(Q, -ln);
    checks.add("lemma4", nearest_root_distance_bound(cert.polynomial, x0), "<=", cert.c_slack * Qn);

    try {
        RootInterval alpha = nearest_real_root(cert.polynomial, x0, config.root_width);
        checks.add_distance("eq13", alpha, x0, cert.c_slack * Rational(cert.reduction_slack) * Qn);
        paper.add_distance("eq13_paper", alpha, x0, cert.c_paper * Qn);
        cert.roots.push_back({"alpha1", x0, alpha});
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::no_real_root) throw;
    }
    finish(cert);
    return cert;
}

ConstructionCertificate construct_2d(const Rational& x0, const Rational& y0, const ConstructorConfig& config) {
    const std::size_t n = config.n;
    const Integer& Q = config.Q;
    if (n < 4) fail(ErrorKind::unsupported_degree, "the two-point construction needs degree at least 4");
    if (Q < 1) fail(ErrorKind::invalid_argument, "Q must be at least 1");
    if (config.delta0 <= 0 || config.root_width <= 0)
        fail(ErrorKind::invalid_argument, "delta0 and root width must be positive");
    if (abs(x0) > Rational(1, 2) || abs(y0) > Rational(1, 2))
        fail(ErrorKind::out_of_domain, "|x0| and |y0| must not exceed 1/2");
    if (abs(x0 - y0) <= config.epsilon)
        fail(ErrorKind::diagonal_violation, "|x0 - y0| must exceed epsilon = " + format_rational(config.epsilon));

    ConstructionCertificate cert;
    cert.two_point = true;
    cert.config = config;
    cert.x0 = x0;
    cert.y0 = y0;
    const long ln = static_cast<long>(n);
    const Rational& u1 = config.u1;
    const Rational& u2 = config.u2;
    FormSystem body = body_2d(x0, y0, Q, n, u1, u2);
    cert.basis = reduce(body);
    cert.slack = largest_norm(cert.basis);
    cert.reduction_slack = reduction_slack(n);
    cert.prime = select_prime(cert.basis.delta, n);
    const Integer& p = cert.prime;
    const Rational& s = cert.slack;
    const Rational paper_slack = power(config.delta0, 1 - ln);

    LinearSystem sys = theta_system_2d(cert.basis, x0, y0, Q, p, s, u1, u2);
    cert.system_determinant = determinant(sys.matrix);
    cert.theta = solve_theta_2d(cert.basis, x0, y0, Q, p, s, u1, u2);
    cert.t = round_theta_eisenstein(cert.theta, cert.basis, p);
    cert.polynomial = assemble(cert.t, cert.basis, p, n);
    cert.eisenstein = eisenstein_check(cert.polynomial, p);
    cert.c_paper = ulong_q(n * (2 * n + 1)) * paper_slack;
    cert.c_slack = ulong_q(n * (2 * n + 1)) * s;

    const Rational Qx = 1 / exact_power(Q, u1);
    const Rational Qy = 1 / exact_power(Q, u2);
    const Rational sQ = s * Q;
    const Rational pn(p * static_cast<unsigned long>(n));
    CheckList checks(cert.checks), paper(cert.paper_checks);

    checks.add("basis_bounds", s, "<=", paper_slack * Rational(Integer(1) << static_cast<unsigned>(n * (n - 1) / 2)));
    paper.add("basis_bounds_paper", s, "<=", paper_slack);
    add_prime_checks(checks, p, cert.basis.delta, n);
    checks.add("eq19", max_theta_gap(cert.theta, cert.t), "<=", Rational(1));
    checks.add("eq18", cert.system_determinant, "==", p * p * p * p * power(y0 - x0, 4) * cert.basis.delta);

    const IntPolynomial dP = derivative(cert.polynomial);
    auto sandwich = [&](const std::string& value_id, const std::string& slope_id, const Rational& x,
                        const Rational& Qu) {
        Rational value = abs(evaluate(cert.polynomial, x));
        Rational slope = abs(evaluate(dP, x));
        checks.add(value_id + "_lower", p * s * Qu, "<=", value);
        checks.add(value_id + "_upper", value, "<=", p * ulong_q(2 * n + 1) * s * Qu);
        checks.add(slope_id + "_lower", Rational(p * Q), "<=", slope);
        checks.add(slope_id + "_upper", slope, "<=", (p + 2 * pn * s) * Q);
    };
    sandwich("eq20", "eq22", x0, Qx);
    sandwich("eq21", "eq23", y0, Qy);

    std::vector<Integer> a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = inner_coefficient(cert.t, cert.basis, j);
    for (std::size_t j = 4; j < n; ++j)
        checks.add("eq24_" + std::to_string(j), Rational(abs(a[j])), "<=", ulong_q(n) * sQ);

    auto low_value = [&](const Rational& x) {
        Rational v = 0;
        for (std::size_t j = 4; j-- > 0;) v = v * x + a[j];
        return v;
    };
    auto low_slope = [&](const Rational& x) -> Rational { return 3 * a[3] * x * x + 2 * a[2] * x + a[1]; };
    const std::vector<Rational> l{low_value(x0), low_value(y0), low_slope(x0), low_slope(y0)};
    const Rational n3 = power(ulong_q(n), 3);
    checks.add("eq25_1", Rational(abs(l[0])), "<", 2 * pn * sQ);
    checks.add("eq25_2", Rational(abs(l[1])), "<", 2 * pn * sQ);
    checks.add("eq25_3", Rational(abs(l[2])), "<", 2 * p * n3 * sQ);
    checks.add("eq25_4", Rational(abs(l[3])), "<", 2 * p * n3 * sQ);

    RationalMatrix m{{Rational(1), x0, x0 * x0, x0 * x0 * x0},
                     {Rational(1), y0, y0 * y0, y0 * y0 * y0},
                     {Rational(0), Rational(1), 2 * x0, 3 * x0 * x0},
                     {Rational(0), Rational(1), 2 * y0, 3 * y0 * y0}};
    auto solved = solve(m, l);
    if (!solved) fail(ErrorKind::internal, "the 4x4 system is singular");
    long mismatches = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        if ((*solved)[j] != a[j]) ++mismatches;
        checks.add("eq26_" + std::to_string(j), Rational(abs((*solved)[j])), "<", 10000 * p * n3 * sQ);
    }
    checks.add("eq26_solution", Rational(mismatches), "==", Rational(0));

    const Rational H(height(cert.polynomial));
    const Rational f = 20000 * Rational(factorial(static_cast<unsigned long>(n + 4)));
    checks.add("height", H, "<", f * sQ);
    paper.add("height_paper", H, "<", f * paper_slack * Q);

    const Rational Qx1 = Qx / Q;
    const Rational Qy1 = Qy / Q;
    checks.add("lemma4_x", nearest_root_distance_bound(cert.polynomial, x0), "<=", cert.c_slack * Qx1);
    checks.add("lemma4_y", nearest_root_distance_bound(cert.polynomial, y0), "<=", cert.c_slack * Qy1);

    try {
        RootInterval alpha = nearest_real_root(cert.polynomial, x0, config.root_width);
        RootInterval beta = nearest_real_root(cert.polynomial, y0, config.root_width);
        const Rational R(cert.reduction_slack);
        checks.add_distance("proximity_x", alpha, x0, cert.c_slack * R * Qx1);
        checks.add_distance("proximity_y", beta, y0, cert.c_slack * R * Qy1);
        paper.add_distance("proximity_x_paper", alpha, x0, cert.c_paper * Qx1);
        paper.add_distance("proximity_y_paper", beta, y0, cert.c_paper * Qy1);
        RootInterval a = alpha, b = beta;
        checks.add("conjugates_distinct", Rational(compare(a, b)), "!=", Rational(0));
        cert.roots.push_back({"alpha1", x0, alpha});
        cert.roots.push_back({"beta1", y0, beta});
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::no_real_root) throw;
    }
    finish(cert);
    return cert;
}

} // namespace algint
