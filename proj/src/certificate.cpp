#include "algint/certificate.hpp"

#include "algint/error.hpp"
#include "algint/linear_algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace algint {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json integer_to_json(const Integer& value) {
    if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
    return value.get_str();
}

Integer integer_from_json(const json& value) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
        return Integer(std::to_string(value.get<std::int64_t>()));
    }
    if (value.is_string()) return parse_integer(value.get<std::string>());
    fail(ErrorKind::invalid_argument, "expected an integer, got " + value.dump());
}

namespace {

ordered_json rational_json(const Rational& r) { return format_rational(r); }

ordered_json polynomial_json(const IntPolynomial& p, std::size_t length) {
    ordered_json out = ordered_json::array();
    for (std::size_t j = 0; j < length; ++j) out.push_back(integer_to_json(p.coefficient(j)));
    return out;
}

ordered_json checks_json(const std::vector<Check>& checks) {
    ordered_json out = ordered_json::object();
    for (const auto& c : checks) {
        out[c.id] = {{"lhs", rational_json(c.lhs)}, {"rel", c.rel}, {"rhs", rational_json(c.rhs)}, {"pass", c.pass}};
    }
    return out;
}

} // namespace

ordered_json certificate_to_json(const ConstructionCertificate& cert) {
    const std::size_t n = cert.config.n;
    ordered_json doc;
    doc["kind"] = cert.two_point ? "construct2d" : "construct";
    ordered_json config;
    config["n"] = n;
    config["Q"] = integer_to_json(cert.config.Q);
    config["delta0"] = rational_json(cert.config.delta0);
    if (cert.two_point) {
        config["epsilon"] = rational_json(cert.config.epsilon);
        config["u1"] = rational_json(cert.config.u1);
        config["u2"] = rational_json(cert.config.u2);
    }
    config["root_width"] = rational_json(cert.config.root_width);
    doc["config"] = config;
    doc["x0"] = rational_json(cert.x0);
    if (cert.two_point) doc["y0"] = rational_json(cert.y0);
    ordered_json basis = ordered_json::array();
    for (const auto& v : cert.basis.vectors) basis.push_back(polynomial_json(v, n));
    doc["basis"] = basis;
    ordered_json norms = ordered_json::array();
    for (const auto& s : cert.basis.norms) norms.push_back(rational_json(s));
    doc["norms"] = norms;
    doc["delta"] = integer_to_json(cert.basis.delta);
    doc["slack"] = rational_json(cert.slack);
    doc["reduction_slack"] = integer_to_json(cert.reduction_slack);
    doc["prime"] = integer_to_json(cert.prime);
    doc["system_determinant"] = rational_json(cert.system_determinant);
    ordered_json theta = ordered_json::array();
    for (const auto& x : cert.theta) theta.push_back(rational_json(x));
    doc["theta"] = theta;
    ordered_json t = ordered_json::array();
    for (const auto& x : cert.t) t.push_back(integer_to_json(x));
    doc["t"] = t;
    doc["poly"] = polynomial_json(cert.polynomial, n + 1);
    doc["eisenstein"] = cert.eisenstein;
    const char* c_name = cert.two_point ? "c16" : "c14";
    doc[c_name] = {{"paper", rational_json(cert.c_paper)}, {"slack", rational_json(cert.c_slack)}};
    doc["checks"] = checks_json(cert.checks);
    doc["paper_checks"] = checks_json(cert.paper_checks);
    ordered_json roots = ordered_json::array();
    for (const auto& r : cert.roots) {
        roots.push_back({{"label", r.label},
                         {"target", rational_json(r.target)},
                         {"poly", polynomial_json(r.enclosure.polynomial, r.enclosure.polynomial.deg() + 1)},
                         {"low", rational_json(r.enclosure.low)},
                         {"high", rational_json(r.enclosure.high)}});
    }
    doc["roots"] = roots;
    doc["status"] = cert.status;
    return doc;
}

namespace {

// Everything below recomputes the certificate from scratch.

struct Expected {
    std::string id;
    Rational lhs;
    std::string rel;
    Rational rhs;
    bool pass = false;
};

bool holds(const Rational& lhs, const std::string& rel, const Rational& rhs) {
    if (rel == "<=") return lhs <= rhs;
    if (rel == "<") return lhs < rhs;
    if (rel == "==") return lhs == rhs;
    if (rel == "!=") return lhs != rhs;
    return false;
}

Rational rational_at(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_string())
        fail(ErrorKind::invalid_argument, std::string("missing rational field '") + key + "'");
    return parse_rational(doc.at(key).get<std::string>());
}

std::vector<Integer> integer_list(const json& value) {
    if (!value.is_array()) fail(ErrorKind::invalid_argument, "expected an array");
    std::vector<Integer> out;
    for (const auto& v : value) out.push_back(integer_from_json(v));
    return out;
}

class Auditor {
public:
    explicit Auditor(const json& doc) : doc_(doc) {}

    AuditReport run() {
        try {
            load();
            audit_basis();
            audit_theta();
            audit_checks();
            audit_status();
        } catch (const Error& e) {
            mismatch(std::string("malformed certificate: ") + e.what());
        } catch (const json::exception& e) {
            mismatch(std::string("malformed certificate: ") + e.what());
        }
        return report_;
    }

private:
    void mismatch(std::string what) { report_.mismatches.push_back(std::move(what)); }

    void expect_equal(const std::string& field, const Rational& stored, const Rational& recomputed) {
        if (stored != recomputed)
            mismatch(field + ": stored " + format_rational(stored) + ", recomputed " + format_rational(recomputed));
    }

    void load() {
        const std::string kind = doc_.at("kind").get<std::string>();
        if (kind != "construct" && kind != "construct2d") fail(ErrorKind::invalid_argument, "unknown kind " + kind);
        two_point_ = kind == "construct2d";
        const json& config = doc_.at("config");
        n_ = config.at("n").get<std::size_t>();
        if (n_ < (two_point_ ? 4u : 2u) || n_ > 64) fail(ErrorKind::invalid_argument, "degree out of range");
        Q_ = integer_from_json(config.at("Q"));
        if (Q_ < 1) fail(ErrorKind::invalid_argument, "Q must be positive");
        delta0_ = rational_at(config, "delta0");
        root_width_ = rational_at(config, "root_width");
        x0_ = rational_at(doc_, "x0");
        if (two_point_) {
            epsilon_ = rational_at(config, "epsilon");
            u1_ = rational_at(config, "u1");
            u2_ = rational_at(config, "u2");
            y0_ = rational_at(doc_, "y0");
            if (u1_ + u2_ != Rational(static_cast<long>(n_) - 2) || u1_ <= 0 || u2_ <= 0)
                mismatch("config: u1 + u2 must equal n - 2 with both positive");
            if (abs(x0_ - y0_) <= epsilon_) mismatch("targets violate the diagonal clearance");
        }
        if (abs(x0_) > Rational(1, 2) || abs(y0_) > Rational(1, 2)) mismatch("targets outside [-1/2, 1/2]");
        for (const auto& row : doc_.at("basis")) {
            std::vector<Integer> r = integer_list(row);
            if (r.size() != n_) fail(ErrorKind::invalid_argument, "basis row of the wrong length");
            basis_.push_back(std::move(r));
        }
        if (basis_.size() != n_) fail(ErrorKind::invalid_argument, "basis must have n rows");
        prime_ = integer_from_json(doc_.at("prime"));
        for (const auto& v : doc_.at("theta")) theta_.push_back(parse_rational(v.get<std::string>()));
        t_ = integer_list(doc_.at("t"));
        if (theta_.size() != n_ || t_.size() != n_) fail(ErrorKind::invalid_argument, "theta and t need n entries");
        poly_ = IntPolynomial(integer_list(doc_.at("poly")));
    }

    Rational Qpow(const Rational& e) const {
        auto v = rational_power(Q_, e);
        if (!v) fail(ErrorKind::inexact_power, "Q^e is irrational");
        return *v;
    }

    // Form rows and bounds, written out directly from the body definition.
    void build_body() {
        auto value_row = [&](const Rational& x) {
            std::vector<Rational> row;
            Rational pw = 1;
            for (std::size_t j = 0; j < n_; ++j, pw *= x) row.push_back(pw);
            return row;
        };
        auto slope_row = [&](const Rational& x) {
            std::vector<Rational> row{Rational(0)};
            Rational pw = 1;
            for (std::size_t j = 1; j < n_; ++j, pw *= x) row.push_back(Rational(static_cast<unsigned long>(j)) * pw);
            return row;
        };
        std::size_t first_free;
        if (two_point_) {
            forms_ = {value_row(x0_), value_row(y0_), slope_row(x0_), slope_row(y0_)};
            bounds_ = {Qpow(-u1_), Qpow(-u2_), Rational(Q_), Rational(Q_)};
            first_free = 4;
        } else {
            forms_ = {value_row(x0_), slope_row(x0_)};
            bounds_ = {Qpow(Rational(1 - static_cast<long>(n_))), Rational(Q_)};
            first_free = 2;
        }
        for (std::size_t j = first_free; j < n_; ++j) {
            std::vector<Rational> row(n_, Rational(0));
            row[j] = 1;
            forms_.push_back(row);
            bounds_.emplace_back(Q_);
        }
    }

    Rational poly_at(const std::vector<Integer>& c, const Rational& x) const {
        Rational v = 0;
        for (std::size_t j = c.size(); j-- > 0;) v = v * x + c[j];
        return v;
    }

    Rational slope_at(const std::vector<Integer>& c, const Rational& x) const {
        Rational v = 0;
        for (std::size_t j = c.size(); j-- > 1;) v = v * x + Rational(c[j] * static_cast<unsigned long>(j));
        return v;
    }

    void audit_basis() {
        build_body();
        std::vector<Rational> norms;
        for (const auto& v : basis_) {
            Rational best = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                Rational f = 0;
                for (std::size_t j = 0; j < n_; ++j) f += forms_[i][j] * v[j];
                best = std::max(best, Rational(abs(f) / bounds_[i]));
            }
            norms.push_back(best);
        }
        const json& stored_norms = doc_.at("norms");
        if (stored_norms.size() != n_) {
            mismatch("norms: wrong length");
        } else {
            for (std::size_t i = 0; i < n_; ++i)
                expect_equal("norms[" + std::to_string(i) + "]", parse_rational(stored_norms[i].get<std::string>()),
                             norms[i]);
        }
        if (!std::is_sorted(norms.begin(), norms.end())) mismatch("basis: norms are not sorted");
        slack_ = *std::max_element(norms.begin(), norms.end());
        expect_equal("slack", rational_at(doc_, "slack"), slack_);

        delta_ = determinant(IntegerMatrix(basis_));
        if (delta_ <= 0) mismatch("basis: determinant " + delta_.get_str() + " is not positive");
        expect_equal("delta", Rational(integer_from_json(doc_.at("delta"))), Rational(delta_));

        Integer fact = 1;
        for (unsigned long k = 2; k <= n_; ++k) fact *= k;
        factorial_ = fact;
        reduction_slack_ = (Integer(1) << static_cast<unsigned>(n_ * (n_ - 1) / 2)) * fact;
        expect_equal("reduction_slack", Rational(integer_from_json(doc_.at("reduction_slack"))),
                     Rational(reduction_slack_));

        if (!is_prime(prime_)) mismatch("prime: " + prime_.get_str() + " is not prime");
        Integer smallest = fact;
        for (;;) {
            mpz_nextprime(smallest.get_mpz_t(), smallest.get_mpz_t());
            if (smallest >= 2 * fact || delta_ % smallest != 0) break;
        }
        if (smallest < 2 * fact && smallest != prime_)
            mismatch("prime: expected the smallest admissible prime " + smallest.get_str());
    }

    void audit_theta() {
        const Integer& p = prime_;
        const long ln = static_cast<long>(n_);
        std::vector<std::vector<Rational>> m;
        std::vector<Rational> rhs;
        auto point_rows = [&](const Rational& x, const Rational& value_bound) {
            std::vector<Rational> value, slope;
            Rational slope_sum = 0;
            for (const auto& v : basis_) {
                value.push_back(p * poly_at(v, x));
                Rational d = slope_at(v, x);
                slope.push_back(p * d);
                slope_sum += abs(d);
            }
            m.push_back(value);
            rhs.push_back(p * Rational(static_cast<unsigned long>(n_ + 1)) * slack_ * value_bound - power(x, ln));
            m.push_back(slope);
            rhs.push_back(p * Q_ + p * slope_sum - Rational(static_cast<unsigned long>(n_)) * power(x, ln - 1));
        };
        point_rows(x0_, bounds_[0]);
        if (two_point_) point_rows(y0_, bounds_[1]);
        for (std::size_t j = two_point_ ? 4 : 2; j < n_; ++j) {
            std::vector<Rational> row;
            for (const auto& v : basis_) row.emplace_back(v[j]);
            m.push_back(row);
            rhs.emplace_back(0);
        }
        system_det_ = determinant(m);
        expect_equal("system_determinant", rational_at(doc_, "system_determinant"), system_det_);
        if (system_det_ == 0) mismatch("theta system is singular");
        for (std::size_t r = 0; r < n_; ++r) {
            Rational lhs = 0;
            for (std::size_t i = 0; i < n_; ++i) lhs += m[r][i] * theta_[i];
            if (lhs != rhs[r]) mismatch("theta does not satisfy equation " + std::to_string(r));
        }

        std::vector<Integer> t(n_);
        Integer a0 = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            t[i] = floor_of(theta_[i]);
            a0 += t[i] * basis_[i][0];
        }
        if (a0 % p == 0) {
            for (std::size_t i = 0; i < n_; ++i) {
                if (basis_[i][0] % p != 0) {
                    t[i] += 1;
                    break;
                }
            }
        }
        if (t != t_) mismatch("t: does not follow the floor-and-toggle rule");

        inner_.assign(n_, Integer(0));
        std::vector<Integer> c(n_ + 1, Integer(0));
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i = 0; i < n_; ++i) inner_[j] += t_[i] * basis_[i][j];
            c[j] = p * inner_[j];
        }
        c[n_] = 1;
        if (IntPolynomial(c) != poly_) mismatch("poly: differs from t^n + p sum t_i P_i");
        if (!poly_.is_monic() || poly_.deg() != n_) mismatch("poly: not monic of degree n");

        bool eis = is_prime(p) && poly_.deg() >= 1 && eisenstein_check(poly_, p);
        if (doc_.at("eisenstein").get<bool>() != eis) mismatch("eisenstein flag disagrees");
        eisenstein_ = eis;
    }

    void add(std::vector<Expected>& list, std::string id, Rational lhs, std::string rel, Rational rhs) {
        bool pass = holds(lhs, rel, rhs);
        list.push_back({std::move(id), std::move(lhs), std::move(rel), std::move(rhs), pass});
    }

    // Distance checks are decided exactly against a freshly isolated root.
    void add_distance(std::vector<Expected>& list, std::string id, std::size_t root_index, const Rational& radius) {
        if (root_index >= roots_.size()) return;
        RootInterval fresh = fresh_roots_[root_index];
        const Rational x = roots_[root_index].target;
        bool pass = compare_distance(fresh, x, radius) <= 0;
        list.push_back({std::move(id), distance_upper_bound(roots_[root_index].enclosure, x), "<=", radius, pass});
    }

    void load_roots() {
        const json& stored = doc_.at("roots");
        if (!stored.is_array()) fail(ErrorKind::invalid_argument, "roots must be an array");
        std::vector<std::pair<std::string, Rational>> wanted{{"alpha1", x0_}};
        if (two_point_) wanted.emplace_back("beta1", y0_);
        std::vector<RootInterval> fresh;
        for (const auto& [label, target] : wanted) {
            try {
                fresh.push_back(nearest_real_root(poly_, target, root_width_));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::no_real_root) throw;
                no_real_root_ = true;
            }
        }
        if (no_real_root_) {
            if (!stored.empty()) mismatch("roots: listed although P has no real root");
            return;
        }
        if (stored.size() != wanted.size()) {
            mismatch("roots: expected " + std::to_string(wanted.size()) + " entries");
            return;
        }
        const IntPolynomial sf = square_free_part(poly_);
        for (std::size_t k = 0; k < wanted.size(); ++k) {
            const json& r = stored[k];
            LocatedRoot root{r.at("label").get<std::string>(), rational_at(r, "target"),
                             {rational_at(r, "low"), rational_at(r, "high"), IntPolynomial(integer_list(r.at("poly")))}};
            const std::string where = "roots[" + std::to_string(k) + "]";
            if (root.label != wanted[k].first) mismatch(where + ": expected label " + wanted[k].first);
            expect_equal(where + ".target", root.target, wanted[k].second);
            const RootInterval& e = root.enclosure;
            bool valid = e.polynomial == sf && e.low <= e.high && e.width() <= root_width_;
            if (valid) {
                valid = e.is_exact() ? sign_at(sf, e.low) == 0 : sign_at(sf, e.low) * sign_at(sf, e.high) < 0;
            }
            if (!valid) {
                mismatch(where + ": not a valid enclosure of a root of poly no wider than root_width");
            } else {
                RootInterval a = e, b = fresh[k];
                if (compare(a, b) != 0) mismatch(where + ": not the real root nearest its target");
            }
            roots_.push_back(std::move(root));
        }
        fresh_roots_ = std::move(fresh);
    }

    std::vector<Expected> expected_1d(std::vector<Expected>& paper) {
        std::vector<Expected> out;
        const Integer& p = prime_;
        const Rational& s = slack_;
        const long ln = static_cast<long>(n_);
        const Rational nq(static_cast<unsigned long>(n_));
        const Rational D = power(delta0_, 1 - ln);
        const Rational Qv = bounds_[0];
        const Rational value = abs(poly_at(poly_.coefficients(), x0_));
        const Rational slope = abs(slope_at(poly_.coefficients(), x0_));
        add(out, "basis_bounds", s, "<=", D * Rational(Integer(1) << static_cast<unsigned>(n_ * (n_ - 1) / 2)));
        add(paper, "basis_bounds_paper", s, "<=", D);
        add(out, "prime_lower", Rational(factorial_), "<", Rational(p));
        add(out, "prime_upper", Rational(p), "<", Rational(2 * factorial_));
        add(out, "prime_coprime", Rational(Integer(delta_ % p)), "!=", Rational(0));
        Rational gap = 0;
        for (std::size_t i = 0; i < n_; ++i) gap = std::max(gap, Rational(abs(theta_[i] - t_[i])));
        add(out, "eq6", gap, "<=", Rational(1));
        add(out, "det_system", system_det_, "==", Rational(p * p * delta_));
        add(out, "eq7_lower", p * s * Qv, "<=", value);
        add(out, "eq7_upper", value, "<=", p * (2 * nq + 1) * s * Qv);
        add(out, "eq8_lower", Rational(p * Q_), "<=", slope);
        add(out, "eq8_upper", slope, "<=", (p + 2 * p * nq * s) * Q_);
        for (std::size_t j = 2; j < n_; ++j)
            add(out, "eq9_" + std::to_string(j), Rational(abs(inner_[j])), "<=", nq * s * Q_);
        const Rational half(1, 2);
        Rational rhs10 = (p + 2 * p * nq * s) * Q_ + nq * power(half, ln - 1);
        Rational rhs11 = p * (2 * nq + 1) * s * Qv + power(half, ln);
        for (std::size_t j = 2; j < n_; ++j) {
            rhs10 += Rational(static_cast<unsigned long>(j)) * p * nq * s * Q_ * power(half, static_cast<long>(j) - 1);
            rhs11 += p * nq * s * Q_ * power(half, static_cast<long>(j));
        }
        rhs11 += rhs10 / 2;
        add(out, "eq10", Rational(abs(poly_.coefficient(1))), "<=", rhs10);
        add(out, "eq11", Rational(abs(poly_.coefficient(0))), "<=", rhs11);
        Integer h = 0;
        for (const auto& c : poly_.coefficients()) h = std::max(h, Integer(abs(c)));
        const Rational six_fact = 6 * Rational(factorial_ * static_cast<unsigned long>(n_ + 1));
        add(out, "eq12", Rational(h), "<=", six_fact * s * Q_);
        add(paper, "eq12_paper", Rational(h), "<=", six_fact * D * Q_);
        const Rational c = nq * (2 * nq + 1) * s;
        const Rational Qn = power(Rational(Q_), -ln);
        if (slope == 0) fail(ErrorKind::derivative_vanishes, "P'(x0) = 0");
        add(out, "lemma4", nq * value / slope, "<=", c * Qn);
        add_distance(out, "eq13", 0, c * Rational(reduction_slack_) * Qn);
        add_distance(paper, "eq13_paper", 0, nq * (2 * nq + 1) * D * Qn);
        c_paper_ = nq * (2 * nq + 1) * D;
        c_slack_ = c;
        return out;
    }

    std::vector<Expected> expected_2d(std::vector<Expected>& paper) {
        std::vector<Expected> out;
        const Integer& p = prime_;
        const Rational& s = slack_;
        const long ln = static_cast<long>(n_);
        const Rational nq(static_cast<unsigned long>(n_));
        const Rational D = power(delta0_, 1 - ln);
        add(out, "basis_bounds", s, "<=", D * Rational(Integer(1) << static_cast<unsigned>(n_ * (n_ - 1) / 2)));
        add(paper, "basis_bounds_paper", s, "<=", D);
        add(out, "prime_lower", Rational(factorial_), "<", Rational(p));
        add(out, "prime_upper", Rational(p), "<", Rational(2 * factorial_));
        add(out, "prime_coprime", Rational(Integer(delta_ % p)), "!=", Rational(0));
        Rational gap = 0;
        for (std::size_t i = 0; i < n_; ++i) gap = std::max(gap, Rational(abs(theta_[i] - t_[i])));
        add(out, "eq19", gap, "<=", Rational(1));
        Rational d = y0_ - x0_;
        add(out, "eq18", system_det_, "==", Rational(p * p * p * p) * d * d * d * d * delta_);
        auto sandwich = [&](const std::string& vid, const std::string& sid, const Rational& x, const Rational& Qu) {
            Rational value = abs(poly_at(poly_.coefficients(), x));
            Rational slope = abs(slope_at(poly_.coefficients(), x));
            add(out, vid + "_lower", p * s * Qu, "<=", value);
            add(out, vid + "_upper", value, "<=", p * (2 * nq + 1) * s * Qu);
            add(out, sid + "_lower", Rational(p * Q_), "<=", slope);
            add(out, sid + "_upper", slope, "<=", (p + 2 * p * nq * s) * Q_);
        };
        sandwich("eq20", "eq22", x0_, bounds_[0]);
        sandwich("eq21", "eq23", y0_, bounds_[1]);
        for (std::size_t j = 4; j < n_; ++j)
            add(out, "eq24_" + std::to_string(j), Rational(abs(inner_[j])), "<=", nq * s * Q_);
        std::vector<Integer> low(inner_.begin(), inner_.begin() + 4);
        const std::vector<Rational> l{poly_at(low, x0_), poly_at(low, y0_), slope_at(low, x0_), slope_at(low, y0_)};
        const Rational n3 = nq * nq * nq;
        add(out, "eq25_1", Rational(abs(l[0])), "<", 2 * p * nq * s * Q_);
        add(out, "eq25_2", Rational(abs(l[1])), "<", 2 * p * nq * s * Q_);
        add(out, "eq25_3", Rational(abs(l[2])), "<", 2 * p * n3 * s * Q_);
        add(out, "eq25_4", Rational(abs(l[3])), "<", 2 * p * n3 * s * Q_);
        std::vector<std::vector<Rational>> m;
        for (const Rational& x : {x0_, y0_})
            m.push_back({Rational(1), x, x * x, x * x * x});
        for (const Rational& x : {x0_, y0_})
            m.push_back({Rational(0), Rational(1), 2 * x, 3 * x * x});
        auto sol = solve(m, l);
        long mismatches = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            Rational aj = sol ? (*sol)[j] : Rational(0);
            if (!sol || aj != inner_[j]) ++mismatches;
            add(out, "eq26_" + std::to_string(j), Rational(abs(aj)), "<", 10000 * p * n3 * s * Q_);
        }
        add(out, "eq26_solution", Rational(mismatches), "==", Rational(0));
        Integer h = 0;
        for (const auto& c : poly_.coefficients()) h = std::max(h, Integer(abs(c)));
        Integer f = factorial_;
        for (unsigned long k = n_ + 1; k <= n_ + 4; ++k) f *= k;
        add(out, "height", Rational(h), "<", 20000 * Rational(f) * s * Q_);
        add(paper, "height_paper", Rational(h), "<", 20000 * Rational(f) * D * Q_);
        const Rational c = nq * (2 * nq + 1) * s;
        const Rational cp = nq * (2 * nq + 1) * D;
        const Rational Qx1 = bounds_[0] / Q_;
        const Rational Qy1 = bounds_[1] / Q_;
        auto lemma4 = [&](const Rational& x) -> Rational {
            Rational slope = abs(slope_at(poly_.coefficients(), x));
            if (slope == 0) fail(ErrorKind::derivative_vanishes, "P' vanishes at a target");
            return nq * abs(poly_at(poly_.coefficients(), x)) / slope;
        };
        add(out, "lemma4_x", lemma4(x0_), "<=", c * Qx1);
        add(out, "lemma4_y", lemma4(y0_), "<=", c * Qy1);
        const Rational R(reduction_slack_);
        add_distance(out, "proximity_x", 0, c * R * Qx1);
        add_distance(out, "proximity_y", 1, c * R * Qy1);
        add_distance(paper, "proximity_x_paper", 0, cp * Qx1);
        add_distance(paper, "proximity_y_paper", 1, cp * Qy1);
        if (fresh_roots_.size() == 2) {
            RootInterval a = fresh_roots_[0], b = fresh_roots_[1];

            add(out, "conjugates_distinct", Rational(compare(a, b)), "!=", Rational(0));
        }
        c_paper_ = cp;
        c_slack_ = c;
        return out;
    }

    void compare_lists(const char* key, const std::vector<Expected>& expected) {
        const json& stored = doc_.at(key);
        if (!stored.is_object()) fail(ErrorKind::invalid_argument, std::string(key) + " must be an object");
        std::map<std::string, const Expected*> by_id;
        for (const auto& e : expected) by_id[e.id] = &e;
        for (const auto& [id, entry] : stored.items()) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                mismatch(std::string(key) + ": unexpected check " + id);
                continue;
            }
            const Expected& e = *it->second;
            const std::string where = std::string(key) + "." + id;
            expect_equal(where + ".lhs", rational_at(entry, "lhs"), e.lhs);
            expect_equal(where + ".rhs", rational_at(entry, "rhs"), e.rhs);
            if (entry.at("rel").get<std::string>() != e.rel) mismatch(where + ".rel differs");
            if (entry.at("pass").get<bool>() != e.pass)
                mismatch(where + ".pass: stored " + (e.pass ? "false" : "true") + ", recomputed " +
                         (e.pass ? "true" : "false"));
            ++report_.checks_verified;
            by_id.erase(it);
        }
        for (const auto& [id, e] : by_id) mismatch(std::string(key) + ": missing check " + id);
    }

    void audit_checks() {
        load_roots();
        std::vector<Expected> paper;
        std::vector<Expected> main = two_point_ ? expected_2d(paper) : expected_1d(paper);
        compare_lists("checks", main);
        compare_lists("paper_checks", paper);
        all_pass_ = eisenstein_;
        for (const auto& e : main) all_pass_ = all_pass_ && e.pass;
        const json& c = doc_.at(two_point_ ? "c16" : "c14");
        expect_equal("c.paper", rational_at(c, "paper"), c_paper_);
        expect_equal("c.slack", rational_at(c, "slack"), c_slack_);
    }

    void audit_status() {
        std::string expected = no_real_root_ ? "no-real-root" : (all_pass_ ? "certified" : "audit-failed");
        if (doc_.at("status").get<std::string>() != expected) mismatch("status: expected " + expected);
    }

    const json& doc_;
    AuditReport report_;
    bool two_point_ = false;
    std::size_t n_ = 0;
    Integer Q_, prime_, delta_, factorial_, reduction_slack_;
    Rational delta0_, root_width_, epsilon_, u1_, u2_, x0_, y0_, slack_, system_det_, c_paper_, c_slack_;
    std::vector<std::vector<Integer>> basis_;
    std::vector<std::vector<Rational>> forms_;
    std::vector<Rational> bounds_, theta_;
    std::vector<Integer> t_, inner_;
    IntPolynomial poly_;
    bool eisenstein_ = false, no_real_root_ = false, all_pass_ = false;
    std::vector<LocatedRoot> roots_;
    std::vector<RootInterval> fresh_roots_;
};

} // namespace

AuditReport audit_certificate(const json& doc) { return Auditor(doc).run(); }

} // namespace algint
