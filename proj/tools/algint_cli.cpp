#include "algint/certificate.hpp"
#include "algint/curve_cover.hpp"
#include "algint/enumeration.hpp"
#include "algint/error.hpp"
#include "algint/regular_system.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace algint;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kPrecondition = 2;
constexpr int kAuditFailure = 3;
constexpr int kUsage = 64;

struct RunConfig {
    std::string n = "2";
    std::vector<std::string> Q{"10"};
    std::string interval = "-1/2,1/2";
    std::string x_interval;
    std::string y_interval;
    std::string x0 = "0";
    std::string y0 = "0";
    std::string n_max = "1";
    std::string f;
    std::string J;
    std::string M;
    std::string lambda = "1/4";
    std::string epsilon = "1/8";
    std::string delta0;
    std::string u1;
    std::string u2;
    std::string c5;
    std::string c16 = "1";
    std::string mode = "enumerate";
    std::string format = "csv";
    std::string output;
    std::string certificate;
    unsigned workers = 0;
};

unsigned default_workers() {
    if (const char* env = std::getenv("ALGINT_WORKERS")) {
        Integer w = parse_integer(env);
        if (w < 1) fail(ErrorKind::invalid_argument, "ALGINT_WORKERS must be positive");
        return static_cast<unsigned>(std::min<unsigned long>(w.get_ui(), 16));
    }
    return std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
}

long to_long(const std::string& text, const char* what) {
    Integer v = parse_integer(text);
    if (!v.fits_slong_p()) fail(ErrorKind::invalid_argument, std::string(what) + " out of range");
    return v.get_si();
}

std::size_t to_degree(const std::string& text) {
    long v = to_long(text, "n");
    if (v < 1) fail(ErrorKind::invalid_argument, "n must be at least 1");
    return static_cast<std::size_t>(v);
}

Rational q(const std::string& text) { return parse_rational(text); }

ordered_json point_json(const AlgebraicInteger& a) {
    return {{"polynomial", format_polynomial(a.minimal_polynomial)},
            {"degree", a.degree},
            {"height", integer_to_json(a.height)},
            {"low", format_rational(a.enclosure.low)},
            {"high", format_rational(a.enclosure.high)}};
}

ordered_json pair_json(const ConjugatePair& p) {
    return {{"polynomial", format_polynomial(p.alpha.minimal_polynomial)},
            {"alpha", {format_rational(p.alpha.enclosure.low), format_rational(p.alpha.enclosure.high)}},
            {"beta", {format_rational(p.beta.enclosure.low), format_rational(p.beta.enclosure.high)}}};
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

class Runner {
public:
    Runner(const RunConfig& c) : c_(c), workers_(c.workers ? std::min(c.workers, 16u) : default_workers()) {}

    int enumerate(std::ostream& out) {
        EnumerationQuery query{to_degree(c_.n), single_Q(), parse_interval(c_.interval)};
        auto points = algebraic_integers_in(query, workers_);
        if (json_format()) {
            ordered_json doc = ordered_json::array();
            for (const auto& p : points) doc.push_back(point_json(p));
            out << doc.dump(2) << '\n';
        } else {
            out << "degree,height,polynomial,low,high\n";
            for (const auto& p : points)
                out << p.degree << ',' << p.height << ',' << csv_quote(format_polynomial(p.minimal_polynomial)) << ','
                    << format_rational(p.enclosure.low) << ',' << format_rational(p.enclosure.high) << '\n';
        }
        return kOk;
    }

    int count(std::ostream& out) {
        const std::size_t n = to_degree(c_.n);
        const Interval I = parse_interval(c_.interval);
        ordered_json doc = ordered_json::array();
        if (!json_format()) out << "n,Q,interval_low,interval_high,count\n";
        for (const auto& text : c_.Q) {
            const long Q = to_long(text, "Q");
            const std::size_t k = count_in_interval({n, Q, I}, workers_);
            if (json_format()) {
                const Rational c4 = Rational(static_cast<unsigned long>(k)) / (Rational(Q) * Q * I.length());
                doc.push_back({{"n", n},
                               {"Q", Q},
                               {"interval_low", format_rational(I.low)},
                               {"interval_high", format_rational(I.high)},
                               {"count", k},
                               {"count_over_Q2_length", format_rational(c4)}});
            } else {
                out << n << ',' << Q << ',' << format_rational(I.low) << ',' << format_rational(I.high) << ',' << k
                    << '\n';
            }
        }
        if (json_format()) out << doc.dump(2) << '\n';
        return kOk;
    }

    int gaps(std::ostream& out) {
        const std::size_t n_max = to_degree(c_.n_max);
        const Interval region = parse_interval(c_.interval);
        if (!json_format()) out << "Q,n_max,low,high\n";
        ordered_json doc = ordered_json::array();
        for (const auto& text : c_.Q) {
            const long Q = to_long(text, "Q");
            auto gap = find_gap(Q, n_max, region, workers_);
            if (json_format()) {
                ordered_json row{{"Q", Q}, {"n_max", n_max}};
                row["gap"] = gap ? ordered_json{format_rational(gap->low), format_rational(gap->high)} : nullptr;
                doc.push_back(row);
            } else {
                out << Q << ',' << n_max << ',' << (gap ? format_rational(gap->low) : "none") << ','
                    << (gap ? format_rational(gap->high) : "none") << '\n';
            }
        }
        if (json_format()) out << doc.dump(2) << '\n';
        return kOk;
    }

    int construct(std::ostream& out, bool two_point) {
        const std::size_t n = to_degree(c_.n);
        const Integer Q = parse_integer(single_Q_text());
        ConstructorConfig config = two_point ? ConstructorConfig::for_2d(n, Q) : ConstructorConfig::for_1d(n, Q);
        if (!c_.delta0.empty()) config.delta0 = q(c_.delta0);
        config.epsilon = q(c_.epsilon);
        if (!c_.u1.empty()) config.u1 = q(c_.u1);
        if (!c_.u2.empty()) config.u2 = q(c_.u2);
        ConstructionCertificate cert = two_point ? construct_2d(q(c_.x0), q(c_.y0), config) : construct_1d(q(c_.x0), config);
        out << certificate_to_json(cert).dump(2) << '\n';
        return cert.status == "audit-failed" ? kAuditFailure : kOk;
    }

    int regsys(std::ostream& out) {
        const std::size_t n = to_degree(c_.n);
        const long Q = single_Q();
        ordered_json doc;
        if (c_.x_interval.empty()) {
            auto r = build_1d(n, Q, parse_interval(c_.interval), workers_);
            const Rational c5 = c_.c5.empty() ? Rational(r.fitted_c5 / 2) : q(c_.c5);
            auto v = verify_regularity(r, c5);
            doc["kind"] = "regsys-1d";
            doc["n"] = n;
            doc["Q"] = Q;
            doc["interval"] = {format_rational(r.interval.low), format_rational(r.interval.high)};
            doc["T"] = integer_to_json(r.T);
            doc["separation"] = format_rational(r.separation);
            doc["candidates"] = r.candidates;
            doc["count"] = r.count;
            doc["maximal"] = r.maximal;
            doc["fitted_c5"] = format_rational(r.fitted_c5);
            doc["c5"] = format_rational(c5);
            doc["verdict"] = {{"weights", v.weights}, {"separated", v.separated}, {"dense", v.dense}};
            ordered_json points = ordered_json::array();
            for (const auto& p : r.points)
                points.push_back({{"polynomial", format_polynomial(p.value.polynomial)},
                                  {"low", format_rational(p.value.low)},
                                  {"high", format_rational(p.value.high)},
                                  {"weight", integer_to_json(p.weight)}});
            doc["points"] = points;
        } else {
            Rectangle box{parse_interval(c_.x_interval), parse_interval(c_.y_interval)};
            const Rational half(static_cast<long>(n) - 2, 2);
            const Rational u1 = c_.u1.empty() ? half : q(c_.u1), u2 = c_.u2.empty() ? half : q(c_.u2);
            auto r = build_2d(n, Q, box, q(c_.epsilon), u1, u2, q(c_.c16), workers_);
            doc["kind"] = "regsys-2d";
            doc["n"] = n;
            doc["Q"] = Q;
            doc["box"] = {format_rational(box.x.low), format_rational(box.x.high), format_rational(box.y.low),
                          format_rational(box.y.high)};
            doc["T"] = integer_to_json(r.T);
            doc["separation_x"] = format_rational(r.separation_x);
            doc["separation_y"] = format_rational(r.separation_y);
            doc["c16"] = format_rational(r.c16);
            doc["candidates"] = r.candidates;
            doc["count"] = r.count;
            doc["maximal"] = r.maximal;
            doc["fitted"] = format_rational(r.fitted);
            ordered_json pairs = ordered_json::array();
            for (const auto& p : r.pairs) pairs.push_back(pair_json(p));
            doc["pairs"] = pairs;
        }
        out << doc.dump(2) << '\n';
        return kOk;
    }

    int curve(std::ostream& out) {
        CurveSpec spec;
        spec.f = parse_rational_polynomial(c_.f);
        const Interval J = parse_interval(c_.J);
        spec.a = J.low;
        spec.b = J.high;
        spec.M = c_.M.empty() ? spec.f.derivative_bound(spec.a, spec.b) : q(c_.M);
        spec.lambda = q(c_.lambda);
        spec.Q = single_Q();
        spec.epsilon = q(c_.epsilon);
        CoverMode mode;
        if (c_.mode == "construct") mode = CoverMode::construct;
        else if (c_.mode == "enumerate") mode = CoverMode::enumerate;
        else fail(ErrorKind::invalid_argument, "mode must be construct or enumerate");
        auto r = count_near_curve(spec, to_degree(c_.n), mode, workers_);
        if (!json_format()) {
            out << "index,x_low,x_high,midpoint,value,status,count\n";
            for (std::size_t i = 0; i < r.tiles.size(); ++i) {
                const Tile& t = r.tiling.tiles[i];
                out << r.tiles[i].index << ',' << format_rational(t.x.low) << ',' << format_rational(t.x.high) << ','
                    << format_rational(t.midpoint) << ',' << format_rational(t.value) << ',' << r.tiles[i].status
                    << ',' << r.tiles[i].count << '\n';
            }
            return kOk;
        }
        ordered_json doc;
        doc["kind"] = "curve";
        doc["mode"] = c_.mode;
        doc["n"] = r.n;
        doc["Q"] = spec.Q;
        doc["f"] = c_.f;
        doc["J"] = {format_rational(spec.a), format_rational(spec.b)};
        doc["M"] = format_rational(spec.M);
        doc["lambda"] = format_rational(spec.lambda);
        doc["step"] = format_rational(r.tiling.step);
        doc["c10"] = format_rational(r.tiling.c10);
        doc["c11"] = format_rational(r.tiling.c11);
        doc["total"] = r.total;
        doc["fitted_c8"] = format_rational(r.fitted_c8);
        ordered_json tiles = ordered_json::array();
        for (std::size_t i = 0; i < r.tiles.size(); ++i) {
            const Tile& t = r.tiling.tiles[i];
            const TileResult& res = r.tiles[i];
            ordered_json row{{"index", res.index},
                             {"x", {format_rational(t.x.low), format_rational(t.x.high)}},
                             {"midpoint", format_rational(t.midpoint)},
                             {"value", format_rational(t.value)},
                             {"status", res.status},
                             {"count", res.count}};
            if (mode == CoverMode::enumerate) {
                ordered_json pts = ordered_json::array();
                for (const auto& p : res.points) pts.push_back(pair_json(p));
                row["points"] = pts;
            } else if (res.certificate) {
                row["certificate"] = certificate_to_json(*res.certificate);
            }
            tiles.push_back(row);
        }
        doc["tiles"] = tiles;
        out << doc.dump(2) << '\n';
        return kOk;
    }

    int verify(std::ostream& out) {
        nlohmann::json doc;
        {
            std::ifstream in(c_.certificate);
            if (!in) fail(ErrorKind::invalid_argument, "cannot read " + c_.certificate);
            try {
                doc = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                fail(ErrorKind::invalid_argument, std::string("not JSON: ") + e.what());
            }
        }
        AuditReport report = audit_certificate(doc);
        ordered_json summary{{"ok", report.ok()},
                             {"checks_verified", report.checks_verified},
                             {"mismatches", report.mismatches}};
        out << summary.dump(2) << '\n';
        return report.ok() ? kOk : kAuditFailure;
    }

private:
    bool json_format() const { return c_.format == "json"; }

    const std::string& single_Q_text() const {
        if (c_.Q.size() != 1) fail(ErrorKind::invalid_argument, "this subcommand takes a single Q");
        return c_.Q.front();
    }

    long single_Q() const { return to_long(single_Q_text(), "Q"); }

    const RunConfig& c_;
    unsigned workers_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algebraic integers near points and curves"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--workers", c.workers, "Worker threads (default: ALGINT_WORKERS or hardware, max 16)");
        sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
    };
    auto degree = [&](CLI::App* sub) { sub->add_option("--n", c.n, "Degree"); };
    auto height = [&](CLI::App* sub, bool many) {
        auto opt = sub->add_option("--Q", c.Q, many ? "Height bound, repeatable" : "Height bound");
        opt->delimiter(';');
        if (!many) opt->expected(1);
    };
    auto format = [&](CLI::App* sub) {
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "List algebraic integers in an interval");
    degree(enumerate);
    height(enumerate, false);
    enumerate->add_option("--interval", c.interval, "Half-open interval a,b");
    format(enumerate);
    common(enumerate);

    auto* count = app.add_subcommand("count", "Count algebraic integers in an interval");
    degree(count);
    height(count, true);
    count->add_option("--interval", c.interval, "Half-open interval a,b");
    format(count);
    common(count);

    auto* gaps = app.add_subcommand("gaps", "Find an interval free of algebraic integers");
    height(gaps, true);
    gaps->add_option("--n-max", c.n_max, "Largest degree");
    gaps->add_option("--region", c.interval, "Search region a,b");
    format(gaps);
    common(gaps);

    auto* construct = app.add_subcommand("construct", "Build a certified algebraic integer near x0");
    degree(construct);
    height(construct, false);
    construct->add_option("--x0", c.x0, "Target point");
    construct->add_option("--delta0", c.delta0, "Override delta0");
    common(construct);

    auto* construct2d = app.add_subcommand("construct2d", "Build certified conjugates near (x0, y0)");
    degree(construct2d);
    height(construct2d, false);
    construct2d->add_option("--x0", c.x0, "First target");
    construct2d->add_option("--y0", c.y0, "Second target");
    construct2d->add_option("--epsilon", c.epsilon, "Diagonal clearance");
    construct2d->add_option("--u1", c.u1, "Exponent u1");
    construct2d->add_option("--u2", c.u2, "Exponent u2");
    construct2d->add_option("--delta0", c.delta0, "Override delta0");
    common(construct2d);

    auto* regsys = app.add_subcommand("regsys", "Build a separated regular system");
    degree(regsys);
    height(regsys, false);
    regsys->add_option("--interval", c.interval, "Interval for the 1D system");
    regsys->add_option("--c5", c.c5, "Density constant to verify (default fitted/2)");
    regsys->add_option("--x-interval", c.x_interval, "Box side in x (switches to pairs)");
    regsys->add_option("--y-interval", c.y_interval, "Box side in y");
    regsys->add_option("--epsilon", c.epsilon, "Diagonal clearance");
    regsys->add_option("--u1", c.u1, "Exponent u1");
    regsys->add_option("--u2", c.u2, "Exponent u2");
    regsys->add_option("--c16", c.c16, "Separation constant for pairs");
    common(regsys);

    auto* curve = app.add_subcommand("curve", "Count conjugate pairs near y = f(x)");
    curve->parse_complete_callback([&] {
        if (curve->count("--format") == 0) c.format = "json";
    });
    degree(curve);
    height(curve, false);
    curve->add_option("--f", c.f, "Coefficients [c0,c1,...], low to high")->required();
    curve->add_option("--J", c.J, "Domain a,b")->required();
    curve->add_option("--M", c.M, "Bound on |f'| over J (default: computed)");
    curve->add_option("--lambda", c.lambda, "Strip exponent");
    curve->add_option("--epsilon", c.epsilon, "Diagonal clearance");
    curve->add_option("--mode", c.mode, "construct or enumerate")->check(CLI::IsMember({"construct", "enumerate"}));
    curve->add_option("--format", c.format, "json (full report) or csv (per tile)")
        ->check(CLI::IsMember({"csv", "json"}));
    common(curve);

    auto* verify = app.add_subcommand("verify-cert", "Re-audit a stored certificate");
    verify->add_option("certificate", c.certificate, "Certificate JSON file")->required();
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        std::ostringstream buffer;
        Runner runner(c);
        int code = kOk;
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "enumerate") code = runner.enumerate(buffer);
        else if (name == "count") code = runner.count(buffer);
        else if (name == "gaps") code = runner.gaps(buffer);
        else if (name == "construct") code = runner.construct(buffer, false);
        else if (name == "construct2d") code = runner.construct(buffer, true);
        else if (name == "regsys") code = runner.regsys(buffer);
        else if (name == "curve") code = runner.curve(buffer);
        else code = runner.verify(buffer);

        if (c.output.empty()) {
            std::cout << buffer.str();
        } else {
            std::ofstream file(c.output, std::ios::binary);
            if (!file) fail(ErrorKind::invalid_argument, "cannot write " + c.output);
            file << buffer.str();
        }
        return code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::internal ? 1 : kPrecondition;
    }
}
