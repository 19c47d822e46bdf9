#include "algint/rational.hpp"

#include "algint/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace algint {

namespace {

bool is_decimal_integer(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

// Pollard-Brent; n is odd, composite, and has no small factors.
Integer pollard_brent(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto step = [&](Integer& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                step(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    // small odd trial divisors, then Pollard-Brent on what remains
    for (unsigned long p = 7; p < 10000 && Integer(p) * p <= n; p += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            ++out[Integer(p)];
            n /= p;
        }
    }
    std::vector<Integer> stack{n};
    while (!stack.empty()) {
        Integer m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            ++out[m];
            continue;
        }
        Integer d = pollard_brent(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::invalid_argument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer parse_integer(std::string_view text) {
    text = trim(text);
    if (!is_decimal_integer(text)) fail(ErrorKind::invalid_argument, "not a decimal integer: '" + std::string(text) + "'");
    if (text[0] == '+') text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    return make_rational(num, den);
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_integer(const Integer& value) { return value.get_str(); }

Integer floor_of(const Rational& value) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

Integer ceil_of(const Rational& value) {
    Integer out;
    mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return out;
}

int sign_of(const Rational& value) { return sgn(value); }
int sign_of(const Integer& value) { return sgn(value); }

Rational power(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) fail(ErrorKind::invalid_argument, "zero to a negative power");
        return power(Rational(1) / base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Integer power(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

std::optional<Rational> rational_power(const Integer& base, const Rational& exponent) {
    if (base <= 0) fail(ErrorKind::invalid_argument, "rational_power needs a positive base");
    const Integer& num = exponent.get_num();
    const Integer& den = exponent.get_den();
    if (!num.fits_slong_p() || !den.fits_ulong_p()) fail(ErrorKind::invalid_argument, "exponent too large");
    Integer root;
    if (mpz_root(root.get_mpz_t(), base.get_mpz_t(), den.get_ui()) == 0) return std::nullopt;
    return power(Rational(root), num.get_si());
}

Rational exact_power(const Integer& base, const Rational& exponent) {
    auto value = rational_power(base, exponent);
    if (!value) {
        fail(ErrorKind::inexact_power,
             base.get_str() + "^(" + format_rational(exponent) + ") is not rational");
    }
    return *value;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t()) != 0) return false;
    if (n < Integer(1) << 20) {
        unsigned long v = n.get_ui();
        for (unsigned long d = 3; d * d <= v; d += 2)
            if (v % d == 0) return false;
        return true;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // strong probable-prime test to the first 12 prime bases is exact below 2^64
        Integer d = n - 1;
        unsigned long s = 0;
        while (mpz_even_p(d.get_mpz_t()) != 0) {
            d /= 2;
            ++s;
        }
        for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
            Integer x;
            Integer base(a);
            mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            if (x == 1 || x == n - 1) continue;
            bool composite = true;
            for (unsigned long r = 1; r < s; ++r) {
                x = x * x % n;
                if (x == n - 1) {
                    composite = false;
                    break;
                }
            }
            if (composite) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    if (n == 0) fail(ErrorKind::invalid_argument, "divisors of zero");
    std::map<Integer, unsigned> factors;
    factor_into(abs(n), factors);
    std::vector<Integer> out{Integer(1)};
    for (const auto& [prime, multiplicity] : factors) {
        const std::size_t existing = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= multiplicity; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Interval parse_interval(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) fail(ErrorKind::invalid_argument, "interval must be 'low,high'");
    Interval out{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
    if (out.low > out.high) fail(ErrorKind::invalid_argument, "interval low exceeds high");
    return out;
}

} // namespace algint
