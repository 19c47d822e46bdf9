#ifndef ALGINT_CONSTRUCTOR_HPP
#define ALGINT_CONSTRUCTOR_HPP

#include "algint/lattice.hpp"
#include "algint/poly.hpp"
#include "algint/rational.hpp"
#include "algint/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algint {

struct ConstructorConfig {
    std::size_t n = 2;
    Integer Q = 1;
    Rational delta0;
    Rational epsilon{1, 8};
    Rational u1;
    Rational u2;
    Rational root_width;

    /// delta0 = 2^(-n-8) (n-1)^-2, root width Q^(-2n).
    static ConstructorConfig for_1d(std::size_t n, const Integer& Q);
    /// delta0 = 2^(-n-40) (n-1)^-4, u1 = u2 = (n-2)/2, root width Q^(-2n).
    static ConstructorConfig for_2d(std::size_t n, const Integer& Q);
};

/// One audited inequality: lhs rel rhs, evaluated exactly.
struct Check {
    std::string id;
    Rational lhs;
    std::string rel; // "<=", "<", "=="
    Rational rhs;
    bool pass = false;
};

bool evaluate_relation(const Rational& lhs, const std::string& rel, const Rational& rhs);

struct LocatedRoot {
    std::string label; // "alpha1" or "beta1"
    Rational target;
    RootInterval enclosure;
};

struct ConstructionCertificate {
    bool two_point = false;
    ConstructorConfig config;
    Rational x0;
    Rational y0;
    ReducedBasis basis;
    Rational slack;          // largest scaled norm in the basis
    Integer reduction_slack; // R(n)
    Integer prime;
    std::vector<Rational> theta;
    std::vector<Integer> t;
    IntPolynomial polynomial;
    bool eisenstein = false;
    Rational system_determinant;
    Rational c_paper; // n(2n+1) delta0^(1-n)
    Rational c_slack; // n(2n+1) s
    std::vector<Check> checks;       // audited against the achieved slack
    std::vector<Check> paper_checks; // the same bounds with delta0^(1-n), informational
    std::vector<LocatedRoot> roots;
    std::string status; // "certified", "audit-failed", "no-real-root"

    const Check* find(const std::string& id) const;
    bool basis_bounds_pass() const;
};

/// Smallest prime p with n! < p < 2 n! not dividing delta.
Integer select_prime(const Integer& delta, std::size_t n);

struct LinearSystem {
    RationalMatrix matrix;
    std::vector<Rational> rhs;
};

/// Rows: value at x0, derivative at x0, a_j = 0 for 2 <= j < n. Columns are
/// the basis vectors. Its determinant is p^2 delta.
LinearSystem theta_system_1d(const ReducedBasis& basis, const Rational& x0, const Integer& Q, const Integer& p,
                             const Rational& slack);
/// Rows: value and derivative at x0, value and derivative at y0, a_j = 0 for
/// 4 <= j < n. Its determinant is p^4 (y0 - x0)^4 delta.
LinearSystem theta_system_2d(const ReducedBasis& basis, const Rational& x0, const Rational& y0, const Integer& Q,
                             const Integer& p, const Rational& slack, const Rational& u1, const Rational& u2);

std::vector<Rational> solve_theta_1d(const ReducedBasis& basis, const Rational& x0, const Integer& Q, const Integer& p,
                                     const Rational& slack);
std::vector<Rational> solve_theta_2d(const ReducedBasis& basis, const Rational& x0, const Rational& y0,
                                     const Integer& Q, const Integer& p, const Rational& slack, const Rational& u1,
                                     const Rational& u2);

/// floor(theta_i), then the lowest i with p not dividing a_{i,0} is bumped by
/// one if p divides the resulting constant term.
std::vector<Integer> round_theta_eisenstein(const std::vector<Rational>& theta, const ReducedBasis& basis,
                                            const Integer& p);

/// t^n + p sum t_i P_i(t)
IntPolynomial assemble(const std::vector<Integer>& t, const ReducedBasis& basis, const Integer& p, std::size_t n);

ConstructionCertificate construct_1d(const Rational& x0, const ConstructorConfig& config);
ConstructionCertificate construct_2d(const Rational& x0, const Rational& y0, const ConstructorConfig& config);

} // namespace algint

#endif
