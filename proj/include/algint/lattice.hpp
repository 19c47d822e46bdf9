#ifndef ALGINT_LATTICE_HPP
#define ALGINT_LATTICE_HPP

#include "algint/linear_algebra.hpp"
#include "algint/poly.hpp"
#include "algint/rational.hpp"

#include <vector>

namespace algint {

/// n linear forms in a_0..a_{n-1} with positive right-hand sides; the body
/// is { a : |f_i(a)| <= bounds[i] for all i }.
struct FormSystem {
    RationalMatrix forms;
    std::vector<Rational> bounds;

    std::size_t dimension() const { return forms.size(); }
};

/// n independent integer vectors, stored as polynomials of degree < n, sorted
/// by scaled norm. The sign of the last vector is chosen so that the
/// determinant of the coefficient matrix is positive, hence equal to delta.
struct ReducedBasis {
    std::vector<IntPolynomial> vectors;
    std::vector<Rational> norms;
    Integer delta;

    std::size_t dimension() const { return vectors.size(); }
    /// a_{i,j}
    Integer coefficient(std::size_t i, std::size_t j) const { return vectors.at(i).coefficient(j); }
};

/// Value form at x0 (bound Q^(1-n)), derivative form at x0 (bound Q), and
/// coordinate forms a_j for 2 <= j < n (bound Q).
FormSystem body_1d(const Rational& x0, const Integer& Q, std::size_t n);

/// Value forms at x0 and y0 (bounds Q^-u1, Q^-u2), derivative forms at x0 and
/// y0 (bound Q), coordinate forms a_j for 4 <= j < n (bound Q).
FormSystem body_2d(const Rational& x0, const Rational& y0, const Integer& Q, std::size_t n, const Rational& u1,
                   const Rational& u2);

/// f_i(a) for a coefficient vector a (missing entries are zero).
Rational form_value(const FormSystem& body, std::size_t i, const IntPolynomial& a);
/// max_i |f_i(a)| / bounds[i]
Rational scaled_norm(const FormSystem& body, const IntPolynomial& a);

/// 2^(n(n-1)/2) n!
Integer reduction_slack(std::size_t n);

/// LLL on the scaled form matrix followed by an exact shortest-vector step
/// in the body norm. Throws degenerate-body for a singular form matrix.
ReducedBasis reduce(const FormSystem& body);

struct FormBound {
    Rational value; // |f(v)|
    Rational limit; // slack * bound
    bool pass = false;
};

struct VectorBoundReport {
    std::vector<FormBound> forms;
    bool pass = false;
};

/// |f_i(v)| <= slack * bound_i for every basis vector v and form f_i.
std::vector<VectorBoundReport> verify_basis_bounds(const ReducedBasis& basis, const FormSystem& body,
                                                   const Rational& slack);

} // namespace algint

#endif
