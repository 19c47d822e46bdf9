#ifndef ALGINT_LINEAR_ALGEBRA_HPP
#define ALGINT_LINEAR_ALGEBRA_HPP

#include "algint/rational.hpp"

#include <optional>
#include <vector>

namespace algint {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(RationalMatrix m);
/// Fraction-free (Bareiss) determinant.
Integer determinant(IntegerMatrix m);

/// Unique solution of a x = b, or nullopt when a is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

} // namespace algint

#endif
