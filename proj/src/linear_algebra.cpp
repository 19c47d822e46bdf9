#include "algint/linear_algebra.hpp"

#include "algint/error.hpp"

#include <utility>

namespace algint {

namespace {

void require_square(std::size_t rows, const auto& m) {
    for (const auto& row : m)
        if (row.size() != rows) fail(ErrorKind::invalid_argument, "matrix is not square");
}

} // namespace

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    require_square(n, m);
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

Integer determinant(IntegerMatrix m) {
    const std::size_t n = m.size();
    require_square(n, m);
    if (n == 0) return 1;
    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m[i][j] = std::move(v);
            }
        }
        previous = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    require_square(n, a);
    if (b.size() != n) fail(ErrorKind::invalid_argument, "right-hand side has the wrong length");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace algint
