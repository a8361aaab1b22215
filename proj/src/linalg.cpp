#include "flagdirac/linalg.hpp"

#include <cmath>

namespace flagdirac {

int matrix_rank(ComplexMatrix m, double tol) {
    if (m.empty() || m.front().empty()) {
        return 0;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t best = pivot_row;
        double best_mag = std::abs(m[best][col]);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            const double mag = std::abs(m[r][col]);
            if (mag > best_mag) {
                best = r;
                best_mag = mag;
            }
        }
        if (best_mag <= tol) {
            continue;
        }
        std::swap(m[pivot_row], m[best]);
        const Complex pivot = m[pivot_row][col];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row) {
                continue;
            }
            const Complex factor = m[r][col] / pivot;
            if (std::abs(factor) == 0.0) {
                continue;
            }
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= factor * m[pivot_row][c];
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

bool in_span(const ComplexMatrix& basis, const std::vector<Complex>& v, double tol) {
    ComplexMatrix with = basis;
    with.push_back(v);
    return matrix_rank(with, tol) == matrix_rank(basis, tol);
}

}  // namespace flagdirac
