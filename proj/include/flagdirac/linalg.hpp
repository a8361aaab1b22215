#pragma once

#include <complex>
#include <vector>

namespace flagdirac {

using Complex = std::complex<double>;
// Dense row-major matrix; all uses here are tiny (at most 8 x 4).
using ComplexMatrix = std::vector<std::vector<Complex>>;

inline constexpr double kDefaultTol = 1e-9;

// Rank by Gaussian column reduction with partial pivoting; entries with
// magnitude <= tol are treated as zero.
int matrix_rank(ComplexMatrix m, double tol = kDefaultTol);

// True iff v lies in the row span of basis (within tol).
bool in_span(const ComplexMatrix& basis, const std::vector<Complex>& v, double tol = kDefaultTol);

}  // namespace flagdirac
