#pragma once

#include <vector>

#include "qcb/kernels.hpp"
#include "qcb/matrix.hpp"

namespace qcb {

// Entrywise tolerance for treating a matrix as Hermitian. Catalog states are
// constructed analytically, so violations beyond this indicate bugs.
inline constexpr double kHermitianTol = 1e-9;

// Singular values, nonincreasing, min(rows, cols) of them.
std::vector<double> singular_values(const ComplexMatrix& m, Exec exec = Exec::automatic);

// Sum of singular values. Hermitian inputs route through the eigensolver
// (sum of |lambda|); everything else through the one-sided Jacobi SVD.
double trace_norm(const ComplexMatrix& m, Exec exec = Exec::automatic);

// Real spectrum of a Hermitian matrix, nonincreasing. The input must be
// square and Hermitian within kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, Exec exec = Exec::automatic);

// Eigenvalues of M^H M via the two-sided Jacobi route, nonincreasing.
// Algorithmically independent of singular_values; their square roots must
// agree with it and are used as a cross-check throughout the test suite.
std::vector<double> oracle_gram_spectrum(const ComplexMatrix& m, Exec exec = Exec::automatic);

}  // namespace qcb
