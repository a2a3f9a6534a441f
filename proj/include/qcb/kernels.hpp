#pragma once

#include <cstddef>
#include <vector>

#include "qcb/matrix.hpp"

namespace qcb {

// Kernel selection. The serial variants are the reference implementations;
// the parallel variants are OpenMP round-robin schedules of the same
// rotations. `automatic` picks by problem size.
enum class Exec { serial, parallel, automatic };

// Below these dimensions the OpenMP variants are not worth the scheduling
// cost (crossovers measured in bench/bench_kernels.cpp). The Jacobi sweeps
// are bandwidth-bound and pay off later than the blocked products.
inline constexpr std::size_t kParallelCutoff = 64;
inline constexpr std::size_t kJacobiParallelCutoff = 192;

// Jacobi sweep budget and off-diagonal mass target. A sweep sequence stops
// once the off-diagonal Frobenius mass falls below
// max(kJacobiRelTarget * initial_mass, machine-precision floor); exceeding
// kJacobiMaxSweeps raises convergence_error.
inline constexpr int kJacobiMaxSweeps = 60;
inline constexpr double kJacobiRelTarget = 1e-12;

namespace kernels {

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul_parallel(const ComplexMatrix& a, const ComplexMatrix& b);

// Gram matrix M^H M (Hermitian, PSD).
ComplexMatrix gram_serial(const ComplexMatrix& m);
ComplexMatrix gram_parallel(const ComplexMatrix& m);

// Singular values by one-sided Jacobi, nonincreasing, min(rows, cols) of them.
std::vector<double> jacobi_svd_serial(const ComplexMatrix& m);
std::vector<double> jacobi_svd_parallel(const ComplexMatrix& m);

// Eigenvalues of a Hermitian matrix by two-sided Jacobi, nonincreasing.
// The input is used as given (no Hermiticity check at this level).
std::vector<double> jacobi_eigh_serial(const ComplexMatrix& h);
std::vector<double> jacobi_eigh_parallel(const ComplexMatrix& h);

}  // namespace kernels

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b, Exec exec = Exec::automatic);
ComplexMatrix gram(const ComplexMatrix& m, Exec exec = Exec::automatic);

}  // namespace qcb
