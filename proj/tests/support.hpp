#pragma once

// Deterministic random generators shared by the unit and acceptance suites.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qcb/kernels.hpp"
#include "qcb/matrix.hpp"
#include "qcb/states.hpp"

namespace qcb::test {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Complex& z : m.flat()) z = Complex(gauss(rng), gauss(rng));
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(n, n, rng);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

inline std::vector<Complex> random_ket(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> k(dim);
    double norm2 = 0.0;
    for (Complex& z : k) {
        z = Complex(gauss(rng), gauss(rng));
        norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& z : k) z *= inv;
    return k;
}

// QR of a random complex Gaussian matrix by modified Gram-Schmidt (two
// passes keep the columns orthonormal to working precision).
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
    ComplexMatrix a = random_matrix(n, n, rng);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(a(i, k)) * a(i, j);
                for (std::size_t i = 0; i < n; ++i) a(i, j) -= dot * a(i, k);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(a(i, j));
            const double inv = 1.0 / std::sqrt(nrm);
            for (std::size_t i = 0; i < n; ++i) a(i, j) *= inv;
        }
    }
    return a;
}

// Nonincreasing nonnegative spectrum summing to 1.
inline std::vector<double> random_spectrum(std::size_t len, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<double> mu(len);
    double sum = 0.0;
    for (double& v : mu) {
        v = -std::log(1.0 - uni(rng));
        sum += v;
    }
    for (double& v : mu) v /= sum;
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return mu;
}

// Normalized Wishart state: G G^H / tr(G G^H).
inline BipartiteState random_density(std::size_t m, std::size_t n, std::mt19937_64& rng) {
    const ComplexMatrix g = random_matrix(m * n, m * n, rng);
    ComplexMatrix w = matmul(g, adjoint(g), Exec::serial);
    const double tr = trace(w).real();
    return {m, n, (1.0 / tr) * w};
}

// Convex mixture of random product states (separable by construction).
inline BipartiteState random_product_mixture(std::size_t m, std::size_t n, int terms,
                                             std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(0.1, 1.0);
    std::vector<double> w(terms);
    double sum = 0.0;
    for (double& v : w) {
        v = uni(rng);
        sum += v;
    }
    ComplexMatrix rho(m * n, m * n);
    for (int t = 0; t < terms; ++t) {
        const std::vector<Complex> a = random_ket(m, rng);
        const std::vector<Complex> b = random_ket(n, rng);
        rho = rho + (w[t] / sum) * kron(outer(a, a), outer(b, b));
    }
    return {m, n, rho};
}

inline std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> x) {
    std::vector<Complex> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

// (U (x) V) rho (U (x) V)^H
inline BipartiteState rotate_lu(const BipartiteState& rho, const ComplexMatrix& u,
                                const ComplexMatrix& v) {
    const ComplexMatrix w = kron(u, v);
    return {rho.dim_a(), rho.dim_b(), matmul(matmul(w, rho.matrix()), adjoint(w))};
}

inline PureState rotate_lu(const PureState& psi, const ComplexMatrix& u, const ComplexMatrix& v) {
    return {psi.dim_a(), psi.dim_b(), matvec(kron(u, v), psi.ket())};
}

}  // namespace qcb::test
