// Serial reference kernels. These are the ground truth the OpenMP variants
// in kernels_parallel.cpp are tested against.

#include <cmath>

#include "jacobi_detail.hpp"
#include "qcb/errors.hpp"
#include "qcb/kernels.hpp"

namespace qcb::kernels {

using detail::kPairSkip;

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex* ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            const Complex* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

ComplexMatrix gram_serial(const ComplexMatrix& m) {
    const ComplexMatrix t = adjoint(m);  // rows of t are columns of m
    const std::size_t k = t.rows();
    ComplexMatrix g(k, k);
    for (std::size_t p = 0; p < k; ++p) {
        const Complex* tp = t.row(p);
        double d = 0.0;
        for (std::size_t i = 0; i < t.cols(); ++i) d += std::norm(tp[i]);
        g(p, p) = d;
        for (std::size_t q = p + 1; q < k; ++q) {
            const Complex* tq = t.row(q);
            Complex s = 0.0;
            for (std::size_t i = 0; i < t.cols(); ++i) s += tp[i] * std::conj(tq[i]);
            g(p, q) = s;
            g(q, p) = std::conj(s);
        }
    }
    return g;
}

std::vector<double> jacobi_svd_serial(const ComplexMatrix& m) {
    ComplexMatrix w = detail::svd_working_set(m);
    const std::size_t k = w.rows();
    if (k < 2) return detail::collect_singular_values(w);

    double scale = 0.0;
    for (const Complex& z : w.flat()) scale += std::norm(z);
    const double off_initial = detail::gram_offdiagonal_mass(w, false);
    const double target = std::max(kJacobiRelTarget * off_initial, kPairSkip * scale);
    if (off_initial <= target) return detail::collect_singular_values(w);

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < k; ++p)
            for (std::size_t q = p + 1; q < k; ++q)
                rotations += detail::orthogonalize_pair(w, p, q) ? 1 : 0;
        if (rotations == 0) return detail::collect_singular_values(w);
        if (detail::gram_offdiagonal_mass(w, false) <= target)
            return detail::collect_singular_values(w);
    }
    throw convergence_error("jacobi_svd: sweep cap reached before off-diagonal target");
}

std::vector<double> jacobi_eigh_serial(const ComplexMatrix& h_in) {
    ComplexMatrix h = h_in;
    const std::size_t n = h.rows();
    if (n < 2) return detail::collect_eigenvalues(h);

    const double fro = frobenius_norm(h);
    const double skip = kPairSkip * fro / std::sqrt(static_cast<double>(n));
    const double off_initial = detail::offdiagonal_mass(h, false);
    const double target =
        std::max(kJacobiRelTarget * off_initial, kPairSkip * std::sqrt(static_cast<double>(n)) * fro);
    if (off_initial <= target) return detail::collect_eigenvalues(h);

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const detail::EighRotation e = detail::eigh_rotation(h, p, q, skip);
                if (!e.rot.apply) continue;
                detail::eigh_apply_columns(h, e);
                detail::eigh_apply_rows(h, e);
                ++rotations;
            }
        if (rotations == 0) return detail::collect_eigenvalues(h);
        if (detail::offdiagonal_mass(h, false) <= target) return detail::collect_eigenvalues(h);
    }
    throw convergence_error("jacobi_eigh: sweep cap reached before off-diagonal target");
}

}  // namespace qcb::kernels
