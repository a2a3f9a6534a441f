// OpenMP kernels. Jacobi sweeps run a round-robin tournament: each round is
// a set of disjoint index pairs, and rotations on disjoint pairs commute, so
// the rounds parallelize without changing the math (only the rotation order
// differs from the serial reference).

#include <cmath>

#include <omp.h>

#include "jacobi_detail.hpp"
#include "qcb/errors.hpp"
#include "qcb/kernels.hpp"

namespace qcb::kernels {

using detail::kPairSkip;
using detail::npos;

ComplexMatrix matmul_parallel(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(a.rows()); ++i) {
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

ComplexMatrix gram_parallel(const ComplexMatrix& m) {
    const ComplexMatrix t = adjoint(m);
    const std::size_t k = t.rows();
    ComplexMatrix g(k, k);
#pragma omp parallel for schedule(dynamic)
    for (long p = 0; p < static_cast<long>(k); ++p) {
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

std::vector<double> jacobi_svd_parallel(const ComplexMatrix& m) {
    ComplexMatrix w = detail::svd_working_set(m);
    const std::size_t k = w.rows();
    if (k < 2) return detail::collect_singular_values(w);

    double scale = 0.0;
    for (const Complex& z : w.flat()) scale += std::norm(z);
    const double off_initial = detail::gram_offdiagonal_mass(w, true);
    const double target = std::max(kJacobiRelTarget * off_initial, kPairSkip * scale);
    if (off_initial <= target) return detail::collect_singular_values(w);

    std::vector<std::size_t> slots = detail::tournament_slots(k);
    const std::size_t cnt = slots.size();

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        std::size_t rotations = 0;
        // One parallel region per sweep; the worksharing barrier after each
        // round keeps the disjoint-pair schedule in lockstep.
#pragma omp parallel reduction(+ : rotations)
        for (std::size_t round = 0; round + 1 < cnt; ++round) {
#pragma omp for schedule(static)
            for (long i = 0; i < static_cast<long>(cnt / 2); ++i) {
                std::size_t p = slots[i];
                std::size_t q = slots[cnt - 1 - i];
                if (p == npos || q == npos) continue;
                if (p > q) std::swap(p, q);
                rotations += detail::orthogonalize_pair(w, p, q) ? 1 : 0;
            }
#pragma omp single
            detail::advance_tournament(slots);
        }
        if (rotations == 0) return detail::collect_singular_values(w);
        if (detail::gram_offdiagonal_mass(w, true) <= target)
            return detail::collect_singular_values(w);
    }
    throw convergence_error("jacobi_svd: sweep cap reached before off-diagonal target");
}

std::vector<double> jacobi_eigh_parallel(const ComplexMatrix& h_in) {
    ComplexMatrix h = h_in;
    const std::size_t n = h.rows();
    if (n < 2) return detail::collect_eigenvalues(h);

    const double fro = frobenius_norm(h);
    const double skip = kPairSkip * fro / std::sqrt(static_cast<double>(n));
    const double off_initial = detail::offdiagonal_mass(h, true);
    const double target =
        std::max(kJacobiRelTarget * off_initial, kPairSkip * std::sqrt(static_cast<double>(n)) * fro);
    if (off_initial <= target) return detail::collect_eigenvalues(h);

    std::vector<std::size_t> slots = detail::tournament_slots(n);
    const std::size_t cnt = slots.size();
    std::vector<detail::EighRotation> round_rots(cnt / 2);

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        std::size_t rotations = 0;
#pragma omp parallel reduction(+ : rotations)
        for (std::size_t round = 0; round + 1 < cnt; ++round) {
            // Angles read only the pair's own 2x2 block, untouched by any
            // other pair in the round.
#pragma omp for schedule(static)
            for (long i = 0; i < static_cast<long>(cnt / 2); ++i) {
                std::size_t p = slots[i];
                std::size_t q = slots[cnt - 1 - i];
                if (p == npos || q == npos) {
                    round_rots[i] = {};
                    continue;
                }
                if (p > q) std::swap(p, q);
                round_rots[i] = detail::eigh_rotation(h, p, q, skip);
                rotations += round_rots[i].rot.apply ? 1 : 0;
            }
            // Column phase H <- H J, partitioned over rows so each thread
            // writes only its own contiguous block.
#pragma omp for schedule(static)
            for (long i = 0; i < static_cast<long>(n); ++i) {
                Complex* ri = h.row(i);
                for (const detail::EighRotation& e : round_rots) {
                    if (!e.rot.apply) continue;
                    const Complex hip = ri[e.p];
                    const Complex hiq = ri[e.q];
                    ri[e.p] = e.rot.c * hip - e.rot.s * std::conj(e.rot.phase) * hiq;
                    ri[e.q] = e.rot.s * e.rot.phase * hip + e.rot.c * hiq;
                }
            }
            // Row phase H <- J^H H: rows p, q are contiguous and disjoint
            // across pairs.
#pragma omp for schedule(static)
            for (long i = 0; i < static_cast<long>(cnt / 2); ++i)
                detail::eigh_apply_rows(h, round_rots[i]);
#pragma omp single
            detail::advance_tournament(slots);
        }
        if (rotations == 0) return detail::collect_eigenvalues(h);
        if (detail::offdiagonal_mass(h, true) <= target) return detail::collect_eigenvalues(h);
    }
    throw convergence_error("jacobi_eigh: sweep cap reached before off-diagonal target");
}

}  // namespace qcb::kernels

namespace qcb {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b, Exec exec) {
    if (a.cols() != b.rows()) throw std::domain_error("matmul: inner dimensions differ");
    const bool parallel = exec == Exec::parallel ||
                          (exec == Exec::automatic && a.rows() >= kParallelCutoff &&
                           omp_get_max_threads() > 1);
    return parallel ? kernels::matmul_parallel(a, b) : kernels::matmul_serial(a, b);
}

ComplexMatrix gram(const ComplexMatrix& m, Exec exec) {
    const bool parallel = exec == Exec::parallel ||
                          (exec == Exec::automatic && m.cols() >= kParallelCutoff &&
                           omp_get_max_threads() > 1);
    return parallel ? kernels::gram_parallel(m) : kernels::gram_serial(m);
}

}  // namespace qcb
