#pragma once

// Rotation algebra shared by the serial and parallel Jacobi kernels. The
// sweep schedules themselves live in kernels_serial.cpp (cyclic reference)
// and kernels_parallel.cpp (round-robin OpenMP schedule).

#include <cfloat>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qcb/matrix.hpp"

namespace qcb::kernels::detail {

// Pairs whose coupling is below this relative threshold are orthogonal at
// working precision and are skipped.
inline constexpr double kPairSkip = 32.0 * DBL_EPSILON;

struct Rotation {
    double c;       // cosine
    double s;       // sine
    Complex phase;  // e^{i arg g}
    bool apply;     // false: pair already settled
};

// Given the 2x2 Hermitian block [[app, g], [conj(g), aqq]], returns the
// plane rotation annihilating g (inner rotation, |t| <= 1).
inline Rotation plane_rotation(double app, double aqq, Complex g, double skip_below) {
    const double mag = std::abs(g);
    if (mag <= skip_below || mag == 0.0) return {1.0, 0.0, {1.0, 0.0}, false};
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, c * t, g / mag, true};
}

// ---- one-sided Jacobi working set ------------------------------------------
//
// The SVD kernels store the input so that the columns being orthogonalized
// are contiguous rows of the working matrix: row j holds column j of the
// tall orientation of the input.

inline void column_moments(const ComplexMatrix& w, std::size_t p, std::size_t q,
                           double& app, double& aqq, Complex& apq) {
    const Complex* wp = w.row(p);
    const Complex* wq = w.row(q);
    double np = 0.0, nq = 0.0;
    Complex g = 0.0;
    for (std::size_t i = 0; i < w.cols(); ++i) {
        np += std::norm(wp[i]);
        nq += std::norm(wq[i]);
        g += std::conj(wp[i]) * wq[i];
    }
    app = np;
    aqq = nq;
    apq = g;
}

// Orthogonalizes implicit columns p and q. Returns true when a rotation was
// applied, false when the pair was already orthogonal at working precision.
inline bool orthogonalize_pair(ComplexMatrix& w, std::size_t p, std::size_t q) {
    double app, aqq;
    Complex apq;
    column_moments(w, p, q, app, aqq, apq);
    const Rotation r = plane_rotation(app, aqq, apq, kPairSkip * std::sqrt(app * aqq));
    if (!r.apply) return false;
    Complex* wp = w.row(p);
    Complex* wq = w.row(q);
    const Complex ph_conj = std::conj(r.phase);
    for (std::size_t i = 0; i < w.cols(); ++i) {
        const Complex up = wp[i];
        const Complex uq = wq[i];
        wp[i] = r.c * up - r.s * ph_conj * uq;
        wq[i] = r.s * r.phase * up + r.c * uq;
    }
    return true;
}

// Rows of the result are the columns of the tall orientation of m, so the
// sweep loops touch contiguous memory.
ComplexMatrix svd_working_set(const ComplexMatrix& m);

// Off-diagonal Frobenius mass of the implicit Gram matrix (pairwise column
// inner products), sqrt(2 sum_{p<q} |g_pq|^2).
double gram_offdiagonal_mass(const ComplexMatrix& w, bool parallel);

// Column norms, sorted nonincreasing.
std::vector<double> collect_singular_values(const ComplexMatrix& w);

// ---- two-sided Hermitian Jacobi ---------------------------------------------

struct EighRotation {
    std::size_t p = 0, q = 0;
    Rotation rot{1.0, 0.0, {1.0, 0.0}, false};
};

inline EighRotation eigh_rotation(const ComplexMatrix& h, std::size_t p, std::size_t q,
                                  double skip_below) {
    return {p, q, plane_rotation(h(p, p).real(), h(q, q).real(), h(p, q), skip_below)};
}

// H <- H J for one pair (first half of the similarity transform).
inline void eigh_apply_columns(ComplexMatrix& h, const EighRotation& e) {
    if (!e.rot.apply) return;
    const double c = e.rot.c, s = e.rot.s;
    const Complex ph = e.rot.phase;
    const Complex ph_conj = std::conj(ph);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        const Complex hip = h(i, e.p);
        const Complex hiq = h(i, e.q);
        h(i, e.p) = c * hip - s * ph_conj * hiq;
        h(i, e.q) = s * ph * hip + c * hiq;
    }
}

// H <- J^H H; finishes the transform and pins the annihilated entry and the
// (real) diagonal exactly.
inline void eigh_apply_rows(ComplexMatrix& h, const EighRotation& e) {
    if (!e.rot.apply) return;
    const double c = e.rot.c, s = e.rot.s;
    const Complex ph = e.rot.phase;
    const Complex ph_conj = std::conj(ph);
    Complex* rp = h.row(e.p);
    Complex* rq = h.row(e.q);
    for (std::size_t j = 0; j < h.cols(); ++j) {
        const Complex hpj = rp[j];
        const Complex hqj = rq[j];
        rp[j] = c * hpj - s * ph * hqj;
        rq[j] = s * ph_conj * hpj + c * hqj;
    }
    h(e.p, e.q) = 0.0;
    h(e.q, e.p) = 0.0;
    h(e.p, e.p) = h(e.p, e.p).real();
    h(e.q, e.q) = h(e.q, e.q).real();
}

// sqrt(sum_{i != j} |h_ij|^2)
double offdiagonal_mass(const ComplexMatrix& h, bool parallel);

// Diagonal, sorted nonincreasing.
std::vector<double> collect_eigenvalues(const ComplexMatrix& h);

// Round-robin tournament over k indices: rounds of disjoint pairs covering
// every (p, q) exactly once per sweep. npos marks the bye slot for odd k.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::vector<std::size_t> tournament_slots(std::size_t k);
void advance_tournament(std::vector<std::size_t>& slots);

}  // namespace qcb::kernels::detail
