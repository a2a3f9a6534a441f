#include "jacobi_detail.hpp"

#include <algorithm>
#include <numeric>

namespace qcb::kernels::detail {

ComplexMatrix svd_working_set(const ComplexMatrix& m) {
    if (m.rows() >= m.cols()) return transpose(m);
    return m;
}

double gram_offdiagonal_mass(const ComplexMatrix& w, bool parallel) {
    const std::size_t k = w.rows();
    double sum = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(+ : sum) if (parallel)
    for (long p = 0; p < static_cast<long>(k); ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
            const Complex* wp = w.row(p);
            const Complex* wq = w.row(q);
            Complex g = 0.0;
            for (std::size_t i = 0; i < w.cols(); ++i) g += std::conj(wp[i]) * wq[i];
            sum += std::norm(g);
        }
    }
    return std::sqrt(2.0 * sum);
}

std::vector<double> collect_singular_values(const ComplexMatrix& w) {
    std::vector<double> sigma(w.rows());
    for (std::size_t p = 0; p < w.rows(); ++p) {
        double n = 0.0;
        const Complex* wp = w.row(p);
        for (std::size_t i = 0; i < w.cols(); ++i) n += std::norm(wp[i]);
        sigma[p] = std::sqrt(n);
    }
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
    return sigma;
}

double offdiagonal_mass(const ComplexMatrix& h, bool parallel) {
    const std::size_t n = h.rows();
    double sum = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : sum) if (parallel)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        const Complex* ri = h.row(i);
        for (std::size_t j = 0; j < n; ++j)
            if (j != static_cast<std::size_t>(i)) sum += std::norm(ri[j]);
    }
    return std::sqrt(sum);
}

std::vector<double> collect_eigenvalues(const ComplexMatrix& h) {
    std::vector<double> ev(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

std::vector<std::size_t> tournament_slots(std::size_t k) {
    std::vector<std::size_t> slots(k + (k % 2));
    std::iota(slots.begin(), slots.begin() + k, std::size_t{0});
    if (k % 2) slots.back() = npos;
    return slots;
}

void advance_tournament(std::vector<std::size_t>& slots) {
    // Fix slot 0, rotate the rest one step.
    const std::size_t last = slots.back();
    for (std::size_t i = slots.size() - 1; i > 1; --i) slots[i] = slots[i - 1];
    slots[1] = last;
}

}  // namespace qcb::kernels::detail
