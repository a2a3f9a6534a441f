#include "qcb/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "qcb/errors.hpp"

namespace qcb {

namespace {

void require_finite_nonempty(const ComplexMatrix& m, const char* op) {
    if (m.empty()) throw std::domain_error(std::string(op) + ": empty matrix");
    if (!all_finite(m)) throw std::domain_error(std::string(op) + ": entries must be finite");
}

bool pick_parallel(std::size_t work_dim, Exec exec) {
    if (exec == Exec::serial) return false;
    if (exec == Exec::parallel) return true;
    return work_dim >= kJacobiParallelCutoff && omp_get_max_threads() > 1;
}

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& m, Exec exec) {
    require_finite_nonempty(m, "singular_values");
    const std::size_t k = std::min(m.rows(), m.cols());
    return pick_parallel(k, exec) ? kernels::jacobi_svd_parallel(m)
                                  : kernels::jacobi_svd_serial(m);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, Exec exec) {
    require_finite_nonempty(h, "hermitian_eigenvalues");
    if (h.rows() != h.cols())
        throw std::domain_error("hermitian_eigenvalues: matrix must be square");
    const double defect = hermitian_defect(h);
    if (defect > kHermitianTol)
        throw validation_error("hermitian: defect " + std::to_string(defect) +
                               " exceeds tolerance");
    // Symmetrize away sub-tolerance noise before sweeping.
    ComplexMatrix sym(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            sym(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    return pick_parallel(h.rows(), exec) ? kernels::jacobi_eigh_parallel(sym)
                                         : kernels::jacobi_eigh_serial(sym);
}

double trace_norm(const ComplexMatrix& m, Exec exec) {
    require_finite_nonempty(m, "trace_norm");
    double sum = 0.0;
    if (m.rows() == m.cols() && hermitian_defect(m) <= kHermitianTol) {
        for (double ev : hermitian_eigenvalues(m, exec)) sum += std::abs(ev);
    } else {
        for (double sv : singular_values(m, exec)) sum += sv;
    }
    return sum;
}

std::vector<double> oracle_gram_spectrum(const ComplexMatrix& m, Exec exec) {
    require_finite_nonempty(m, "oracle_gram_spectrum");
    const bool parallel = pick_parallel(std::min(m.rows(), m.cols()), exec);
    const Exec sub = parallel ? Exec::parallel : Exec::serial;
    // Gram on the smaller side (M^H M and M M^H share the nonzero spectrum),
    // so the result lines up with singular_values entry for entry.
    const ComplexMatrix g = m.rows() >= m.cols() ? gram(m, sub) : gram(adjoint(m), sub);
    std::vector<double> ev =
        parallel ? kernels::jacobi_eigh_parallel(g) : kernels::jacobi_eigh_serial(g);
    for (double& v : ev) v = std::max(v, 0.0);  // Gram is PSD; negatives are roundoff
    return ev;
}

}  // namespace qcb
