#include "qcb/criteria.hpp"

#include <cmath>

#include "qcb/linalg.hpp"

namespace qcb {

ComplexMatrix partial_transpose_a(const BipartiteState& rho) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    const ComplexMatrix& r = rho.matrix();
    ComplexMatrix pt(m * n, m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    pt(i * n + k, j * n + l) = r(j * n + k, i * n + l);
    return pt;
}

ComplexMatrix realign(const BipartiteState& rho) {
    const std::size_t m = rho.dim_a();
    const std::size_t n = rho.dim_b();
    const ComplexMatrix& r = rho.matrix();
    ComplexMatrix re(m * m, n * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    re(i * m + j, k * n + l) = r(i * n + k, j * n + l);
    return re;
}

CriteriaScores criteria_scores(const BipartiteState& rho) {
    const std::vector<double> pt_spectrum = hermitian_eigenvalues(partial_transpose_a(rho));
    double ppt_norm = 0.0;
    for (double ev : pt_spectrum) ppt_norm += std::abs(ev);

    double realignment_norm = 0.0;
    for (double sv : singular_values(realign(rho))) realignment_norm += sv;

    return {ppt_norm, realignment_norm, ppt_norm - 1.0, realignment_norm - 1.0,
            pt_spectrum.back()};
}

bool is_ppt(const BipartiteState& rho) {
    const std::vector<double> pt_spectrum = hermitian_eigenvalues(partial_transpose_a(rho));
    return pt_spectrum.back() >= -kStateTol;
}

}  // namespace qcb
