#include "qcb/concurrence.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "qcb/linalg.hpp"

namespace qcb {

SchmidtSpectrum schmidt_spectrum(const PureState& psi) {
    const std::size_t m = psi.dim_a();
    const std::size_t n = psi.dim_b();
    ComplexMatrix coeff(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) coeff(i, k) = psi.ket()[i * n + k];
    std::vector<double> mu = singular_values(coeff);
    for (double& v : mu) v = v * v;
    return SchmidtSpectrum(std::move(mu));
}

double pure_concurrence(const PureState& psi) {
    const SchmidtSpectrum mu = schmidt_spectrum(psi);
    double sum_sq = 0.0;
    for (double v : mu.coefficients()) sum_sq += v * v;
    const double c2 = 2.0 * (1.0 - sum_sq);
    // The cross-term form 4 sum_{i<j} mu_i mu_j must agree with c2.
    double cross = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = i + 1; j < mu.size(); ++j) cross += mu[i] * mu[j];
    assert(std::abs(c2 - 4.0 * cross) < 1e-10);
    return std::sqrt(std::max(c2, 0.0));
}

ConcurrenceBound concurrence_lower_bound(const CriteriaScores& scores, std::size_t dim_a,
                                         std::size_t dim_b) {
    const std::size_t m = std::min(dim_a, dim_b);
    if (m < 2)
        throw std::domain_error(
            "concurrence_lower_bound: smaller local dimension must be >= 2");
    const double best = std::max(scores.ppt_norm, scores.realignment_norm);
    const double raw =
        std::sqrt(2.0 / (static_cast<double>(m) * static_cast<double>(m - 1))) * (best - 1.0);

    constexpr double tie_eps = 1e-9;
    BoundSource source = BoundSource::tie;
    if (scores.ppt_norm > scores.realignment_norm + tie_eps)
        source = BoundSource::ppt;
    else if (scores.realignment_norm > scores.ppt_norm + tie_eps)
        source = BoundSource::realignment;

    return {std::max(raw, 0.0), source, raw, m};
}

ConcurrenceBound concurrence_lower_bound(const BipartiteState& rho) {
    if (std::min(rho.dim_a(), rho.dim_b()) < 2)
        throw std::domain_error(
            "concurrence_lower_bound: smaller local dimension must be >= 2");
    return concurrence_lower_bound(criteria_scores(rho), rho.dim_a(), rho.dim_b());
}

double isotropic_exact_concurrence(std::size_t d, double fidelity) {
    if (d < 2) throw std::domain_error("isotropic_exact_concurrence: d must be >= 2");
    if (!(fidelity >= 0.0 && fidelity <= 1.0))
        throw std::domain_error("isotropic_exact_concurrence: fidelity must lie in [0, 1]");
    const double dd = static_cast<double>(d);
    if (fidelity <= 1.0 / dd) return 0.0;
    return std::sqrt(2.0 * dd / (dd - 1.0)) * (fidelity - 1.0 / dd);
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_lower_bound(const BipartiteState& rho) {
    if (std::min(rho.dim_a(), rho.dim_b()) != 2)
        throw std::domain_error(
            "eof_lower_bound: supported only for qubit-qudit states (min dimension 2)");
    const double c = std::min(concurrence_lower_bound(rho).value, 1.0);
    if (c <= 0.0) return 0.0;
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

bool theorem_inequality_check(const SchmidtSpectrum& mu, std::size_t m) {
    if (mu.size() > m)
        throw std::domain_error("theorem_inequality_check: spectrum longer than m");
    if (m < 2) throw std::domain_error("theorem_inequality_check: m must be >= 2");
    double cross = 0.0;
    double sqrt_sum = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        sqrt_sum += std::sqrt(mu[i]);
        for (std::size_t j = i + 1; j < mu.size(); ++j) cross += mu[i] * mu[j];
    }
    const double lhs = 4.0 * cross;
    const double gap = sqrt_sum * sqrt_sum - 1.0;
    const double rhs =
        2.0 / (static_cast<double>(m) * static_cast<double>(m - 1)) * gap * gap;
    return lhs >= rhs - 1e-12;
}

EntanglementReport analyze(const BipartiteState& rho, std::string label) {
    const CriteriaScores scores = criteria_scores(rho);
    const ConcurrenceBound bound = concurrence_lower_bound(scores, rho.dim_a(), rho.dim_b());
    std::optional<double> eof;
    if (std::min(rho.dim_a(), rho.dim_b()) == 2) {
        const double c = std::min(bound.value, 1.0);
        eof = c > 0.0 ? binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c))) : 0.0;
    }
    return {std::move(label), rho.dim_a(),          rho.dim_b(), scores, bound, eof,
            bound.value > kDetectionThreshold};
}

}  // namespace qcb
