#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "qcb/criteria.hpp"
#include "qcb/states.hpp"

namespace qcb {

// Verdict threshold: bound values above this count as a genuine violation
// rather than roundoff in norms computed to ~1e-9.
inline constexpr double kDetectionThreshold = 1e-7;

enum class BoundSource { ppt, realignment, tie };

// Analytical lower bound on the concurrence,
// C(rho) >= sqrt(2 / (m(m-1))) (max(||rho^{T_A}||, ||R(rho)||) - 1),
// with m the smaller local dimension.
struct ConcurrenceBound {
    double value;        // max(0, raw_bound)
    BoundSource source;  // which norm attained the max
    double raw_bound;    // before clamping; negative for undetected states
    std::size_t m_used;  // min(dim_a, dim_b)
};

struct EntanglementReport {
    std::string label;
    std::size_t dim_a;
    std::size_t dim_b;
    CriteriaScores scores;
    ConcurrenceBound bound;
    std::optional<double> eof_lower_bound;  // present only for qubit-qudit states
    bool entangled_verdict;
};

// Squared singular values of the m x n coefficient matrix reshaped from the
// ket; nonincreasing, summing to 1.
SchmidtSpectrum schmidt_spectrum(const PureState& psi);

// C(|psi>) = sqrt(2 (1 - sum mu_i^2))
double pure_concurrence(const PureState& psi);

ConcurrenceBound concurrence_lower_bound(const BipartiteState& rho);
// Same bound from precomputed scores (no norm recomputation).
ConcurrenceBound concurrence_lower_bound(const CriteriaScores& scores, std::size_t dim_a,
                                         std::size_t dim_b);

// Exact concurrence of the isotropic family:
// 0 for F <= 1/d, sqrt(2d/(d-1)) (F - 1/d) otherwise.
double isotropic_exact_concurrence(std::size_t d, double fidelity);

// H2(x) = -x log2 x - (1-x) log2 (1-x), with H2(0) = H2(1) = 0.
double binary_entropy(double x);

// Lower bound on the entanglement of formation for qubit-qudit states:
// H2((1 + sqrt(1 - c^2)) / 2) with c the concurrence lower bound. States
// with min dimension != 2 are rejected (no explicit convex function there).
double eof_lower_bound(const BipartiteState& rho);

// The inequality behind the bound's proof:
// 4 sum_{i<j} mu_i mu_j >= (2/(m(m-1))) ((sum_k sqrt(mu_k))^2 - 1)^2.
// Must hold for every valid spectrum with at most m terms; used as a
// property-test oracle.
bool theorem_inequality_check(const SchmidtSpectrum& mu, std::size_t m);

// Full pipeline: criteria scores, bound, optional EOF bound, verdict.
EntanglementReport analyze(const BipartiteState& rho, std::string label);

}  // namespace qcb
