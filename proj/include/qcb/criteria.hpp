#pragma once

#include "qcb/matrix.hpp"
#include "qcb/states.hpp"

namespace qcb {

// Scalar diagnostics of the two separability criteria. Both trace norms are
// computed once here and reused downstream (the concurrence bound never
// recomputes a decomposition).
struct CriteriaScores {
    double ppt_norm;           // ||rho^{T_A}||
    double realignment_norm;   // ||R(rho)||
    double negativity;         // ppt_norm - 1
    double ccnr_violation;     // realignment_norm - 1
    double min_pt_eigenvalue;  // smallest eigenvalue of rho^{T_A}
};

// Partial transpose on subsystem A:
// [rho^{T_A}]_{(i,k),(j,l)} = rho_{(j,k),(i,l)}.
// Transposing B instead yields the same trace norm (global transpose
// invariance), so only the A variant is exposed.
ComplexMatrix partial_transpose_a(const BipartiteState& rho);

// Realignment map, an m^2 x n^2 matrix with row index (i, j) over A x A
// (i major) and column index (k, l) over B x B (k major):
// R(rho)_{(i,j),(k,l)} = rho_{(i,k),(j,l)}.
ComplexMatrix realign(const BipartiteState& rho);

CriteriaScores criteria_scores(const BipartiteState& rho);

// Peres criterion: true iff rho^{T_A} has no eigenvalue below -kStateTol.
bool is_ppt(const BipartiteState& rho);

}  // namespace qcb
