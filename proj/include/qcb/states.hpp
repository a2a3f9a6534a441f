#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcb/matrix.hpp"

namespace qcb {

// Validation tolerances for state invariants.
inline constexpr double kStateTol = 1e-9;

// Density matrix on an m (x) n bipartite space. The composite basis index is
// A-major: ket |i>_A |k>_B sits at position i*n + k. Construction validates
// Hermiticity, unit trace and positivity; everything downstream assumes a
// valid state.
class BipartiteState {
public:
    BipartiteState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::size_t dim() const { return dim_a_ * dim_b_; }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    ComplexMatrix matrix_;
};

// Normalized ket on an m (x) n space, same composite index convention.
class PureState {
public:
    PureState(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> ket);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::span<const Complex> ket() const { return ket_; }

private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    std::vector<Complex> ket_;
};

// Nonincreasing nonnegative coefficients mu_i summing to 1 (the squared
// Schmidt coefficients).
class SchmidtSpectrum {
public:
    explicit SchmidtSpectrum(std::vector<double> coefficients);

    std::span<const double> coefficients() const { return coefficients_; }
    std::size_t size() const { return coefficients_.size(); }
    double operator[](std::size_t i) const { return coefficients_[i]; }

private:
    std::vector<double> coefficients_;
};

// rho = |psi><psi|
BipartiteState density_from_pure(const PureState& psi);

// Ket sum_i sqrt(mu_i) |i>_A |i>_B in the computational basis; mu shorter
// than min(m, n) is padded with zeros, longer is rejected.
PureState pure_from_schmidt(const SchmidtSpectrum& mu, std::size_t m, std::size_t n);

// |Psi+> = sqrt(1/d) sum_i |ii>, d >= 2.
PureState maximally_entangled(std::size_t d);

// Isotropic state with fidelity F:
// rho_F = ((1-F)/(d^2-1)) (I - |Psi+><Psi+|) + F |Psi+><Psi+|
BipartiteState isotropic(std::size_t d, double fidelity);

// <Psi+| rho |Psi+> for a d (x) d state.
double fidelity_with_mes(const BipartiteState& rho);

// 3x3 bound entangled state from the Tiles unextendible product basis:
// rho = (I - sum_i |psi_i><psi_i|) / 4.
BipartiteState tiles_upb();

// 3x3 bound entangled state from the Pyramid UPB,
// |psi_j> = |v_j> (x) |v_{2j mod 5}>.
BipartiteState pyramid_upb();

// The five Pyramid basis vectors v_j = N (cos(2 pi j/5), sin(2 pi j/5), h).
std::vector<std::vector<Complex>> pyramid_vectors();

// Two-qutrit family sigma_alpha = (2/7)|Psi+><Psi+| + (alpha/7) sigma_+
// + ((5-alpha)/7) sigma_-, defined for 2 <= alpha <= 5.
BipartiteState horodecki_3x3(double alpha);

}  // namespace qcb
