#include "qcb/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcb/errors.hpp"
#include "qcb/linalg.hpp"

namespace qcb {

BipartiteState::BipartiteState(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
    if (dim_a_ < 1 || dim_b_ < 1)
        throw validation_error("dimension: subsystem dimensions must be >= 1");
    const std::size_t d = dim_a_ * dim_b_;
    if (matrix_.rows() != d || matrix_.cols() != d)
        throw validation_error("dimension: matrix is " + std::to_string(matrix_.rows()) + "x" +
                               std::to_string(matrix_.cols()) + ", expected " + std::to_string(d) +
                               "x" + std::to_string(d));
    if (!all_finite(matrix_)) throw validation_error("finite: matrix has non-finite entries");
    const double defect = hermitian_defect(matrix_);
    if (defect > kStateTol)
        throw validation_error("hermitian: defect " + std::to_string(defect) +
                               " exceeds tolerance");
    const Complex tr = trace(matrix_);
    if (std::abs(tr - Complex(1.0, 0.0)) > kStateTol)
        throw validation_error("trace: expected 1, got " + std::to_string(tr.real()));
    const std::vector<double> spectrum = hermitian_eigenvalues(matrix_);
    if (spectrum.back() < -kStateTol)
        throw validation_error("psd: minimum eigenvalue " + std::to_string(spectrum.back()));
}

PureState::PureState(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> ket)
    : dim_a_(dim_a), dim_b_(dim_b), ket_(std::move(ket)) {
    if (dim_a_ < 1 || dim_b_ < 1)
        throw validation_error("dimension: subsystem dimensions must be >= 1");
    if (ket_.size() != dim_a_ * dim_b_)
        throw validation_error("dimension: ket length " + std::to_string(ket_.size()) +
                               ", expected " + std::to_string(dim_a_ * dim_b_));
    double norm2 = 0.0;
    for (const Complex& z : ket_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw validation_error("finite: ket has non-finite entries");
        norm2 += std::norm(z);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kStateTol)
        throw validation_error("norm: expected 1, got " + std::to_string(std::sqrt(norm2)));
}

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw validation_error("spectrum: empty");
    double sum = 0.0;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const double mu = coefficients_[i];
        if (!std::isfinite(mu) || mu < 0.0)
            throw validation_error("spectrum: coefficients must be finite and nonnegative");
        if (i > 0 && mu > coefficients_[i - 1] + 1e-12)
            throw validation_error("spectrum: coefficients must be nonincreasing");
        sum += mu;
    }
    if (std::abs(sum - 1.0) > kStateTol)
        throw validation_error("spectrum: sum is " + std::to_string(sum) + ", expected 1");
}

BipartiteState density_from_pure(const PureState& psi) {
    return {psi.dim_a(), psi.dim_b(), outer(psi.ket(), psi.ket())};
}

PureState pure_from_schmidt(const SchmidtSpectrum& mu, std::size_t m, std::size_t n) {
    if (mu.size() > std::min(m, n))
        throw std::domain_error("pure_from_schmidt: spectrum longer than min(m, n)");
    std::vector<Complex> ket(m * n);
    for (std::size_t i = 0; i < mu.size(); ++i) ket[i * n + i] = std::sqrt(mu[i]);
    return {m, n, std::move(ket)};
}

PureState maximally_entangled(std::size_t d) {
    if (d < 2) throw std::domain_error("maximally_entangled: d must be >= 2");
    std::vector<Complex> ket(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) ket[i * d + i] = amp;
    return {d, d, std::move(ket)};
}

BipartiteState isotropic(std::size_t d, double fidelity) {
    if (d < 2) throw std::domain_error("isotropic: d must be >= 2");
    if (!(fidelity >= 0.0 && fidelity <= 1.0))
        throw std::domain_error("isotropic: fidelity must lie in [0, 1]");
    const PureState mes = maximally_entangled(d);
    const ComplexMatrix p = outer(mes.ket(), mes.ket());
    const double dd = static_cast<double>(d * d);
    const ComplexMatrix rho = ((1.0 - fidelity) / (dd - 1.0)) *
                                  (ComplexMatrix::identity(d * d) - p) +
                              fidelity * p;
    return {d, d, rho};
}

double fidelity_with_mes(const BipartiteState& rho) {
    if (rho.dim_a() != rho.dim_b())
        throw std::domain_error("fidelity_with_mes: state must be d x d bipartite");
    const std::size_t d = rho.dim_a();
    Complex f = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) f += rho.matrix()(i * d + i, j * d + j);
    return f.real() / static_cast<double>(d);
}

namespace {

// rho = (I - sum_i |psi_i><psi_i|) / 4 for five orthonormal product kets on
// a 3x3 space.
BipartiteState upb_complement_state(const std::vector<std::vector<Complex>>& kets) {
    ComplexMatrix rho = ComplexMatrix::identity(9);
    for (const auto& k : kets) rho = rho - outer(k, k);
    return {3, 3, 0.25 * rho};
}

std::vector<Complex> product_ket(std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> k(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) k[i * b.size() + j] = a[i] * b[j];
    return k;
}

}  // namespace

BipartiteState tiles_upb() {
    const double r = 1.0 / std::sqrt(2.0);
    const double t = 1.0 / std::sqrt(3.0);
    using V = std::vector<Complex>;
    const V zero{1, 0, 0}, two{0, 0, 1};
    const V zero_minus_one{r, -r, 0}, one_minus_two{0, r, -r};
    const V uniform{t, t, t};
    const std::vector<V> kets = {
        product_ket(zero, zero_minus_one),  // |0>(|0>-|1>)/sqrt(2)
        product_ket(zero_minus_one, two),   // (|0>-|1>)|2>/sqrt(2)
        product_ket(two, one_minus_two),    // |2>(|1>-|2>)/sqrt(2)
        product_ket(one_minus_two, zero),   // (|1>-|2>)|0>/sqrt(2)
        product_ket(uniform, uniform),      // (|0>+|1>+|2>)(|0>+|1>+|2>)/3
    };
    return upb_complement_state(kets);
}

std::vector<std::vector<Complex>> pyramid_vectors() {
    const double h = std::sqrt(1.0 + std::sqrt(5.0)) / 2.0;
    const double n = 2.0 / std::sqrt(5.0 + std::sqrt(5.0));
    std::vector<std::vector<Complex>> v(5);
    for (int j = 0; j < 5; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / 5.0;
        v[j] = {n * std::cos(angle), n * std::sin(angle), n * h};
    }
    return v;
}

BipartiteState pyramid_upb() {
    const auto v = pyramid_vectors();
    std::vector<std::vector<Complex>> kets(5);
    for (int j = 0; j < 5; ++j) kets[j] = product_ket(v[j], v[(2 * j) % 5]);
    return upb_complement_state(kets);
}

BipartiteState horodecki_3x3(double alpha) {
    if (!(alpha >= 2.0 && alpha <= 5.0))
        throw std::domain_error("horodecki_3x3: alpha must lie in [2, 5]");
    const PureState mes = maximally_entangled(3);
    ComplexMatrix rho = (2.0 / 7.0) * outer(mes.ket(), mes.ket());
    // sigma_+ lives on {|01>, |12>, |20>}, sigma_- on {|10>, |21>, |02>}.
    const std::size_t plus[3] = {1, 5, 6};
    const std::size_t minus[3] = {3, 7, 2};
    for (std::size_t i = 0; i < 3; ++i) {
        rho(plus[i], plus[i]) += alpha / 21.0;
        rho(minus[i], minus[i]) += (5.0 - alpha) / 21.0;
    }
    return {3, 3, rho};
}

}  // namespace qcb
