#include "qcb/matrix.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "qcb/kernels.hpp"

namespace qcb {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    ComplexMatrix c(a.rows(), a.cols());
    auto ca = a.flat(), cb = b.flat();
    auto cc = c.flat();
    for (std::size_t i = 0; i < cc.size(); ++i) cc[i] = ca[i] + cb[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    ComplexMatrix c(a.rows(), a.cols());
    auto ca = a.flat(), cb = b.flat();
    auto cc = c.flat();
    for (std::size_t i = 0; i < cc.size(); ++i) cc[i] = ca[i] - cb[i];
    return c;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix c(m.rows(), m.cols());
    auto cm = m.flat();
    auto cc = c.flat();
    for (std::size_t i = 0; i < cc.size(); ++i) cc[i] = s * cm[i];
    return c;
}

ComplexMatrix operator*(double s, const ComplexMatrix& m) { return Complex(s, 0.0) * m; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b, Exec::automatic);
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix c(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(j, i) = std::conj(m(i, j));
    return c;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
    ComplexMatrix c(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(j, i) = m(i, j);
    return c;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
    ComplexMatrix c(m.rows(), m.cols());
    auto cm = m.flat();
    auto cc = c.flat();
    for (std::size_t i = 0; i < cc.size(); ++i) cc[i] = std::conj(cm[i]);
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexMatrix c(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) c(i, j) = u[i] * std::conj(v[j]);
    return c;
}

Complex trace(const ComplexMatrix& m) {
    assert(m.rows() == m.cols());
    Complex t = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const Complex& z : m.flat()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) {
    double s = 0.0;
    for (const Complex& z : m.flat()) s = std::max(s, std::abs(z));
    return s;
}

double hermitian_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("hermitian_defect: matrix must be square");
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            s = std::max(s, std::abs(m(i, j) - std::conj(m(j, i))));
    return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    double s = 0.0;
    auto ca = a.flat(), cb = b.flat();
    for (std::size_t i = 0; i < ca.size(); ++i) s = std::max(s, std::abs(ca[i] - cb[i]));
    return s;
}

bool all_finite(const ComplexMatrix& m) {
    for (const Complex& z : m.flat())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace qcb
