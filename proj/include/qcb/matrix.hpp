#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcb {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Substrate for density operators and for
// the matrices produced by the partial-transpose and realignment maps.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Complex* row(std::size_t i) { return data_.data() + i * cols_; }
    const Complex* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::span<Complex> flat() { return data_; }
    std::span<const Complex> flat() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexMatrix operator*(double s, const ComplexMatrix& m);
// Product uses the automatic serial/parallel kernel dispatch from kernels.hpp.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Outer product |u><v| of two kets.
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
// max_ij |m(i,j) - conj(m(j,i))|; matrix must be square.
double hermitian_defect(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool all_finite(const ComplexMatrix& m);

}  // namespace qcb
