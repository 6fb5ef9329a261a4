#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shipwave {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

class singular_matrix_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Dense row-major complex matrix.
class ComplexMatrix {
  public:
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Complex* row(std::size_t i) { return data_.data() + i * cols_; }
    const Complex* row(std::size_t i) const { return data_.data() + i * cols_; }

  private:
    std::size_t rows_, cols_;
    ComplexVector data_;
};

// Solves a x = b by LU factorization with partial pivoting. The pivot check
// declares the matrix singular when a pivot falls below
// n * machine_epsilon * max|a_ij|. Inputs are validated for finiteness.
ComplexVector lu_solve(ComplexMatrix a, ComplexVector b);

}  // namespace shipwave
