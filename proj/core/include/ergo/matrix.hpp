#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "ergo/errors.hpp"

namespace ergo {

using complex_t = std::complex<double>;

// Dense square complex matrix with inline storage. Every operator in the
// library is a qubit or two-qubit matrix (dimension 2 or 4; Kronecker
// products may reach 8), so values live on the stack and are cheap to copy.
class Matrix {
 public:
  static constexpr std::size_t max_dim = 8;

  Matrix() = default;
  // Zero matrix of the given dimension.
  explicit Matrix(std::size_t dim);
  // Row-major entries; their count must equal dim^2.
  Matrix(std::size_t dim, std::initializer_list<complex_t> entries);

  static Matrix identity(std::size_t dim);

  Matrix(const Matrix& other) : dim_(other.dim_) { copy_entries(other); }
  Matrix& operator=(const Matrix& other) {
    dim_ = other.dim_;
    copy_entries(other);
    return *this;
  }

  std::size_t dim() const { return dim_; }

  complex_t& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const complex_t& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  complex_t trace() const;
  double max_abs() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(complex_t scale);

 private:
  void copy_entries(const Matrix& other) {
    for (std::size_t k = 0; k < dim_ * dim_; ++k) entries_[k] = other.entries_[k];
  }

  std::size_t dim_ = 0;
  std::array<complex_t, max_dim * max_dim> entries_{};
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(complex_t scale, Matrix m);
Matrix operator*(Matrix m, complex_t scale);

// Matrix product; operands must share one dimension.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

// Conjugate transpose.
Matrix dagger(const Matrix& a);

// Kronecker product, dim = dim(a) * dim(b).
Matrix kron(const Matrix& a, const Matrix& b);

// tr(a * b) without forming the product.
complex_t trace_of_product(const Matrix& a, const Matrix& b);

double max_abs_diff(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, double tol);

// max_{i,j} |a(i,j) - conj(a(j,i))|
double hermiticity_residual(const Matrix& a);

// Spectral decomposition of a Hermitian matrix. Eigenvalues ascend;
// eigenvector column k pairs with eigenvalues[k].
struct EigenSystem {
  std::size_t dim = 0;
  std::array<double, Matrix::max_dim> eigenvalues{};
  Matrix eigenvectors;
};

// Cyclic Jacobi rotations on the full complex Hermitian matrix; iterates
// until the off-diagonal Frobenius mass drops below 1e-14. Ties between
// equal eigenvalues keep the stable order produced by the sweep.
// Throws NonHermitianInput when the Hermiticity residual exceeds the
// tolerance.
EigenSystem hermitian_eigendecompose(const Matrix& h, double hermiticity_tol = 1e-10);

}  // namespace ergo
