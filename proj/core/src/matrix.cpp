#include "ergo/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ergo {

namespace {

void check_dim(std::size_t dim) {
  if (dim < 1 || dim > Matrix::max_dim) {
    throw DimensionMismatch("matrix dimension " + std::to_string(dim) +
                            " unsupported (must be 1.." + std::to_string(Matrix::max_dim) + ")");
  }
}

void check_same_dim(const Matrix& a, const Matrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()) + " differ");
  }
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

Matrix::Matrix(std::size_t dim, std::initializer_list<complex_t> entries) : dim_(dim) {
  check_dim(dim);
  if (entries.size() != dim * dim) {
    throw DimensionMismatch("entry count " + std::to_string(entries.size()) +
                            " does not equal dim^2 = " + std::to_string(dim * dim));
  }
  std::copy(entries.begin(), entries.end(), entries_.begin());
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

complex_t Matrix::trace() const {
  complex_t sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (std::size_t k = 0; k < dim_ * dim_; ++k) m = std::max(m, std::abs(entries_[k]));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  check_same_dim(*this, rhs, "add");
  for (std::size_t k = 0; k < dim_ * dim_; ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  check_same_dim(*this, rhs, "subtract");
  for (std::size_t k = 0; k < dim_ * dim_; ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(complex_t scale) {
  for (std::size_t k = 0; k < dim_ * dim_; ++k) entries_[k] *= scale;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(complex_t scale, Matrix m) { return m *= scale; }
Matrix operator*(Matrix m, complex_t scale) { return m *= scale; }

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const complex_t aik = a(i, k);
      if (aik == complex_t{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix dagger(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t an = a.dim();
  const std::size_t bn = b.dim();
  if (an * bn > Matrix::max_dim) {
    throw DimensionMismatch("kron result dimension " + std::to_string(an * bn) +
                            " exceeds the supported maximum " + std::to_string(Matrix::max_dim));
  }
  Matrix out(an * bn);
  for (std::size_t i = 0; i < an; ++i)
    for (std::size_t j = 0; j < an; ++j) {
      const complex_t aij = a(i, j);
      for (std::size_t k = 0; k < bn; ++k)
        for (std::size_t l = 0; l < bn; ++l) out(i * bn + k, j * bn + l) = aij * b(k, l);
    }
  return out;
}

complex_t trace_of_product(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b, "trace_of_product");
  const std::size_t n = a.dim();
  complex_t sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum += a(i, j) * b(j, i);
  return sum;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

double hermiticity_residual(const Matrix& a) {
  double m = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

namespace {

double offdiagonal_mass(const Matrix& a) {
  double sum = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) sum += 2.0 * std::norm(a(p, q));
  return std::sqrt(sum);
}

}  // namespace

EigenSystem hermitian_eigendecompose(const Matrix& h, double hermiticity_tol) {
  const std::size_t n = h.dim();
  if (n == 0) throw DimensionMismatch("eigendecomposition of an empty matrix");
  const double residual = hermiticity_residual(h);
  if (residual > hermiticity_tol) {
    throw NonHermitianInput("Hermiticity residual " + std::to_string(residual) +
                            " exceeds tolerance");
  }

  // Work on the exactly Hermitian average so input rounding cannot bias
  // the sweep.
  Matrix a = h;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const complex_t mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
    a(i, i) = std::real(a(i, i));
  }

  Matrix v = Matrix::identity(n);
  constexpr double off_tol = 1e-14;
  constexpr int max_sweeps = 60;

  for (int sweep = 0; sweep < max_sweeps && offdiagonal_mass(a) >= off_tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex_t apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        // De-phase the pivot to a real 2x2 block, then rotate by the
        // smaller-angle root of t^2 + 2*tau*t - 1 = 0.
        const complex_t phase = apq / mag;
        const double tau = (std::real(a(q, q)) - std::real(a(p, p))) / (2.0 * mag);
        const double root = std::sqrt(1.0 + tau * tau);
        const double t = (tau >= 0.0) ? 1.0 / (tau + root) : 1.0 / (tau - root);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complex_t w = std::conj(phase);

        // A <- A * U with U = [[c, s], [-s*w, c*w]] on rows/cols (p, q).
        for (std::size_t i = 0; i < n; ++i) {
          const complex_t aip = a(i, p);
          const complex_t aiq = a(i, q);
          a(i, p) = c * aip - s * w * aiq;
          a(i, q) = s * aip + c * w * aiq;
        }
        // A <- U^dagger * A.
        for (std::size_t j = 0; j < n; ++j) {
          const complex_t apj = a(p, j);
          const complex_t aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * apj + c * phase * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
        // Accumulate the eigenvector basis.
        for (std::size_t i = 0; i < n; ++i) {
          const complex_t vip = v(i, p);
          const complex_t viq = v(i, q);
          v(i, p) = c * vip - s * w * viq;
          v(i, q) = s * vip + c * w * viq;
        }
      }
    }
  }

  // Stable ascending sort keeps sweep order among equal eigenvalues.
  std::array<std::size_t, Matrix::max_dim> order{};
  std::iota(order.begin(), order.begin() + n, std::size_t{0});
  std::stable_sort(order.begin(), order.begin() + n, [&a](std::size_t x, std::size_t y) {
    return std::real(a(x, x)) < std::real(a(y, y));
  });

  EigenSystem out;
  out.dim = n;
  out.eigenvectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = std::real(a(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace ergo
