#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qst/errors.hpp"

namespace qst {

using cplx = std::complex<double>;

// Dense complex matrix. Storage is column-major, fixed project-wide: vec() of
// a matrix is literally its storage, matching the column-concatenation
// convention used throughout the measurement model.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * rows_ + i]; }
  const cplx& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(j) * rows_ + i];
  }

  std::span<cplx> flat() { return data_; }
  std::span<const cplx> flat() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);
  ComplexMatrix& operator*=(double scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

// Eigensystem of a Hermitian matrix: eigenvalues ascending, eigenvector
// columns paired with them, V unitary.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);

cplx trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

// Largest |m - m*| entry; 0 for exactly Hermitian input.
double hermiticity_deviation(const ComplexMatrix& m);
// (m + m*) / 2.
ComplexMatrix symmetrize(const ComplexMatrix& m);

// Column-concatenation vectorization and its inverse.
std::vector<cplx> vec(const ComplexMatrix& m);
ComplexMatrix mat(std::span<const cplx> v, int d);

// Cyclic-Jacobi eigendecomposition for complex Hermitian matrices. Input must
// be square with max|m - m*| <= 1e-8 (callers symmetrize first); it is
// symmetrized internally before sweeping. Converges when the off-diagonal
// Frobenius mass drops below 1e-12 * max(1, ||m||_F); throws NumericalError
// if 100 sweeps are not enough.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

}  // namespace qst
