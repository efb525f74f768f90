#include "qst/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qst {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch (" + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("ComplexMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), cplx(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  // Column-major friendly loop order: out(:,j) accumulates a(:,k) * b(k,j).
  for (int j = 0; j < b.cols(); ++j) {
    for (int k = 0; k < a.cols(); ++k) {
      const cplx bkj = b(k, j);
      if (bkj == cplx(0.0, 0.0)) continue;
      for (int i = 0; i < a.rows(); ++i) {
        out(i, j) += a(i, k) * bkj;
      }
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ja = 0; ja < a.cols(); ++ja) {
    for (int ia = 0; ia < a.rows(); ++ia) {
      const cplx f = a(ia, ja);
      if (f == cplx(0.0, 0.0)) continue;
      for (int jb = 0; jb < b.cols(); ++jb) {
        for (int ib = 0; ib < b.rows(); ++ib) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      out(j, i) = std::conj(m(i, j));
    }
  }
  return out;
}

cplx trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("trace: matrix not square");
  cplx t(0.0, 0.0);
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const cplx& x : m.flat()) sum += std::norm(x);
  return std::sqrt(sum);
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const cplx& x : m.flat()) best = std::max(best, std::abs(x));
  return best;
}

bool all_finite(const ComplexMatrix& m) {
  for (const cplx& x : m.flat()) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  }
  return true;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermiticity_deviation: matrix not square");
  double dev = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i <= j; ++i) {
      dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return dev;
}

ComplexMatrix symmetrize(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("symmetrize: matrix not square");
  const int d = m.rows();
  ComplexMatrix out(d, d);
  for (int j = 0; j < d; ++j) {
    out(j, j) = cplx(m(j, j).real(), 0.0);
    for (int i = 0; i < j; ++i) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

std::vector<cplx> vec(const ComplexMatrix& m) {
  return std::vector<cplx>(m.flat().begin(), m.flat().end());
}

ComplexMatrix mat(std::span<const cplx> v, int d) {
  if (static_cast<std::size_t>(d) * static_cast<std::size_t>(d) != v.size()) {
    throw DimensionError("mat: vector length " + std::to_string(v.size()) +
                         " is not " + std::to_string(d) + "^2");
  }
  ComplexMatrix out(d, d);
  std::copy(v.begin(), v.end(), out.flat().begin());
  return out;
}

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < j; ++i) {
      sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(2.0 * sum);
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermitian_eig: matrix not square");
  const int d = m.rows();
  if (hermiticity_deviation(m) > 1e-8) {
    throw HermiticityError("hermitian_eig: input deviates from Hermitian by more than 1e-8");
  }

  ComplexMatrix a = symmetrize(m);
  ComplexMatrix v = ComplexMatrix::identity(d);
  const double scale = std::max(1.0, frobenius_norm(a));
  const double stop = 1e-12 * scale;
  constexpr int kMaxSweeps = 100;

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(a) <= stop) break;
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const cplx h = a(p, q);
        const double habs = std::abs(h);
        if (habs == 0.0) continue;

        // Unitary 2x2 rotation R: R(p,p)=c, R(p,q)=s*alpha,
        // R(q,p)=-s*conj(alpha), R(q,q)=c with alpha = h/|h| annihilates
        // a(p,q) under a <- R* a R. Same stable tangent formula as the real
        // symmetric Jacobi.
        const cplx alpha = h / habs;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * habs);
        const double sgn = theta >= 0.0 ? 1.0 : -1.0;
        const double t = sgn / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx s_alpha = s * alpha;
        const cplx s_alpha_conj = s * std::conj(alpha);

        // Columns p and q (a <- a R).
        for (int k = 0; k < d; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s_alpha_conj * akq;
          a(k, q) = s_alpha * akp + c * akq;
        }
        // Rows p and q (a <- R* a).
        for (int k = 0; k < d; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s_alpha * aqk;
          a(q, k) = s_alpha_conj * apk + c * aqk;
        }
        // Eigenvector accumulation (v <- v R).
        for (int k = 0; k < d; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s_alpha_conj * vkq;
          v(k, q) = s_alpha * vkp + c * vkq;
        }
        // Pivot is zero by construction; kill the rounding residue.
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
      }
    }
  }
  if (sweep == kMaxSweeps && offdiag_frobenius(a) > stop) {
    throw NumericalError("hermitian_eig: Jacobi iteration failed to converge", kMaxSweeps);
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(d);
  out.eigenvectors = ComplexMatrix(d, d);
  for (int j = 0; j < d; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < d; ++i) {
      out.eigenvectors(i, j) = v(i, order[j]);
    }
  }
  return out;
}

}  // namespace qst
