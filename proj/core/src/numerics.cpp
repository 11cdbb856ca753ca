#include "ecdkit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ecdkit/errors.hpp"

namespace ecdkit {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw NonSquareError("SymMatrix: matrix is not square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw AsymmetryError("SymMatrix: stored entries are not symmetric");
}

SymMatrix SymMatrix::symmetrized(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquareError("SymMatrix: matrix is not square");
  Matrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s(i, i) = m(i, i);
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const double v = 0.5 * (m(i, j) + m(j, i));
      s(i, j) = v;
      s(j, i) = v;
    }
  }
  return SymMatrix(std::move(s));
}

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return SymMatrix(std::move(m));
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
  return t;
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) sum += a(p, q) * a(p, q);
  return std::sqrt(2.0 * sum);
}

// Zeroes a(p, q) with one Jacobi rotation, accumulating it into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition sym_eig(const SymMatrix& m, double tol, int max_sweeps) {
  const std::size_t n = m.dim();
  for (double x : m.matrix().data())
    if (!std::isfinite(x)) throw NonFiniteInput("sym_eig: matrix has non-finite entries");

  Matrix a = m.matrix();
  Matrix v = Matrix::identity(n);
  const double scale = a.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_norm(a) > tol * scale) {
    if (sweep == max_sweeps) {
      std::ostringstream msg;
      msg << "sym_eig: no convergence after " << max_sweeps << " sweeps";
      throw NoConvergence(msg.str());
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
  }
  return out;
}

SymMatrix psd_sqrt(const SymMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return m;
  const auto eig = sym_eig(m);

  double magnitude = 0.0;
  for (double l : eig.values) magnitude = std::max(magnitude, std::abs(l));
  for (double l : eig.values) {
    if (l < -tolerance::kPsdSlack * magnitude) {
      std::ostringstream msg;
      msg << "psd_sqrt: eigenvalue " << l << " is materially negative";
      throw NotPSD(msg.str());
    }
  }

  Matrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double root = std::sqrt(std::max(eig.values[j], 0.0));
    if (root == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const double vr = eig.vectors(r, j) * root;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * eig.vectors(c, j);
    }
  }
  return SymMatrix::symmetrized(out);
}

double quadratic_form_2x2(const std::array<double, 2>& v, const Covariance2& sigma) {
  const double s11 = sigma[0][0];
  const double s22 = sigma[1][1];
  const double s12 = sigma[0][1];
  const double det = s11 * s22 - s12 * s12;
  const double threshold = tolerance::kSingularDet * std::max(s11 * s22, 1.0);
  if (!(s11 > 0.0) || !(s22 > 0.0) || !(det > threshold)) {
    std::ostringstream msg;
    msg << "covariance is singular or not positive definite (det = " << det << ")";
    throw SingularCovariance(msg.str(), det);
  }
  const double q = (s22 * v[0] * v[0] - 2.0 * s12 * v[0] * v[1] + s11 * v[1] * v[1]) / det;
  if (q < 0.0 && q > -tolerance::kNegativeClamp) return 0.0;
  return q;
}

}  // namespace ecdkit
