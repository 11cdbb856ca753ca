#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace ecdkit {

namespace tolerance {
/// Jacobi stops once the off-diagonal Frobenius norm is this fraction of ||A||_F.
inline constexpr double kJacobiRelative = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
/// Eigenvalues below -kPsdSlack * lambda_max mean "not PSD".
inline constexpr double kPsdSlack = 1e-9;
/// 2x2 covariance is singular when |det| <= kSingularDet * max(s11*s22, 1).
inline constexpr double kSingularDet = 1e-12;
/// Quadratic forms in (-kNegativeClamp, 0) are rounding noise and become 0.
inline constexpr double kNegativeClamp = 1e-12;
}  // namespace tolerance

using Covariance2 = std::array<std::array<double, 2>, 2>;

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;
  double frobenius_norm() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square matrix whose stored entries are exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  /// Throws NonSquareError / AsymmetryError unless `m` is exactly symmetric.
  explicit SymMatrix(Matrix m);

  /// Averages `m` with its transpose; use for products that are symmetric
  /// only up to rounding.
  static SymMatrix symmetrized(const Matrix& m);
  static SymMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return m_.rows(); }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const Matrix& matrix() const noexcept { return m_; }
  double trace() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  Matrix m_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j pairs with values[j]
};

/// Cyclic Jacobi rotations. Converged when off(A)_F <= tol * ||A||_F.
/// Throws NoConvergence after `max_sweeps`.
EigenDecomposition sym_eig(const SymMatrix& m,
                           double tol = tolerance::kJacobiRelative,
                           int max_sweeps = tolerance::kJacobiMaxSweeps);

/// V diag(sqrt(max(lambda, 0))) V^T. Throws NotPSD when an eigenvalue is
/// below -kPsdSlack * lambda_max.
SymMatrix psd_sqrt(const SymMatrix& m);

/// v^T S^{-1} v for a 2x2 symmetric S via the adjugate. Throws
/// SingularCovariance when S is not numerically positive definite.
double quadratic_form_2x2(const std::array<double, 2>& v, const Covariance2& sigma);

}  // namespace ecdkit
