#pragma once

#include <optional>
#include <vector>

#include "cisys/rational.hpp"

namespace cisys {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// Solves A x = b for one solution (free variables zero), if consistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);
/// Basis of the right nullspace {x : A x = 0}.
std::vector<std::vector<Rational>> nullspace(const Matrix& a);

}  // namespace cisys
