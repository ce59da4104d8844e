#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lra/errors.hpp"
#include "lra/rational.hpp"

namespace lra {

// Dense row-major matrix over Q. All operations are exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const = default;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Rational& s) const;

  Vector apply(const Vector& v) const;

  // column j as a vector
  Vector col(std::size_t j) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan with exact pivoting (first nonzero entry in the column).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis for { x : m x = 0 }, one vector per free column, each with a 1 in its
// free position. Derived from the RREF, so the output is deterministic.
std::vector<Vector> kernel_basis(const Matrix& m);

// Some solution of a x = b, or absent when the system is inconsistent.
// Free variables are set to zero, so the answer is deterministic.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Inverse, or absent when the matrix is singular. Non-square input is a
// ShapeError.
std::optional<Matrix> invert(const Matrix& m);

// [left | right]; both operands must have the same row count
Matrix hstack(const Matrix& left, const Matrix& right);

}  // namespace lra
