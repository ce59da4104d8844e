#include "lra/linalg.hpp"

namespace lra {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ShapeError("matrix shape mismatch in add");
  }
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw ShapeError("matrix shape mismatch in sub");
  }
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix shape mismatch in mul");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        out.at(i, j) += a * o.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = s * data_[i];
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ShapeError("matrix apply: size mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = at(i, j);
      if (a != 0) out[i] += a * v[j];
    }
  }
  return out;
}

Vector Matrix::col(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& r = res.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < r.rows() && r.at(pivot, col) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < r.cols(); ++j) {
        std::swap(r.at(pivot, j), r.at(lead, j));
      }
    }
    Rational inv = 1 / r.at(lead, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead) continue;
      Rational factor = r.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < r.cols(); ++j) {
        r.at(i, j) -= factor * r.at(lead, j);
      }
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  RrefResult res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    // pivot row p has its pivot in column pivot_cols[p]; back-substitute
    for (std::size_t p = 0; p < res.pivot_cols.size(); ++p) {
      v[res.pivot_cols[p]] = -res.reduced.at(p, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw ShapeError("solve: rhs size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult res = rref(aug);
  for (auto c : res.pivot_cols) {
    if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
  }
  Vector x(a.cols());
  for (std::size_t p = 0; p < res.pivot_cols.size(); ++p) {
    x[res.pivot_cols[p]] = res.reduced.at(p, a.cols());
  }
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("invert: matrix not square");
  std::size_t n = m.rows();
  Matrix aug = hstack(m, Matrix::identity(n));
  RrefResult res = rref(aug);
  if (res.pivot_cols.size() != n) return std::nullopt;
  for (std::size_t p = 0; p < n; ++p) {
    if (res.pivot_cols[p] != p) return std::nullopt;
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = res.reduced.at(i, n + j);
  }
  return inv;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw ShapeError("hstack: row mismatch");
  Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out.at(i, j) = left.at(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) {
      out.at(i, left.cols() + j) = right.at(i, j);
    }
  }
  return out;
}

}  // namespace lra
