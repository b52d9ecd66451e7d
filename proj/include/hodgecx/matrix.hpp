#pragma once

#include <hodgecx/rational.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hodgecx {

// Shared zero of the scalar field; avoids constructing temporaries in the
// hot comparison loops.
template <class K>
inline const K& zero_of() {
  static const K z{};
  return z;
}

// Dense matrix over an exact field, row-major. Vectors are columns; an
// r x c matrix maps K^c -> K^r.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw std::invalid_argument("Matrix: ragged rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<K> row(int i) const {
    std::vector<K> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const K& x : data_)
      if (!(x == zero_of<K>())) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a.at(i, k);
        if (aik == zero_of<K>()) continue;
        for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in sum");
    Matrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in difference");
    Matrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = -a.data_[k];
    return c;
  }

  Matrix scaled(const K& s) const {
    Matrix c(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) c.data_[k] = data_[k] * s;
    return c;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<K> out(rows_, K(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(at(i, j) == zero_of<K>())) out[i] += at(i, j) * v[j];
    return out;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<K> data_;
};

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix<K> m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix<K> m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<int> rref_in_place(Matrix<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot_row = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!(m.at(i, c) == zero_of<K>())) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot_row, j), m.at(r, j));
    K inv = K(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      K f = m.at(i, c);
      if (f == zero_of<K>()) continue;
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Reduced echelon basis of the row space; drops zero rows.
template <class K>
Matrix<K> row_space_basis(Matrix<K> m) {
  std::vector<int> pivots = rref_in_place(m);
  Matrix<K> out(static_cast<int>(pivots.size()), m.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

template <class K>
int rank(Matrix<K> m) {
  return static_cast<int>(rref_in_place(m).size());
}

// Canonical (echelonized) basis of the null space {x : m x = 0}, rows.
template <class K>
Matrix<K> kernel_basis(Matrix<K> m) {
  int n = m.cols();
  std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> rows;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<K> v(n, K(0));
    v[j] = K(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(static_cast<int>(i), j);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix<K>(0, n);
  return row_space_basis(Matrix<K>::from_rows(rows));
}

// Solves a x = b; empty if inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref_in_place(aug);
  for (int c : pivots)
    if (c == a.cols()) return std::nullopt;
  std::vector<K> x(a.cols(), K(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), a.cols());
  return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  Matrix<K> aug = hstack(a, Matrix<K>::identity(a.rows()));
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != a.rows()) return std::nullopt;
  for (size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  Matrix<K> inv(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) inv.at(i, j) = aug.at(i, a.cols() + j);
  return inv;
}

}  // namespace hodgecx
