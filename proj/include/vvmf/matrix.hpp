#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vvmf/error.hpp"
#include "vvmf/rational.hpp"

namespace vvmf {

// Dense matrix over an exact scalar (Rational or Cyclotomic). All operations
// are exact; elimination is fraction-free Bareiss with first-nonzero pivoting,
// so it works verbatim over any exact field without magnitude comparisons.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  T trace() const {
    require_pre(rows_ == cols_, "trace of a non-square matrix");
    T t(0);
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require_pre(rows_ == o.rows_ && cols_ == o.cols_, "matrix addition dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_pre(rows_ == o.rows_ && cols_ == o.cols_, "matrix subtraction dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_pre(a.cols_ == b.rows_, "matrix product dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& v : m.a_) v = s * v;
    return m;
  }

  friend Matrix operator-(Matrix m) {
    for (auto& v : m.a_) v = -v;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

  T determinant() const {
    require_pre(rows_ == cols_, "determinant of a non-square matrix");
    size_t n = rows_;
    if (n == 0) return T(1);
    Matrix m = *this;
    T prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
      size_t p = k;
      while (p < n && m(p, k) == T(0)) ++p;
      if (p == n) return T(0);
      if (p != k) {
        for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
        sign = -sign;
      }
      for (size_t i = k + 1; i < n; ++i) {
        for (size_t j = k + 1; j < n; ++j)
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        m(i, k) = T(0);
      }
      prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return sign < 0 ? T(T(0) - det) : det;
  }

  // Solves A * X = B exactly; throws a precondition error when A is singular.
  Matrix solve(const Matrix& b) const {
    require_pre(rows_ == cols_, "solve requires a square matrix");
    require_pre(b.rows_ == rows_, "solve right-hand side dimension mismatch");
    size_t n = rows_, w = b.cols_;
    Matrix m(n, n + w);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
      for (size_t j = 0; j < w; ++j) m(i, n + j) = b(i, j);
    }
    T prev(1);
    for (size_t k = 0; k < n; ++k) {
      size_t p = k;
      while (p < n && m(p, k) == T(0)) ++p;
      if (p == n) fail_pre("singular matrix (determinant 0)");
      if (p != k)
        for (size_t j = 0; j < n + w; ++j) std::swap(m(p, j), m(k, j));
      if (k + 1 < n) {
        for (size_t i = k + 1; i < n; ++i) {
          for (size_t j = k + 1; j < n + w; ++j)
            m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
          m(i, k) = T(0);
        }
        prev = m(k, k);
      }
    }
    Matrix x(n, w);
    for (size_t c = 0; c < w; ++c) {
      for (size_t i = n; i-- > 0;) {
        T acc = m(i, n + c);
        for (size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x(j, c);
        x(i, c) = acc / m(i, i);
      }
    }
    return x;
  }

  Matrix inverse() const { return solve(identity(rows_)); }

  // Exact kernel basis (column vectors); empty for a trivial kernel.
  std::vector<std::vector<T>> nullspace() const {
    size_t n = rows_, w = cols_;
    Matrix m = *this;
    std::vector<long> pivot_col_of_row;
    T prev(1);
    size_t r = 0;
    for (size_t col = 0; col < w && r < n; ++col) {
      size_t p = r;
      while (p < n && m(p, col) == T(0)) ++p;
      if (p == n) continue;
      if (p != r)
        for (size_t j = 0; j < w; ++j) std::swap(m(p, j), m(r, j));
      for (size_t i = r + 1; i < n; ++i) {
        for (size_t j = col + 1; j < w; ++j)
          m(i, j) = (m(i, j) * m(r, col) - m(i, col) * m(r, j)) / prev;
        m(i, col) = T(0);
      }
      prev = m(r, col);
      pivot_col_of_row.push_back(long(col));
      ++r;
    }
    std::vector<bool> is_pivot(w, false);
    for (long c : pivot_col_of_row) is_pivot[size_t(c)] = true;
    std::vector<std::vector<T>> basis;
    for (size_t free_col = 0; free_col < w; ++free_col) {
      if (is_pivot[free_col]) continue;
      std::vector<T> v(w, T(0));
      v[free_col] = T(1);
      for (size_t row = r; row-- > 0;) {
        size_t pc = size_t(pivot_col_of_row[row]);
        T acc(0);
        for (size_t j = pc + 1; j < w; ++j)
          if (!(v[j] == T(0))) acc += m(row, j) * v[j];
        v[pc] = T(0) - acc / m(row, pc);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> a_;
};

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
  require_pre(m.cols() == v.size(), "matrix-vector dimension mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace vvmf
