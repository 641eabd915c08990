#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oyqg {

/// Dense row-major matrix over a field scalar type.
template <class S>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<S> data;

  Matrix() = default;
  Matrix(int r, int c, const S& zero) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, zero) {}

  S& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const S& at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

template <class S>
Matrix<S> identity(int n, const S& zero, const S& one) {
  Matrix<S> m(n, n, zero);
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

template <class S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b, const S& zero) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  Matrix<S> c(a.rows, b.cols, zero);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

/// Determinant by Gaussian elimination; the first nonzero entry in a column is the pivot.
template <class S>
S determinant(Matrix<S> m, const S& one) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  S det = one;
  const int n = m.rows;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m.at(p, k).is_zero()) ++p;
    if (p == n) return S{} * one;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
      det = -det;
    }
    const S piv = m.at(k, k);
    det = det * piv;
    const S inv = piv.inverse();
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      const S f = m.at(i, k) * inv;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

/// Inverse by Gauss-Jordan; nullopt when singular.
template <class S>
std::optional<Matrix<S>> inverse(Matrix<S> m, const S& zero, const S& one) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  const int n = m.rows;
  Matrix<S> inv = identity(n, zero, one);
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m.at(p, k).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(p, j), m.at(k, j));
        std::swap(inv.at(p, j), inv.at(k, j));
      }
    const S pinv = m.at(k, k).inverse();
    for (int j = 0; j < n; ++j) {
      m.at(k, j) = m.at(k, j) * pinv;
      inv.at(k, j) = inv.at(k, j) * pinv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || m.at(i, k).is_zero()) continue;
      const S f = m.at(i, k);
      for (int j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

/// Incrementally built reduced row echelon form over sparse rows.
/// The pivot of a row is its largest column; pivots are normalized to one
/// and cleared from every other row.
template <class S>
class RowEchelon {
 public:
  using Row = std::map<int, S>;

  /// Eliminates all pivot columns from v.
  Row reduce(Row v) const {
    for (const auto& [p, row] : rows_) {
      auto it = v.find(p);
      if (it == v.end()) continue;
      const S f = it->second;
      for (const auto& [c, x] : row) {
        S nv = v[c] - f * x;
        if (nv.is_zero()) v.erase(c);
        else v[c] = nv;
      }
    }
    return v;
  }

  /// Returns true when v was independent of the rows so far.
  bool insert(Row v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const int p = v.rbegin()->first;
    const S inv = v.rbegin()->second.inverse();
    for (auto& [c, x] : v) x = x * inv;
    for (auto& [q, row] : rows_) {
      auto it = row.find(p);
      if (it == row.end()) continue;
      const S f = it->second;
      for (const auto& [c, x] : v) {
        S nv = row[c] - f * x;
        if (nv.is_zero()) row.erase(c);
        else row[c] = nv;
      }
    }
    rows_.emplace(p, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int c) const { return rows_.count(c) != 0; }
  const std::map<int, Row>& rows() const { return rows_; }

 private:
  std::map<int, Row> rows_;
};

}  // namespace oyqg
