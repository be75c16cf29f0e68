#pragma once

#include <optional>

#include "sympcoh/numeric.hpp"

namespace sympcoh {

/// Exact Gaussian elimination over an arbitrary field scalar. The scalar must
/// provide +, -, *, /, is_zero() and value-semantics; used with Rat and with
/// quadratic field elements.

template <class S>
Index rank_field(Mat<S> a) {
  Index r = 0;
  for (Index col = 0; col < a.cols() && r < a.rows(); ++col) {
    Index p = -1;
    for (Index i = r; i < a.rows(); ++i)
      if (!a(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r) a.row(r).swap(a.row(p));
    for (Index i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      S f = a(i, col) / a(r, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

template <class S>
S det_field(Mat<S> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det_field: not square");
  S det(1);
  for (Index col = 0; col < a.cols(); ++col) {
    Index p = -1;
    for (Index i = col; i < a.rows(); ++i)
      if (!a(i, col).is_zero()) { p = i; break; }
    if (p < 0) return S(0);
    if (p != col) {
      a.row(col).swap(a.row(p));
      det = S(0) - det;
    }
    det = det * a(col, col);
    for (Index i = col + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      S f = a(i, col) / a(col, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

/// Solves x * a = b over the field; std::nullopt if inconsistent.
template <class S>
std::optional<RowVec<S>> solve_left_field(const Mat<S>& a, const RowVec<S>& b) {
  // Eliminate on the transposed augmented system (a^T | b^T).
  const Index m = a.rows(), n = a.cols();
  Mat<S> w(n, m + 1);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) w(i, j) = a(j, i);
    w(i, m) = b(i);
  }
  Index r = 0;
  std::vector<Index> pivot_of_col(static_cast<size_t>(m), -1);
  for (Index col = 0; col < m && r < n; ++col) {
    Index p = -1;
    for (Index i = r; i < n; ++i)
      if (!w(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r) w.row(r).swap(w.row(p));
    for (Index i = 0; i < n; ++i) {
      if (i == r || w(i, col).is_zero()) continue;
      S f = w(i, col) / w(r, col);
      for (Index j = col; j <= m; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_of_col[static_cast<size_t>(col)] = r;
    ++r;
  }
  for (Index i = r; i < n; ++i)
    if (!w(i, m).is_zero()) return std::nullopt;
  RowVec<S> x(m);
  for (Index col = 0; col < m; ++col) {
    Index p = pivot_of_col[static_cast<size_t>(col)];
    x(col) = p < 0 ? S(0) : w(p, m) / w(p, col);
  }
  return x;
}

}  // namespace sympcoh
