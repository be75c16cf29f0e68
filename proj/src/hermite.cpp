#include "sympcoh/hermite.hpp"

namespace sympcoh {

namespace {

// Picks the row in [from, rows) with the smallest nonzero |a(i, col)|.
Index pick_pivot(const IMat& a, Index from, Index col) {
  Index best = -1;
  for (Index i = from; i < a.rows(); ++i) {
    if (a(i, col).is_zero()) continue;
    if (best < 0 || abs(a(i, col)) < abs(a(best, col))) best = i;
  }
  return best;
}

}  // namespace

HermiteForm hermite_normal_form(IMat a, bool with_transform) {
  const Index m = a.rows(), n = a.cols();
  HermiteForm out;
  IMat u;
  if (with_transform) u = IMat::Identity(m, m);

  Index r = 0;
  for (Index col = 0; col < n && r < m; ++col) {
    // Euclid on column `col` below row r until a single nonzero entry remains.
    while (true) {
      Index p = pick_pivot(a, r, col);
      if (p < 0) break;
      if (p != r) {
        a.row(r).swap(a.row(p));
        if (with_transform) u.row(r).swap(u.row(p));
      }
      bool clean = true;
      for (Index i = r + 1; i < m; ++i) {
        if (a(i, col).is_zero()) continue;
        Int q = div_round(a(i, col), a(r, col));
        if (!q.is_zero()) {
          a.row(i) -= q * a.row(r);
          if (with_transform) u.row(i) -= q * u.row(r);
        }
        if (!a(i, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (a(r, col).is_zero()) continue;
    if (a(r, col).is_negative()) {
      a.row(r) = -a.row(r);
      if (with_transform) u.row(r) = -u.row(r);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (Index i = 0; i < r; ++i) {
      Int q = div_floor(a(i, col), a(r, col));
      if (!q.is_zero()) {
        a.row(i) -= q * a.row(r);
        if (with_transform) u.row(i) -= q * u.row(r);
      }
    }
    out.pivot_cols.push_back(col);
    ++r;
  }

  out.rank = r;
  out.h = std::move(a);
  if (with_transform) out.u = std::move(u);
  return out;
}

IMat hnf_basis(const IMat& a) {
  HermiteForm f = hermite_normal_form(a);
  return f.h.topRows(f.rank);
}

IMat left_kernel(const IMat& a) {
  HermiteForm f = hermite_normal_form(a, /*with_transform=*/true);
  return f.u.bottomRows(a.rows() - f.rank);
}

IMat right_kernel(const IMat& a) {
  IMat k = left_kernel(IMat(a.transpose()));
  return k.transpose();
}

std::optional<IRow> solve_left(const IMat& a, const IRow& b) {
  if (b.cols() != a.cols()) throw std::invalid_argument("solve_left: size mismatch");
  HermiteForm f = hermite_normal_form(a, /*with_transform=*/true);
  IRow residual = b;
  IRow y = IRow::Zero(a.rows());
  for (Index k = 0; k < f.rank; ++k) {
    Index c = f.pivot_cols[static_cast<size_t>(k)];
    if (residual(c).is_zero()) continue;
    if (!(residual(c) % f.h(k, c)).is_zero()) return std::nullopt;
    Int q = residual(c) / f.h(k, c);
    residual -= q * f.h.row(k);
    y(k) = q;
  }
  for (Index j = 0; j < residual.cols(); ++j)
    if (!residual(j).is_zero()) return std::nullopt;
  return IRow(y * f.u);
}

Index rank_int(const IMat& a) { return hermite_normal_form(a).rank; }

}  // namespace sympcoh
