#include "sympcoh/smith.hpp"

namespace sympcoh {

namespace {

// Smallest nonzero |a(i,j)| with i,j >= t, or (-1,-1).
std::pair<Index, Index> pick_pivot(const IMat& a, Index t) {
  Index bi = -1, bj = -1;
  for (Index i = t; i < a.rows(); ++i)
    for (Index j = t; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      if (bi < 0 || abs(a(i, j)) < abs(a(bi, bj))) { bi = i; bj = j; }
    }
  return {bi, bj};
}

}  // namespace

SmithForm smith_normal_form(IMat a, bool with_right_transform) {
  const Index m = a.rows(), n = a.cols();
  SmithForm out;
  IMat v;
  if (with_right_transform) v = IMat::Identity(n, n);

  Index t = 0;
  const Index steps = std::min(m, n);
  while (t < steps) {
    auto [pi, pj] = pick_pivot(a, t);
    if (pi < 0) break;
    if (pi != t) a.row(t).swap(a.row(pi));
    if (pj != t) {
      a.col(t).swap(a.col(pj));
      if (with_right_transform) v.col(t).swap(v.col(pj));
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (Index i = t + 1; i < m; ++i) {
        if (a(i, t).is_zero()) continue;
        Int q = div_round(a(i, t), a(t, t));
        if (!q.is_zero()) a.row(i) -= q * a.row(t);
        if (!a(i, t).is_zero()) {
          a.row(t).swap(a.row(i));  // strictly smaller remainder becomes pivot
          dirty = true;
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        Int q = div_round(a(t, j), a(t, t));
        if (!q.is_zero()) {
          a.col(j) -= q * a.col(t);
          if (with_right_transform) v.col(j) -= q * v.col(t);
        }
        if (!a(t, j).is_zero()) {
          a.col(t).swap(a.col(j));
          if (with_right_transform) v.col(t).swap(v.col(j));
          dirty = true;
        }
      }
    }

    // Make the pivot divide every remaining entry; otherwise fold the
    // offending row in and redo the elimination for this step.
    bool divides_all = true;
    for (Index i = t + 1; i < m && divides_all; ++i)
      for (Index j = t + 1; j < n && divides_all; ++j)
        if (!(a(i, j) % a(t, t)).is_zero()) {
          a.row(t) += a.row(i);
          divides_all = false;
        }
    if (!divides_all) continue;

    if (a(t, t).is_negative()) a.row(t) = -a.row(t);
    ++t;
  }

  out.invariants.reserve(static_cast<size_t>(t));
  for (Index k = 0; k < t; ++k) out.invariants.push_back(a(k, k));
  if (with_right_transform) out.v = std::move(v);
  return out;
}

std::vector<Int> nontrivial_invariants(const IMat& a) {
  SmithForm f = smith_normal_form(a);
  std::vector<Int> out;
  for (const Int& d : f.invariants)
    if (d > Int(1)) out.push_back(d);
  return out;
}

}  // namespace sympcoh
