#pragma once

#include <optional>

#include "sympcoh/numeric.hpp"

namespace sympcoh {

/// Result of a row-style Hermite reduction of an integer matrix.
///
/// `h` is in row echelon Hermite normal form: the first `rank` rows are
/// nonzero with pivot columns strictly increasing, each pivot is positive,
/// entries above a pivot are reduced into [0, pivot), and all remaining rows
/// are zero. When requested, `u` is a unimodular matrix with u * input == h.
struct HermiteForm {
  IMat h;
  IMat u;  // empty unless computed with transform
  Index rank = 0;
  std::vector<Index> pivot_cols;
};

HermiteForm hermite_normal_form(IMat a, bool with_transform = false);

/// Canonical basis of the row lattice of `a`: the nonzero rows of its HNF.
IMat hnf_basis(const IMat& a);

/// Basis (as rows) of { x : x * a = 0 }. The result is a saturated lattice.
IMat left_kernel(const IMat& a);

/// Basis (as columns) of { w : a * w = 0 }.
IMat right_kernel(const IMat& a);

/// Solves x * a = b over the integers; returns std::nullopt when no integral
/// solution exists.
std::optional<IRow> solve_left(const IMat& a, const IRow& b);

Index rank_int(const IMat& a);

}  // namespace sympcoh
