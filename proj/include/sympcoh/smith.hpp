#pragma once

#include <vector>

#include "sympcoh/numeric.hpp"

namespace sympcoh {

/// Smith normal form data of an integer matrix. `invariants` holds the
/// nonzero diagonal entries d_1 | d_2 | ... (all positive); their count is
/// the rank. When requested, `v` is a unimodular matrix such that the class
/// of a row vector x in Z^n / rowlattice(a) has coordinates (x * v) taken
/// modulo the invariants (coordinates beyond the rank are free).
struct SmithForm {
  std::vector<Int> invariants;
  IMat v;  // empty unless computed with transform
  Index rank() const { return static_cast<Index>(invariants.size()); }
};

SmithForm smith_normal_form(IMat a, bool with_right_transform = false);

/// Invariant factors > 1 (the torsion divisors of the cokernel).
std::vector<Int> nontrivial_invariants(const IMat& a);

}  // namespace sympcoh
