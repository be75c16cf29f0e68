#pragma once

#include <string>
#include <vector>

#include "sympcoh/numeric.hpp"

namespace sympcoh {

/// Element of a finite abelian group in invariant-factor coordinates; the
/// i-th coordinate is reduced modulo the i-th factor. Elements carry only
/// their coordinates; arithmetic lives on FiniteAbelianGroup.
class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Int> coords) : coords_(std::move(coords)) {}

  const std::vector<Int>& coords() const { return coords_; }
  bool is_zero() const;

  bool operator==(const GroupElement& o) const { return coords_ == o.coords_; }
  bool operator!=(const GroupElement& o) const { return coords_ != o.coords_; }
  bool operator<(const GroupElement& o) const { return coords_ < o.coords_; }

  /// Coordinates joined by ':', e.g. "1:0"; the trivial group's element
  /// renders as "0".
  std::string str() const;

private:
  std::vector<Int> coords_;
};

/// Finite abelian group in invariant-factor form: Z/d_1 x ... x Z/d_k with
/// each d_i >= 2 and d_i | d_{i+1}. The empty list is the trivial group.
class FiniteAbelianGroup {
public:
  explicit FiniteAbelianGroup(std::vector<Int> factors = {});

  static FiniteAbelianGroup cyclic(const Int& m);

  /// Parses CLI notation: "1" is the trivial group, otherwise comma-separated
  /// invariant factors such as "2" or "2,4".
  static FiniteAbelianGroup parse(const std::string& csv);

  const std::vector<Int>& factors() const { return factors_; }
  size_t num_factors() const { return factors_.size(); }
  Int order() const;
  bool is_trivial() const { return factors_.empty(); }

  GroupElement zero() const;
  GroupElement element(std::vector<Int> coords) const;  // reduces mod factors
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;

  /// All elements, ordered lexicographically by coordinates.
  std::vector<GroupElement> elements() const;

  bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }
  std::string str() const;

private:
  void check_element(const GroupElement& a) const;
  std::vector<Int> factors_;
};

}  // namespace sympcoh
