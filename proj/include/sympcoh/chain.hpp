#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sympcoh/abelian.hpp"

namespace sympcoh {

/// Vertex of a chamber in a (symbolic or concrete) apartment pushforward.
///
/// BClass(i) and AClass(i) stand for the classes b_i and a_i of the frame
/// construction; Opaque(T) is an uninterpreted vertex keyed by the subset
/// T of [+-n] it came from; Concrete(rank, g) is an actual vertex (rank, g)
/// of X_n(G).
class VertexLabel {
public:
  enum class Kind { BClass, AClass, Opaque, Concrete };

  static VertexLabel b_class(int i);
  static VertexLabel a_class(int i);
  static VertexLabel opaque(std::vector<int> subset);  // canonicalized by |.|
  static VertexLabel concrete(int rank, GroupElement value);

  Kind kind() const { return kind_; }
  int index() const { return index_; }  // BClass/AClass index or Concrete rank
  const std::vector<int>& subset() const { return subset_; }
  const GroupElement& value() const { return value_; }

  /// "B3", "A2", "O{1,-2,3}", "C(2,1)".
  std::string str() const;

  bool operator==(const VertexLabel& o) const;
  bool operator<(const VertexLabel& o) const;

private:
  Kind kind_ = Kind::BClass;
  int index_ = 0;
  std::vector<int> subset_;
  GroupElement value_;
};

using Chamber = std::vector<VertexLabel>;

std::string chamber_str(const Chamber& c);

/// Integer combination of chambers. Zero coefficients are never stored, so
/// equal chains compare equal as maps.
class FormalChain {
public:
  FormalChain() = default;

  void add(const Chamber& chamber, const Int& coeff);
  void add(const FormalChain& other);
  void subtract(const FormalChain& other);
  FormalChain negated() const;

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::map<Chamber, Int>& terms() const { return terms_; }
  Int coeff(const Chamber& chamber) const;

  /// Global sign flip, if needed, so the lexicographically smallest chamber
  /// carries a positive coefficient. Identifies chains "up to sign".
  FormalChain sign_normalized() const;

  bool operator==(const FormalChain& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalChain& o) const { return terms_ != o.terms_; }
  bool operator<(const FormalChain& o) const;

  nlohmann::json to_json() const;

private:
  std::map<Chamber, Int> terms_;
};

FormalChain operator+(FormalChain a, const FormalChain& b);
FormalChain operator-(FormalChain a, const FormalChain& b);

}  // namespace sympcoh
