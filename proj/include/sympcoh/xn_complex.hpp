#pragma once

#include <vector>

#include <json.hpp>

#include "sympcoh/abelian.hpp"
#include "sympcoh/chain.hpp"
#include "sympcoh/numeric.hpp"

namespace sympcoh {

/// Order complex of the poset [n] x G with (i,a) < (j,b) iff i < j. A
/// k-simplex is a chain of k+1 vertices on strictly increasing levels; the
/// maximal simplices are the |G|^n tuples (a_1, ..., a_n).
class XnComplex {
public:
  /// Vertex (level, group element); levels are 1-based.
  using Vertex = std::pair<int, GroupElement>;
  using Simplex = std::vector<Vertex>;

  XnComplex(int n, FiniteAbelianGroup group);

  int n() const { return n_; }
  const FiniteAbelianGroup& group() const { return group_; }

  int dimension() const { return n_ - 1; }
  Index num_simplices(int k) const;
  const std::vector<Simplex>& simplices(int k) const;
  Index index_of(int k, const Simplex& s) const;

  /// Matrix of the boundary map C_k -> C_{k-1}, columns indexed by the
  /// k-simplices. For k = 0 this is the augmentation row (reduced homology).
  IMat boundary(int k) const;

  /// Coefficient vector of a top-degree chain whose chambers are tuples
  /// (Concrete(1, g_1), ..., Concrete(n, g_n)).
  IVec chain_vector(const FormalChain& chain) const;

  bool is_top_cycle(const FormalChain& chain) const;

private:
  int n_;
  FiniteAbelianGroup group_;
  std::vector<std::vector<Simplex>> simplices_;  // by dimension
};

struct HomologySummary {
  struct Entry {
    int degree = 0;
    Index rank = 0;
    std::vector<Int> torsion;
  };
  std::vector<Entry> entries;  // degrees 0 .. n-1, reduced homology

  const Entry& degree(int k) const;
  nlohmann::json to_json() const;
};

/// Reduced integral homology via Smith normal form of the boundary matrices.
HomologySummary homology(const XnComplex& complex);

/// The fundamental cycle of the join-of-S^0 subcomplex selected by S: the
/// signed sum over e in {0,1}^n of the chambers with entry a_i when e_i = 1
/// and b_i when e_i = 0, with sign (-1)^{sum e_i}.
FormalChain sigma_s_cycle(const XnComplex& complex,
                          const std::vector<std::pair<GroupElement, GroupElement>>& s);

/// Rank of the span of the given top-degree cycles in H_{n-1}. The complex
/// has no n-simplices, so this is the rank of the integer span of the cycle
/// vectors themselves. Throws on a non-cycle input.
Index class_span_rank(const XnComplex& complex, const std::vector<FormalChain>& cycles);

}  // namespace sympcoh
