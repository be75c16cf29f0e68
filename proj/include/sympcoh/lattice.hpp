#pragma once

#include <vector>

#include <json.hpp>

#include "sympcoh/abelian.hpp"
#include "sympcoh/numeric.hpp"
#include "sympcoh/quadratic.hpp"

namespace sympcoh {

/// The standard symplectic form on R^{2n}: w(e_i, e_{-i}) = 1 = -w(e_{-i}, e_i)
/// for i in [n], all other basis pairings zero. K-coordinates are ordered
/// e_1, ..., e_n, e_{-n}, ..., e_{-1}; each splits into two rational
/// coordinates (x, y) for x + y*w0.
class SymplecticSpace {
public:
  explicit SymplecticSpace(int n);

  int n() const { return n_; }
  Index dim_k() const { return 2 * n_; }
  Index dim_q() const { return 4 * n_; }

  /// Position of the signed index s in the K-coordinate order.
  static Index position(int s, int n);
  static int signed_index(Index pos, int n);

  /// Gram matrix of the form on the K-basis (integer entries).
  IMat gram() const;

private:
  int n_;
};

/// Multiplication-by-w0 on Q^{4n} as a row-vector action v -> v * m.
IMat omega_action_matrix(long long disc, int n);

/// K-valued symplectic pairing of two rational rows of length 4n.
Fe symplectic_pair(const QRow& u, const QRow& v, long long disc, int n);

/// Finitely generated R-submodule of K^{2n}, stored as a rational lattice in
/// Q^{4n} with a canonical Hermite basis: integer rows over a positive common
/// denominator, in row HNF, with gcd(content, den) = 1.
class RLattice {
public:
  static RLattice zero(long long disc, int n);
  static RLattice standard(long long disc, int n);  // R^{2n} = Z^{4n}

  /// Lattice spanned by the given rows (dependent rows allowed).
  static RLattice from_rows(long long disc, int n, const QMat& rows);

  /// R-module generated by the given rows: the Z-span closed under w0.
  static RLattice r_span(long long disc, int n, const QMat& rows);

  long long disc() const { return disc_; }
  int n() const { return n_; }
  Index dim_q() const { return 4 * static_cast<Index>(n_); }

  Index z_rank() const { return rows_.rows(); }
  /// R-rank (half the Z-rank); defined for w0-stable lattices.
  int r_rank() const;

  const IMat& rows() const { return rows_; }
  const Int& den() const { return den_; }
  QMat rational_rows() const;
  /// Basis rows as K-vectors of length 2n.
  Mat<Fe> k_rows() const;

  bool is_zero() const { return rows_.rows() == 0; }
  bool is_integral() const { return den_.is_one(); }
  bool is_omega_stable() const;

  bool contains_row(const QRow& v) const;
  bool contains(const RLattice& other) const;

  RLattice sum(const RLattice& other) const;
  RLattice intersect(const RLattice& other) const;

  /// { x in this : x in span_Q(other) }; the saturation of `other` inside
  /// this lattice.
  RLattice intersect_with_span(const RLattice& other) const;

  bool operator==(const RLattice& o) const;
  bool operator!=(const RLattice& o) const { return !(*this == o); }

  nlohmann::json to_json() const;
  static RLattice from_json(const nlohmann::json& j);

private:
  RLattice(long long disc, int n, IMat rows, Int den);
  long long disc_;
  int n_;
  IMat rows_;
  Int den_;
};

/// Z-saturation of L inside the standard lattice of R^{2n}; requires
/// L contained in R^{2n}. Equals (L tensor K) meet R^{2n}, the smallest
/// direct summand containing L.
RLattice saturate(const RLattice& l);

/// True iff saturate(l) == l; requires l contained in R^{2n}.
bool is_summand(const RLattice& l);

/// { x in R^{2n} : w(x, l) = 0 }; a summand of rank 2n - rk(l). Requires a
/// summand as input.
RLattice orthogonal_complement(const RLattice& l);

/// Whether w vanishes on all pairs of basis vectors.
bool is_isotropic(const RLattice& l);

/// Steinitz class of a nonzero lattice: the class of the fractional ideal
/// generated by the top-wedge coefficients of all r-subsets of the Z-basis
/// against a fixed wedge-line basis.
GroupElement steinitz_class(const RLattice& l);

/// { lambda in K : lambda * v in m } for a nonzero v in span_Q(m).
FracIdeal coefficient_ideal(const QRow& v, const RLattice& m);

/// Kv meet m, the rank-1 summand of m through v.
RLattice line_summand(const QRow& v, const RLattice& m);

/// Deterministic bounded search for a rank-1 summand of m with the given
/// Steinitz class: primitive coefficient vectors are enumerated in shells of
/// increasing max-norm up to the search bound. Requires rk(m) >= 2; exhausting
/// the bound signals a bug or an insufficient bound, never impossibility.
RLattice rank_one_summand_with_class(const RLattice& m, const GroupElement& c);

inline constexpr int kDefaultSearchBound = 40;
/// kDefaultSearchBound, overridable via the SYMPCOH_SEARCH_BOUND env var.
int search_bound();

/// U' with w = u (+) u' as R-modules; requires u a summand of w.
RLattice complement_in(const RLattice& u, const RLattice& w);

/// Isotropic summand v with u < v < w, rk(v) = rk(u) + 1 and [v] = c.
/// Requires u, w summands with u < w, u isotropic, w inside u-perp and
/// rk(w) >= rk(u) + 2.
RLattice relative_extension(const RLattice& u, const RLattice& w, const GroupElement& c);

/// Nested isotropic summands u_1 < ... < u_n with rk(u_i) = i, [u_i] = c_i.
std::vector<RLattice> isotropic_chain(long long disc, int n,
                                      const std::vector<GroupElement>& classes);

}  // namespace sympcoh
