#pragma once

#include <functional>
#include <vector>

#include "sympcoh/abelian.hpp"
#include "sympcoh/chain.hpp"
#include "sympcoh/signed_perm.hpp"

namespace sympcoh {

inline constexpr int kMaxSymbolicRank = 5;

/// Symbolic vertex class of the saturation Sat(sum of I_i over i in T) for a
/// subset T = sigma([m]) of [+-n]:
///   - BClass(m) when T = [m],
///   - AClass(m) when T = [m-1] + {x} with x in {-m, +-(m+1), ..., +-n},
///   - Opaque(T) otherwise.
VertexLabel label_of_subset(int n, const std::vector<int>& t);

/// The full apartment class sum_{sigma in B_n} (-1)^len(sigma) times the
/// chamber of symbolic vertex labels of sigma's flag.
FormalChain apartment_chain_symbolic(int n);

struct GoodBadSplit {
  FormalChain good;
  FormalChain bad;
  long long good_count = 0;  // number of good sigma
  long long bad_count = 0;   // number of bad sigma (their chain cancels)
};

GoodBadSplit split_good_bad(int n);

/// Specializes a symbolic chain to a chain on X_n(G): BClass(i) becomes the
/// vertex (i, b_i), AClass(i) becomes (i, a_i), and an Opaque label of size m
/// becomes (m, opaque(T)). Requires a_i != b_i for every level.
FormalChain instantiate(const FormalChain& chain, const FiniteAbelianGroup& group,
                        const std::vector<std::pair<GroupElement, GroupElement>>& ab,
                        const std::function<GroupElement(const std::vector<int>&)>& opaque);

/// Image of the apartment class of an integral frame whose line classes are
/// c: the signed sum over sigma in B_n of the partial-sum chambers
/// (c_{sigma(1)}, c_{sigma(1)}+c_{sigma(2)}, ...). Requires c_{-j} = -c_j.
FormalChain integral_image(int n, const FiniteAbelianGroup& group,
                           const std::vector<GroupElement>& c_pos,
                           const std::vector<GroupElement>& c_neg);

struct IntegralImageCount {
  Int distinct_nonzero;  // distinct nonzero images up to global sign
  Int kappa_binomial;    // C(kappa, n) with kappa = floor(|G|/2)
  Int wedge_rank;        // (|G|-1)^n
};

/// Enumerates every admissible class assignment c (c_{-j} = -c_j), collects
/// the distinct nonzero images up to sign, and checks the counting bound
/// count <= C(kappa, n) < (|G|-1)^n. Requires |G| >= 2 and n >= 2.
IntegralImageCount count_integral_images(int n, const FiniteAbelianGroup& group);

}  // namespace sympcoh
