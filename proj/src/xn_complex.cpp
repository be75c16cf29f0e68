#include "sympcoh/xn_complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "sympcoh/hermite.hpp"
#include "sympcoh/smith.hpp"

namespace sympcoh {

XnComplex::XnComplex(int n, FiniteAbelianGroup group)
    : n_(n), group_(std::move(group)) {
  if (n < 1) throw std::invalid_argument("XnComplex: n must be >= 1");
  std::vector<GroupElement> elems = group_.elements();

  // Simplices of dimension k: choose k+1 levels out of [n], then one group
  // element per level. Enumerating level subsets and element tuples in
  // ascending order yields the lexicographic basis order.
  simplices_.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<int> levels(static_cast<size_t>(k + 1));
    // first combination 1,2,...,k+1
    for (int i = 0; i <= k; ++i) levels[static_cast<size_t>(i)] = i + 1;
    bool more = true;
    while (more) {
      // all element tuples for this level set, lexicographically
      std::vector<size_t> pick(static_cast<size_t>(k + 1), 0);
      while (true) {
        Simplex s;
        s.reserve(static_cast<size_t>(k + 1));
        for (int i = 0; i <= k; ++i)
          s.emplace_back(levels[static_cast<size_t>(i)], elems[pick[static_cast<size_t>(i)]]);
        simplices_[static_cast<size_t>(k)].push_back(std::move(s));
        size_t i = pick.size();
        bool carried = true;
        while (i > 0 && carried) {
          --i;
          if (++pick[i] < elems.size()) carried = false;
          else pick[i] = 0;
        }
        if (carried) break;
      }
      // next level combination
      int i = k;
      while (i >= 0 && levels[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) more = false;
      else {
        ++levels[static_cast<size_t>(i)];
        for (int j = i + 1; j <= k; ++j)
          levels[static_cast<size_t>(j)] = levels[static_cast<size_t>(j - 1)] + 1;
      }
    }
    std::sort(simplices_[static_cast<size_t>(k)].begin(),
              simplices_[static_cast<size_t>(k)].end());
  }
}

Index XnComplex::num_simplices(int k) const {
  if (k < 0 || k >= n_) return 0;
  return static_cast<Index>(simplices_[static_cast<size_t>(k)].size());
}

const std::vector<XnComplex::Simplex>& XnComplex::simplices(int k) const {
  if (k < 0 || k >= n_) throw std::out_of_range("simplex dimension out of range");
  return simplices_[static_cast<size_t>(k)];
}

Index XnComplex::index_of(int k, const Simplex& s) const {
  const auto& basis = simplices(k);
  auto it = std::lower_bound(basis.begin(), basis.end(), s);
  if (it == basis.end() || *it != s) throw std::invalid_argument("simplex not in complex");
  return static_cast<Index>(it - basis.begin());
}

IMat XnComplex::boundary(int k) const {
  if (k == 0) return IMat::Constant(1, num_simplices(0), Int(1));  // augmentation
  if (k < 0 || k >= n_) return IMat::Zero(std::max<Index>(num_simplices(k - 1), 0), 0);
  IMat d = IMat::Zero(num_simplices(k - 1), num_simplices(k));
  const auto& basis = simplices(k);
  for (Index col = 0; col < static_cast<Index>(basis.size()); ++col) {
    const Simplex& s = basis[static_cast<size_t>(col)];
    Int sign(1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      d(index_of(k - 1, face), col) += sign;
      sign = -sign;
    }
  }
  return d;
}

IVec XnComplex::chain_vector(const FormalChain& chain) const {
  IVec v = IVec::Zero(num_simplices(n_ - 1));
  for (const auto& [chamber, coeff] : chain.terms()) {
    if (static_cast<int>(chamber.size()) != n_)
      throw std::invalid_argument("chamber has wrong length for this complex");
    Simplex s;
    s.reserve(chamber.size());
    for (int i = 0; i < n_; ++i) {
      const VertexLabel& l = chamber[static_cast<size_t>(i)];
      if (l.kind() != VertexLabel::Kind::Concrete || l.index() != i + 1)
        throw std::invalid_argument("chamber vertex " + l.str() +
                                    " is not a concrete rank-" + std::to_string(i + 1) +
                                    " label");
      if (l.value().coords().size() != group_.num_factors())
        throw std::invalid_argument("group element does not belong to this complex");
      s.emplace_back(i + 1, l.value());
    }
    v(index_of(n_ - 1, s)) += coeff;
  }
  return v;
}

bool XnComplex::is_top_cycle(const FormalChain& chain) const {
  IVec v = chain_vector(chain);
  IVec b = boundary(n_ - 1) * v;
  for (Index i = 0; i < b.size(); ++i)
    if (!b(i).is_zero()) return false;
  return true;
}

const HomologySummary::Entry& HomologySummary::degree(int k) const {
  for (const auto& e : entries)
    if (e.degree == k) return e;
  throw std::out_of_range("no homology entry for degree " + std::to_string(k));
}

nlohmann::json HomologySummary::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& d : e.torsion) torsion.push_back(d.to_long_long());
    arr.push_back({{"degree", e.degree}, {"rank", e.rank}, {"torsion", torsion}});
  }
  return arr;
}

HomologySummary homology(const XnComplex& complex) {
  const int n = complex.n();
  HomologySummary out;
  std::vector<Index> ranks(static_cast<size_t>(n) + 1, 0);
  std::vector<std::vector<Int>> torsion(static_cast<size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    SmithForm f = smith_normal_form(complex.boundary(k));
    ranks[static_cast<size_t>(k)] = f.rank();
    for (const Int& d : f.invariants)
      if (d > Int(1)) torsion[static_cast<size_t>(k)].push_back(d);
  }
  for (int k = 0; k < n; ++k) {
    HomologySummary::Entry e;
    e.degree = k;
    e.rank = complex.num_simplices(k) - ranks[static_cast<size_t>(k)] -
             ranks[static_cast<size_t>(k) + 1];
    e.torsion = torsion[static_cast<size_t>(k) + 1];
    out.entries.push_back(std::move(e));
  }
  return out;
}

FormalChain sigma_s_cycle(const XnComplex& complex,
                          const std::vector<std::pair<GroupElement, GroupElement>>& s) {
  const int n = complex.n();
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("sigma_s_cycle: need one pair per level");
  for (const auto& [a, b] : s) {
    if (a.coords().size() != complex.group().num_factors() ||
        b.coords().size() != complex.group().num_factors())
      throw std::invalid_argument("sigma_s_cycle: element outside the group");
    if (a == b) throw std::invalid_argument("sigma_s_cycle: S_i must be a two-element set");
  }
  FormalChain chain;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Chamber chamber;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      bool pick_a = (mask >> i) & 1u;
      ones += pick_a ? 1 : 0;
      chamber.push_back(VertexLabel::concrete(
          i + 1, pick_a ? s[static_cast<size_t>(i)].first : s[static_cast<size_t>(i)].second));
    }
    chain.add(chamber, Int(ones % 2 == 0 ? 1 : -1));
  }
  return chain;
}

Index class_span_rank(const XnComplex& complex, const std::vector<FormalChain>& cycles) {
  if (cycles.empty()) return 0;
  IMat m(static_cast<Index>(cycles.size()), complex.num_simplices(complex.n() - 1));
  for (size_t i = 0; i < cycles.size(); ++i) {
    if (!complex.is_top_cycle(cycles[i]))
      throw std::invalid_argument("class_span_rank: input chain is not a cycle");
    m.row(static_cast<Index>(i)) = complex.chain_vector(cycles[i]).transpose();
  }
  return rank_int(m);
}

}  // namespace sympcoh
