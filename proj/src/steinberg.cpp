#include "sympcoh/steinberg.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace sympcoh {

namespace {

void check_symbolic_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (n > kMaxSymbolicRank)
    throw std::domain_error("symbolic rank cap exceeded (n <= " +
                            std::to_string(kMaxSymbolicRank) + ")");
}

Chamber symbolic_chamber(int n, const SignedPermutation& sigma) {
  Chamber chamber;
  chamber.reserve(static_cast<size_t>(n));
  for (int m = 1; m <= n; ++m)
    chamber.push_back(label_of_subset(n, sigma.image_of_prefix(m)));
  return chamber;
}

}  // namespace

VertexLabel label_of_subset(int n, const std::vector<int>& t) {
  if (t.empty()) throw std::invalid_argument("label_of_subset: empty subset");
  std::vector<bool> seen(static_cast<size_t>(n + 1), false);
  for (int v : t) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<size_t>(a)])
      throw std::invalid_argument("label_of_subset: malformed subset of [+-n]");
    seen[static_cast<size_t>(a)] = true;
  }
  const int m = static_cast<int>(t.size());

  // T = [m]?
  bool initial = true;
  for (int v = 1; v <= m && initial; ++v)
    initial = std::find(t.begin(), t.end(), v) != t.end();
  if (initial) return VertexLabel::b_class(m);

  // T = [m-1] + {x} with x in {-m, +-(m+1), ..., +-n}?
  bool prefix = true;
  for (int v = 1; v <= m - 1 && prefix; ++v)
    prefix = std::find(t.begin(), t.end(), v) != t.end();
  if (prefix) {
    int extra = 0;
    for (int v : t)
      if (!(v >= 1 && v <= m - 1)) { extra = v; break; }
    if (extra == -m || std::abs(extra) >= m + 1) return VertexLabel::a_class(m);
  }
  return VertexLabel::opaque(t);
}

FormalChain apartment_chain_symbolic(int n) {
  check_symbolic_rank(n);
  FormalChain chain;
  for (const auto& sigma : all_elements(n))
    chain.add(symbolic_chamber(n, sigma), Int(sigma.length_parity()));
  return chain;
}

GoodBadSplit split_good_bad(int n) {
  check_symbolic_rank(n);
  GoodBadSplit out;
  for (const auto& sigma : all_elements(n)) {
    Chamber chamber = symbolic_chamber(n, sigma);
    if (is_good(sigma)) {
      out.good.add(chamber, Int(sigma.length_parity()));
      ++out.good_count;
    } else {
      out.bad.add(chamber, Int(sigma.length_parity()));
      ++out.bad_count;
    }
  }
  return out;
}

FormalChain instantiate(const FormalChain& chain, const FiniteAbelianGroup& group,
                        const std::vector<std::pair<GroupElement, GroupElement>>& ab,
                        const std::function<GroupElement(const std::vector<int>&)>& opaque) {
  for (const auto& [a, b] : ab)
    if (a == b) throw std::invalid_argument("instantiate: a_i and b_i must differ");
  FormalChain out;
  for (const auto& [chamber, coeff] : chain.terms()) {
    Chamber image;
    image.reserve(chamber.size());
    for (const VertexLabel& l : chamber) {
      switch (l.kind()) {
        case VertexLabel::Kind::BClass: {
          size_t i = static_cast<size_t>(l.index());
          if (i > ab.size()) throw std::invalid_argument("instantiate: BClass index out of range");
          image.push_back(VertexLabel::concrete(l.index(), ab[i - 1].second));
          break;
        }
        case VertexLabel::Kind::AClass: {
          size_t i = static_cast<size_t>(l.index());
          if (i > ab.size()) throw std::invalid_argument("instantiate: AClass index out of range");
          image.push_back(VertexLabel::concrete(l.index(), ab[i - 1].first));
          break;
        }
        case VertexLabel::Kind::Opaque: {
          if (!opaque) throw std::invalid_argument("instantiate: opaque label but no assignment");
          GroupElement g = opaque(l.subset());
          if (g.coords().size() != group.num_factors())
            throw std::invalid_argument("instantiate: opaque value outside the group");
          image.push_back(
              VertexLabel::concrete(static_cast<int>(l.subset().size()), std::move(g)));
          break;
        }
        case VertexLabel::Kind::Concrete:
          image.push_back(l);
          break;
      }
    }
    out.add(image, coeff);
  }
  return out;
}

FormalChain integral_image(int n, const FiniteAbelianGroup& group,
                           const std::vector<GroupElement>& c_pos,
                           const std::vector<GroupElement>& c_neg) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  if (n > kMaxSymbolicRank)
    throw std::domain_error("integral_image: rank cap exceeded");
  if (static_cast<int>(c_pos.size()) != n || static_cast<int>(c_neg.size()) != n)
    throw std::invalid_argument("integral_image: need classes for all of [+-n]");
  for (int j = 1; j <= n; ++j)
    if (c_neg[static_cast<size_t>(j - 1)] != group.neg(c_pos[static_cast<size_t>(j - 1)]))
      throw std::invalid_argument("integral_image: constraint c_{-j} = -c_j violated");

  auto class_of = [&](int s) {
    return s > 0 ? c_pos[static_cast<size_t>(s - 1)] : c_neg[static_cast<size_t>(-s - 1)];
  };

  FormalChain chain;
  for (const auto& sigma : all_elements(n)) {
    Chamber chamber;
    GroupElement partial = group.zero();
    for (int m = 1; m <= n; ++m) {
      partial = group.add(partial, class_of(sigma.apply(m)));
      chamber.push_back(VertexLabel::concrete(m, partial));
    }
    chain.add(chamber, Int(sigma.length_parity()));
  }
  return chain;
}

IntegralImageCount count_integral_images(int n, const FiniteAbelianGroup& group) {
  if (n < 2) throw std::invalid_argument("count_integral_images: requires n >= 2");
  if (group.order() < Int(2))
    throw std::invalid_argument("count_integral_images: requires |G| >= 2");
  if (n > kMaxSymbolicRank)
    throw std::domain_error("count_integral_images: rank cap exceeded");

  std::vector<GroupElement> elems = group.elements();
  std::set<FormalChain> images;
  std::vector<size_t> pick(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<GroupElement> c_pos, c_neg;
    for (int i = 0; i < n; ++i) {
      c_pos.push_back(elems[pick[static_cast<size_t>(i)]]);
      c_neg.push_back(group.neg(c_pos.back()));
    }
    FormalChain image = integral_image(n, group, c_pos, c_neg);
    if (!image.is_zero()) images.insert(image.sign_normalized());

    size_t i = pick.size();
    bool carried = true;
    while (i > 0 && carried) {
      --i;
      if (++pick[i] < elems.size()) carried = false;
      else pick[i] = 0;
    }
    if (carried) break;
  }

  IntegralImageCount out{Int(static_cast<long long>(images.size())),
                         binomial(group.order() / Int(2), static_cast<unsigned>(n)),
                         pow(group.order() - Int(1), static_cast<unsigned>(n))};
  if (!(out.distinct_nonzero <= out.kappa_binomial && out.kappa_binomial < out.wedge_rank))
    throw std::logic_error("count_integral_images: counting bound violated");
  return out;
}

}  // namespace sympcoh
