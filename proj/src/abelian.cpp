#include "sympcoh/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace sympcoh {

bool GroupElement::is_zero() const {
  for (const Int& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

std::string GroupElement::str() const {
  if (coords_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += coords_[i].str();
  }
  return s;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> factors)
    : factors_(std::move(factors)) {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < Int(2))
      throw std::invalid_argument("invariant factors must be >= 2");
    if (i > 0 && !(factors_[i] % factors_[i - 1]).is_zero())
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(const Int& m) {
  if (m < Int(1)) throw std::invalid_argument("cyclic group order must be >= 1");
  if (m.is_one()) return FiniteAbelianGroup();
  return FiniteAbelianGroup({m});
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& csv) {
  std::vector<Int> factors;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) factors.emplace_back(tok);
  if (factors.size() == 1 && factors[0].is_one()) return FiniteAbelianGroup();
  return FiniteAbelianGroup(std::move(factors));
}

Int FiniteAbelianGroup::order() const {
  Int n(1);
  for (const Int& f : factors_) n *= f;
  return n;
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement(std::vector<Int>(factors_.size(), Int(0)));
}

GroupElement FiniteAbelianGroup::element(std::vector<Int> coords) const {
  if (coords.size() != factors_.size())
    throw std::invalid_argument("coordinate count does not match group");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], factors_[i]);
  return GroupElement(std::move(coords));
}

void FiniteAbelianGroup::check_element(const GroupElement& a) const {
  if (a.coords().size() != factors_.size())
    throw std::invalid_argument("element does not belong to this group");
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<Int> c(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i)
    c[i] = mod_floor(a.coords()[i] + b.coords()[i], factors_[i]);
  return GroupElement(std::move(c));
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  check_element(a);
  std::vector<Int> c(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) c[i] = mod_floor(-a.coords()[i], factors_[i]);
  return GroupElement(std::move(c));
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  Int n = order();
  if (n > Int(100000))
    throw std::domain_error("refusing to enumerate a group of order " + n.str());
  std::vector<Int> coords(factors_.size(), Int(0));
  while (true) {
    out.push_back(GroupElement(coords));
    size_t i = factors_.size();
    while (i > 0) {
      --i;
      coords[i] += Int(1);
      if (coords[i] < factors_[i]) break;
      coords[i] = Int(0);
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

std::string FiniteAbelianGroup::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ',';
    s += factors_[i].str();
  }
  return s;
}

}  // namespace sympcoh
