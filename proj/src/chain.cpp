#include "sympcoh/chain.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace sympcoh {

VertexLabel VertexLabel::b_class(int i) {
  if (i < 1) throw std::invalid_argument("BClass index must be >= 1");
  VertexLabel l;
  l.kind_ = Kind::BClass;
  l.index_ = i;
  return l;
}

VertexLabel VertexLabel::a_class(int i) {
  if (i < 1) throw std::invalid_argument("AClass index must be >= 1");
  VertexLabel l;
  l.kind_ = Kind::AClass;
  l.index_ = i;
  return l;
}

VertexLabel VertexLabel::opaque(std::vector<int> subset) {
  std::sort(subset.begin(), subset.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] == 0) throw std::invalid_argument("opaque subset contains 0");
    if (i > 0 && std::abs(subset[i]) == std::abs(subset[i - 1]))
      throw std::invalid_argument("opaque subset contains both +i and -i");
  }
  VertexLabel l;
  l.kind_ = Kind::Opaque;
  l.subset_ = std::move(subset);
  return l;
}

VertexLabel VertexLabel::concrete(int rank, GroupElement value) {
  if (rank < 1) throw std::invalid_argument("concrete rank must be >= 1");
  VertexLabel l;
  l.kind_ = Kind::Concrete;
  l.index_ = rank;
  l.value_ = std::move(value);
  return l;
}

std::string VertexLabel::str() const {
  switch (kind_) {
    case Kind::BClass:
      return "B" + std::to_string(index_);
    case Kind::AClass:
      return "A" + std::to_string(index_);
    case Kind::Opaque: {
      std::string s = "O{";
      for (size_t i = 0; i < subset_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(subset_[i]);
      }
      return s + "}";
    }
    case Kind::Concrete:
      return "C(" + std::to_string(index_) + "," + value_.str() + ")";
  }
  return {};
}

bool VertexLabel::operator==(const VertexLabel& o) const {
  return kind_ == o.kind_ && index_ == o.index_ && subset_ == o.subset_ &&
         value_ == o.value_;
}

bool VertexLabel::operator<(const VertexLabel& o) const {
  return std::tie(kind_, index_, subset_, value_) <
         std::tie(o.kind_, o.index_, o.subset_, o.value_);
}

std::string chamber_str(const Chamber& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += c[i].str();
  }
  return s + ")";
}

void FormalChain::add(const Chamber& chamber, const Int& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(chamber, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FormalChain::add(const FormalChain& other) {
  for (const auto& [chamber, coeff] : other.terms_) add(chamber, coeff);
}

void FormalChain::subtract(const FormalChain& other) {
  for (const auto& [chamber, coeff] : other.terms_) add(chamber, -coeff);
}

FormalChain FormalChain::negated() const {
  FormalChain out;
  for (const auto& [chamber, coeff] : terms_) out.terms_.emplace(chamber, -coeff);
  return out;
}

Int FormalChain::coeff(const Chamber& chamber) const {
  auto it = terms_.find(chamber);
  return it == terms_.end() ? Int(0) : it->second;
}

FormalChain FormalChain::sign_normalized() const {
  if (terms_.empty()) return *this;
  return terms_.begin()->second.is_negative() ? negated() : *this;
}

bool FormalChain::operator<(const FormalChain& o) const {
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
      });
}

nlohmann::json FormalChain::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [chamber, coeff] : terms_) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : chamber) labels.push_back(l.str());
    arr.push_back({{"coefficient", coeff.to_long_long()}, {"chamber", labels}});
  }
  return arr;
}

FormalChain operator+(FormalChain a, const FormalChain& b) {
  a.add(b);
  return a;
}

FormalChain operator-(FormalChain a, const FormalChain& b) {
  a.subtract(b);
  return a;
}

}  // namespace sympcoh
