#include "sympcoh/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sympcoh {

namespace {

void check_rank_index(int n, int i) {
  if (n < 1) throw std::invalid_argument("signed permutation rank must be >= 1");
  if (i < 1 || i > n) throw std::out_of_range("simple reflection index out of range");
}

}  // namespace

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("signed permutation rank must be >= 1");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::simple(int n, int i) {
  check_rank_index(n, i);
  SignedPermutation s = identity(n);
  if (i < n)
    std::swap(s.window_[static_cast<size_t>(i - 1)], s.window_[static_cast<size_t>(i)]);
  else
    s.window_[static_cast<size_t>(n - 1)] = -n;
  return s;
}

SignedPermutation SignedPermutation::from_window(std::vector<int> window) {
  const int n = static_cast<int>(window.size());
  if (n < 1) throw std::invalid_argument("empty window");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : window) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<size_t>(a - 1)])
      throw std::invalid_argument("window is not a signed permutation");
    seen[static_cast<size_t>(a - 1)] = true;
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation SignedPermutation::parse(const std::string& csv) {
  std::vector<int> w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size() && tok.find_first_not_of(" \t", pos) != std::string::npos)
      throw std::invalid_argument("bad window entry: " + tok);
    w.push_back(v);
  }
  return from_window(std::move(w));
}

int SignedPermutation::apply(int i) const {
  const int n = rank();
  if (i == 0 || std::abs(i) > n) throw std::out_of_range("argument not in [+-n]");
  return i > 0 ? window_[static_cast<size_t>(i - 1)] : -window_[static_cast<size_t>(-i - 1)];
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> w(window_.size());
  for (int i = 1; i <= rank(); ++i) w[static_cast<size_t>(i - 1)] = apply(other.apply(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(window_.size());
  for (int i = 1; i <= rank(); ++i) {
    int v = window_[static_cast<size_t>(i - 1)];
    w[static_cast<size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(w));
}

int SignedPermutation::length_parity() const {
  int parity = 1;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (window_[static_cast<size_t>(i)] < 0) parity = -parity;
    for (int j = i + 1; j < n; ++j)
      if (std::abs(window_[static_cast<size_t>(i)]) > std::abs(window_[static_cast<size_t>(j)]))
        parity = -parity;
  }
  return parity;
}

std::vector<int> SignedPermutation::image_of_prefix(int m) const {
  if (m < 0 || m > rank()) throw std::out_of_range("prefix length out of range");
  std::vector<int> t(window_.begin(), window_.begin() + m);
  std::sort(t.begin(), t.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
  return t;
}

std::string SignedPermutation::window_csv() const {
  std::string s;
  for (size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s;
}

std::vector<SignedPermutation> all_elements(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[static_cast<size_t>(i)] = -w[static_cast<size_t>(i)];
      out.push_back(SignedPermutation::from_window(std::move(w)));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

int cayley_length(const SignedPermutation& sigma) {
  const int n = sigma.rank();
  if (n > kMaxLengthRank)
    throw std::domain_error("cayley_length: rank exceeds enumeration bound");

  // One BFS table per rank, built on first use and read-only afterwards.
  static std::mutex mtx;
  static std::map<int, std::map<std::vector<int>, int>> tables;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = tables.find(n);
  if (it == tables.end()) {
    std::map<std::vector<int>, int> dist;
    std::vector<SignedPermutation> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(SignedPermutation::simple(n, i));
    std::deque<SignedPermutation> queue{SignedPermutation::identity(n)};
    dist[queue.front().window()] = 0;
    while (!queue.empty()) {
      SignedPermutation cur = queue.front();
      queue.pop_front();
      int d = dist[cur.window()];
      for (const auto& s : gens) {
        SignedPermutation next = cur.compose(s);
        if (dist.emplace(next.window(), d + 1).second) queue.push_back(next);
      }
    }
    it = tables.emplace(n, std::move(dist)).first;
  }
  return it->second.at(sigma.window());
}

Classification classify(const SignedPermutation& sigma) {
  const int n = sigma.rank();

  // Locate the smallest k in [2, n] with [k-1] not contained in sigma([k]).
  // Track prefix images incrementally: contained(v) until a failure.
  std::vector<bool> in_image(static_cast<size_t>(n + 1), false);
  auto prefix_contains = [&](int bound) {
    for (int v = 1; v <= bound; ++v)
      if (!in_image[static_cast<size_t>(v)]) return false;
    return true;
  };

  int k = 0;
  for (int i = 1; i <= n; ++i) {
    int v = sigma.apply(i);
    if (v > 0) in_image[static_cast<size_t>(v)] = true;
    if (i >= 2 && !prefix_contains(i - 1)) { k = i; break; }
  }

  if (k == 0) {
    // Good: bits from the criterion bits[i-1] = 0 iff sigma([i]) = [i].
    GoodCertificate cert;
    cert.bits.resize(static_cast<size_t>(n));
    std::vector<int> ident(static_cast<size_t>(n));
    std::iota(ident.begin(), ident.end(), 1);
    for (int i = 1; i <= n; ++i) {
      std::vector<int> img = sigma.image_of_prefix(i);
      bool is_initial = std::equal(img.begin(), img.end(), ident.begin());
      cert.bits[static_cast<size_t>(i - 1)] = is_initial ? 0 : 1;
    }
    return cert;
  }

  // Bad: j is the unique element of sigma([k-1]) \ [k-2].
  int j = 0;
  for (int i = 1; i <= k - 1; ++i) {
    int v = sigma.apply(i);
    if (!(v >= 1 && v <= k - 2)) { j = v; break; }
  }
  int sk = sigma.apply(k);

  std::vector<int> tw(static_cast<size_t>(n));
  std::iota(tw.begin(), tw.end(), 1);
  auto set_image = [&](int from, int to) {
    tw[static_cast<size_t>(std::abs(from) - 1)] = from > 0 ? to : -to;
  };
  set_image(j, sk);
  set_image(sk, j);
  SignedPermutation tau = SignedPermutation::from_window(std::move(tw));

  BadCertificate cert{k, j, tau, tau.compose(sigma)};
  return cert;
}

bool is_good(const SignedPermutation& sigma) {
  return std::holds_alternative<GoodCertificate>(classify(sigma));
}

}  // namespace sympcoh
