#pragma once

#include <string>
#include <variant>
#include <vector>

namespace sympcoh {

/// Element of the group of signed permutations of rank n (the hyperoctahedral
/// group, Coxeter type C_n), in window notation: the stored window is
/// (sigma(1), ..., sigma(n)) and sigma(-i) = -sigma(i) is implied.
class SignedPermutation {
public:
  static SignedPermutation identity(int n);

  /// Simple reflection s_i: the adjacent transposition (i, i+1) for i < n,
  /// and the sign flip of the last coordinate for i == n.
  static SignedPermutation simple(int n, int i);

  /// Validates that the window's absolute values are a permutation of 1..n.
  static SignedPermutation from_window(std::vector<int> window);

  /// Parses comma-separated window notation, e.g. "2,-1".
  static SignedPermutation parse(const std::string& csv);

  int rank() const { return static_cast<int>(window_.size()); }

  /// sigma(i) for i in [+-n].
  int apply(int i) const;

  /// Composition with `other` applied first: (this*other)(i) = this(other(i)).
  SignedPermutation compose(const SignedPermutation& other) const;

  SignedPermutation inverse() const;

  /// (-1)^len(sigma), computed as the determinant of the signed permutation
  /// matrix: sign of the underlying permutation times (-1)^#{negative window
  /// entries}.
  int length_parity() const;

  /// The image sigma([m]) = {sigma(1), ..., sigma(m)} as a subset of [+-n],
  /// sorted by absolute value.
  std::vector<int> image_of_prefix(int m) const;

  const std::vector<int>& window() const { return window_; }
  std::string window_csv() const;

  bool operator==(const SignedPermutation& o) const { return window_ == o.window_; }
  bool operator!=(const SignedPermutation& o) const { return window_ != o.window_; }
  bool operator<(const SignedPermutation& o) const { return window_ < o.window_; }

private:
  explicit SignedPermutation(std::vector<int> w) : window_(std::move(w)) {}
  std::vector<int> window_;
};

/// All 2^n * n! elements of rank n, in a fixed deterministic order.
std::vector<SignedPermutation> all_elements(int n);

/// Word length with respect to {s_1, ..., s_n}, via breadth-first search over
/// the Cayley graph. Memoized once per rank; capped at rank <= 6.
int cayley_length(const SignedPermutation& sigma);

inline constexpr int kMaxLengthRank = 6;

/// Witness that sigma is good: sigma equals the subword of the Coxeter word
/// s_1 ... s_n selected by `bits`, with the letters applied in index order
/// (s_1 acts first). bits[i-1] == 0 if and only if sigma([i]) = [i].
struct GoodCertificate {
  std::vector<unsigned char> bits;
};

/// Witness that sigma is bad. k is minimal with [k-1] not contained in
/// sigma([k]); j is the unique element of sigma([k-1]) \ [k-2]; tau is the
/// reflection swapping +-j with +-sigma(k); partner = tau * sigma is the
/// cancellation partner iota(sigma).
struct BadCertificate {
  int k = 0;
  int j = 0;
  SignedPermutation tau;
  SignedPermutation partner;
};

using Classification = std::variant<GoodCertificate, BadCertificate>;

/// Good/bad dichotomy: sigma is good iff [i-1] is contained in sigma([i]) for
/// all 2 <= i <= n.
Classification classify(const SignedPermutation& sigma);

bool is_good(const SignedPermutation& sigma);

}  // namespace sympcoh
