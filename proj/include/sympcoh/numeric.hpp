#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace sympcoh {

/// Arbitrary-precision integer. Thin value wrapper around
/// boost::multiprecision::cpp_int with a plain (non-template) interface so it
/// can serve as an Eigen scalar.
class Int {
public:
  using rep = boost::multiprecision::cpp_int;

  Int() = default;
  Int(int v) : v_(v) {}
  Int(long v) : v_(v) {}
  Int(long long v) : v_(v) {}
  Int(unsigned long long v) : v_(v) {}
  explicit Int(rep v) : v_(std::move(v)) {}
  explicit Int(const std::string& s) : v_(s) {}

  const rep& raw() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return v_ < 0; }
  bool is_odd() const { return boost::multiprecision::bit_test(abs_rep(), 0); }
  bool is_even() const { return !is_odd(); }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Int operator-() const { return Int(rep(-v_)); }
  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  /// Truncated division (rounds toward zero), like built-in integers.
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }
  friend Int operator/(Int a, const Int& b) { return a /= b; }
  friend Int operator%(Int a, const Int& b) { return a %= b; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& a);

  std::string str() const { return v_.str(); }

  long long to_long_long() const {
    if (v_ < std::numeric_limits<long long>::min() ||
        v_ > std::numeric_limits<long long>::max())
      throw std::overflow_error("Int does not fit in long long: " + str());
    return v_.convert_to<long long>();
  }

private:
  rep abs_rep() const { return v_ < 0 ? rep(-v_) : v_; }
  rep v_{};
};

inline Int abs(const Int& a) { return a.is_negative() ? -a : a; }

inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.raw(), b.raw()));
}

inline Int lcm(const Int& a, const Int& b) {
  return Int(boost::multiprecision::lcm(a.raw(), b.raw()));
}

/// Floor division: largest q with q*b <= a (for b > 0).
inline Int div_floor(const Int& a, const Int& b) {
  Int q = a / b;
  if (!(a % b).is_zero() && ((a.is_negative()) != (b.is_negative()))) q -= Int(1);
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - div_floor(a, b) * b; }

/// Division rounded to the nearest integer. Used to keep remainders small
/// (|r| <= |b|/2) during Hermite/Smith elimination.
inline Int div_round(const Int& a, const Int& b) {
  Int bb = b.is_negative() ? -b : b;
  Int aa = b.is_negative() ? -a : a;
  return div_floor(Int(2) * aa + bb, Int(2) * bb);
}

/// Exact quotient; throws if b does not divide a.
inline Int div_exact(const Int& a, const Int& b) {
  if (!(a % b).is_zero())
    throw std::domain_error("div_exact: " + b.str() + " does not divide " + a.str());
  return a / b;
}

inline Int pow(const Int& a, unsigned e) {
  return Int(boost::multiprecision::pow(a.raw(), e));
}

inline Int binomial(const Int& n, unsigned k) {
  if (n < Int(static_cast<long long>(k))) return Int(0);
  Int num(1), den(1);
  for (unsigned i = 0; i < k; ++i) {
    num *= n - Int(static_cast<long long>(i));
    den *= Int(static_cast<long long>(i + 1));
  }
  return div_exact(num, den);
}

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
class Rat {
public:
  using rep = boost::multiprecision::cpp_rational;

  Rat() = default;
  Rat(int v) : v_(v) {}
  Rat(long long v) : v_(v) {}
  Rat(const Int& v) : v_(v.raw()) {}
  Rat(const Int& num, const Int& den) : v_(num.raw(), den.raw()) {
    if (den.is_zero()) throw std::domain_error("Rat: zero denominator");
  }
  explicit Rat(rep v) : v_(std::move(v)) {}

  const rep& raw() const { return v_; }

  Int num() const { return Int(boost::multiprecision::numerator(v_)); }
  Int den() const { return Int(boost::multiprecision::denominator(v_)); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  Rat operator-() const { return Rat(rep(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    std::string s = num().str();
    if (!is_integer()) s += "/" + den().str();
    return s;
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  }

private:
  rep v_{};
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Int& a);
std::ostream& operator<<(std::ostream& os, const Rat& a);

}  // namespace sympcoh

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<sympcoh::Int> {
  using Real = sympcoh::Int;
  using NonInteger = sympcoh::Rat;
  using Literal = long long;
  using Nested = sympcoh::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<sympcoh::Rat> {
  using Real = sympcoh::Rat;
  using NonInteger = sympcoh::Rat;
  using Literal = long long;
  using Nested = sympcoh::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace sympcoh {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IMat = Mat<Int>;
using IVec = Vec<Int>;
using IRow = RowVec<Int>;
using QMat = Mat<Rat>;
using QRow = RowVec<Rat>;

using Index = Eigen::Index;

inline QMat to_rational(const IMat& a) {
  QMat q(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) q(i, j) = Rat(a(i, j));
  return q;
}

/// Splits a rational matrix as num/den with den > 0 the least common
/// denominator of all entries.
inline std::pair<IMat, Int> clear_denominators(const QMat& a) {
  Int den(1);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) den = lcm(den, a(i, j).den());
  IMat num(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      num(i, j) = a(i, j).num() * div_exact(den, a(i, j).den());
  return {std::move(num), den};
}

inline Int content(const IMat& a) {
  Int g(0);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) g = gcd(g, a(i, j));
  return g;
}

/// Entrywise exact equality (Eigen's operator== is coefficient-wise).
template <class D1, class D2>
bool exact_equal(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class D>
bool exact_zero(const Eigen::MatrixBase<D>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

}  // namespace sympcoh
