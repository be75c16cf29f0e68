#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sympcoh/abelian.hpp"
#include "sympcoh/numeric.hpp"

namespace sympcoh {

/// Maximal order of the imaginary quadratic field of fundamental discriminant
/// D < 0, with Z-basis (1, w0) where w0 = sqrt(D)/2 for D = 0 mod 4 and
/// w0 = (1 + sqrt(D))/2 for D = 1 mod 4. Then w0^2 = t*w0 - nm with
/// t = trace(w0) in {0, 1} and nm = norm(w0) = (t^2 - D)/4.
class QuadraticOrder {
public:
  explicit QuadraticOrder(long long disc);

  long long disc() const { return disc_; }
  int omega_trace() const { return trace_; }
  const Int& omega_norm() const { return norm_; }

  static bool is_fundamental(long long disc);

private:
  long long disc_;
  int trace_;
  Int norm_;
};

/// Element x + y*w0 of an imaginary quadratic field. A disc of 0 marks a
/// plain rational (y must be 0); mixing two genuine discriminants throws.
class Fe {
public:
  Fe() = default;
  Fe(int v) : x_(v) {}
  Fe(const Rat& x) : x_(x) {}
  Fe(Rat x, Rat y, long long disc);

  static Fe omega(long long disc) { return Fe(Rat(0), Rat(1), disc); }

  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }
  long long disc() const { return disc_; }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_rational() const { return y_.is_zero(); }

  Fe conj() const;
  Rat norm() const;   // x^2 + t*x*y + nm*y^2
  Rat trace() const;  // 2x + t*y
  Fe inverse() const;

  Fe operator-() const { return Fe(-x_, -y_, disc_); }
  friend Fe operator+(const Fe& a, const Fe& b);
  friend Fe operator-(const Fe& a, const Fe& b);
  friend Fe operator*(const Fe& a, const Fe& b);
  friend Fe operator/(const Fe& a, const Fe& b);
  Fe& operator+=(const Fe& o) { return *this = *this + o; }
  Fe& operator-=(const Fe& o) { return *this = *this - o; }
  Fe& operator*=(const Fe& o) { return *this = *this * o; }

  friend bool operator==(const Fe& a, const Fe& b);
  friend bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }

  std::string str() const;

private:
  static long long merge_disc(long long a, long long b);
  Rat x_{}, y_{};
  long long disc_ = 0;
};

/// Positive definite integral binary quadratic form a*x^2 + b*x*y + c*y^2.
class QuadForm {
public:
  QuadForm(Int a, Int b, Int c);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  Int disc() const { return b_ * b_ - Int(4) * a_ * c_; }

  bool is_reduced() const;
  /// The canonical reduced representative of the proper equivalence class.
  QuadForm reduced() const;

  bool operator==(const QuadForm& o) const;
  bool operator<(const QuadForm& o) const;
  std::string str() const;

private:
  Int a_, b_, c_;
};

/// All reduced forms of the given fundamental discriminant, sorted; their
/// count is the class number.
std::vector<QuadForm> reduced_forms(long long disc);

/// Fractional ideal of a quadratic order, stored as the lattice
/// (1/den) * (Z*a + Z*(b + c*w0)) in two-row Hermite form: a, c > 0,
/// 0 <= b < a, c | a, c | b and a*c | N(b + c*w0) (w0-stability).
class FracIdeal {
public:
  static FracIdeal unit_ideal(const QuadraticOrder& order);

  /// Lattice spanned by rows (x_i, y_i) meaning x_i + y_i*w0; must be
  /// w0-stable of full rank.
  static FracIdeal from_rows(long long disc, const QMat& rows);

  /// R-module generated by the given field elements.
  static FracIdeal from_generators(long long disc, const std::vector<Fe>& gens);

  long long disc() const { return disc_; }
  const Int& den() const { return den_; }
  const Int& coeff_a() const { return a_; }
  const Int& coeff_b() const { return b_; }
  const Int& coeff_c() const { return c_; }

  std::vector<Fe> z_basis() const;
  Rat norm() const;
  bool contains(const Fe& e) const;

  FracIdeal mul(const FracIdeal& other) const;
  FracIdeal conjugate() const;
  FracIdeal inverse() const;
  FracIdeal scaled(const Rat& r) const;

  /// Reduced form of N(x*u1 + y*u2)/N(I) on the oriented Hermite basis
  /// (u1, u2); the canonical label of the ideal class.
  QuadForm norm_form() const;

  bool operator==(const FracIdeal& o) const;
  std::string str() const;
  nlohmann::json to_json() const;

private:
  FracIdeal(long long disc, Int den, Int a, Int b, Int c);
  long long disc_;
  Int den_, a_, b_, c_;
};

/// Class group of a fundamental negative discriminant: the reduced forms as
/// canonical class labels, one ideal representative per class, and the
/// invariant-factor structure with coordinates per class. Computed once per
/// discriminant and cached.
class ClassGroup {
public:
  static const ClassGroup& of(long long disc);

  const QuadraticOrder& order() const { return order_; }
  Int class_number() const { return Int(static_cast<long long>(forms_.size())); }
  const std::vector<QuadForm>& forms() const { return forms_; }
  const std::vector<FracIdeal>& representatives() const { return reps_; }
  const FiniteAbelianGroup& group() const { return group_; }

  size_t index_of_form(const QuadForm& reduced) const;
  const GroupElement& coords_of(size_t form_index) const;
  size_t index_of_class(const GroupElement& g) const;

  GroupElement class_of(const FracIdeal& ideal) const;
  const FracIdeal& representative_of(const GroupElement& g) const;

private:
  explicit ClassGroup(long long disc);
  QuadraticOrder order_;
  std::vector<QuadForm> forms_;
  std::vector<FracIdeal> reps_;
  FiniteAbelianGroup group_;
  std::vector<GroupElement> coords_;
};

/// All integral ideals of norm <= bound (including the unit ideal).
std::vector<FracIdeal> ideals_of_norm_up_to(const QuadraticOrder& order, const Int& bound);

}  // namespace sympcoh
