#include "sympcoh/quadratic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sympcoh/hermite.hpp"
#include "sympcoh/smith.hpp"

namespace sympcoh {

namespace {

long long mod4(long long d) { return ((d % 4) + 4) % 4; }

bool squarefree(long long v) {
  if (v < 0) v = -v;
  if (v == 0) return false;
  for (long long p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    v /= p;
    if (v % p == 0) return false;
  }
  return true;
}

int trace_of(long long disc) { return mod4(disc) == 1 ? 1 : 0; }

Int norm_of_omega(long long disc) {
  int t = trace_of(disc);
  return Int((static_cast<long long>(t) * t - disc) / 4);
}

}  // namespace

QuadraticOrder::QuadraticOrder(long long disc) : disc_(disc) {
  if (!is_fundamental(disc))
    throw std::invalid_argument("not a fundamental negative discriminant: " +
                                std::to_string(disc));
  trace_ = trace_of(disc);
  norm_ = norm_of_omega(disc);
}

bool QuadraticOrder::is_fundamental(long long disc) {
  if (disc >= 0) return false;
  long long r = mod4(disc);
  if (r == 1) return squarefree(disc);
  if (r == 0) {
    long long m = disc / 4;
    long long mr = mod4(m);
    return (mr == 2 || mr == 3) && squarefree(m);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Field elements

Fe::Fe(Rat x, Rat y, long long disc) : x_(std::move(x)), y_(std::move(y)), disc_(disc) {
  if (disc_ == 0) {
    if (!y_.is_zero()) throw std::invalid_argument("Fe: rational element with nonzero w0 part");
  } else if (mod4(disc_) > 1) {
    throw std::invalid_argument("Fe: discriminant must be 0 or 1 mod 4");
  }
  if (y_.is_zero()) disc_ = 0;  // canonical: rationals carry no field tag
}

long long Fe::merge_disc(long long a, long long b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if (a != b) throw std::invalid_argument("Fe: mixing elements of different fields");
  return a;
}

Fe Fe::conj() const {
  if (disc_ == 0) return *this;
  return Fe(x_ + Rat(Int(trace_of(disc_))) * y_, -y_, disc_);
}

Rat Fe::norm() const {
  if (disc_ == 0) return x_ * x_;
  return x_ * x_ + Rat(Int(trace_of(disc_))) * x_ * y_ + Rat(norm_of_omega(disc_)) * y_ * y_;
}

Rat Fe::trace() const { return Rat(2) * x_ + Rat(Int(disc_ ? trace_of(disc_) : 0)) * y_; }

Fe Fe::inverse() const {
  if (is_zero()) throw std::domain_error("Fe: division by zero");
  Fe c = conj();
  Rat n = norm();
  return Fe(c.x() / n, c.y() / n, disc_);
}

Fe operator+(const Fe& a, const Fe& b) {
  return Fe(a.x_ + b.x_, a.y_ + b.y_, Fe::merge_disc(a.disc_, b.disc_));
}

Fe operator-(const Fe& a, const Fe& b) {
  return Fe(a.x_ - b.x_, a.y_ - b.y_, Fe::merge_disc(a.disc_, b.disc_));
}

Fe operator*(const Fe& a, const Fe& b) {
  long long d = Fe::merge_disc(a.disc_, b.disc_);
  if (d == 0) return Fe(a.x_ * b.x_);
  Rat t(Int(trace_of(d)));
  Rat nm(norm_of_omega(d));
  // (x1 + y1 w)(x2 + y2 w) with w^2 = t*w - nm
  return Fe(a.x_ * b.x_ - nm * a.y_ * b.y_,
            a.x_ * b.y_ + a.y_ * b.x_ + t * a.y_ * b.y_, d);
}

Fe operator/(const Fe& a, const Fe& b) { return a * b.inverse(); }

bool operator==(const Fe& a, const Fe& b) {
  if (a.x_ != b.x_ || a.y_ != b.y_) return false;
  return a.y_.is_zero() || a.disc_ == b.disc_;
}

std::string Fe::str() const {
  if (y_.is_zero()) return x_.str();
  return x_.str() + "+" + y_.str() + "w";
}

// ---------------------------------------------------------------------------
// Binary quadratic forms

QuadForm::QuadForm(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ <= Int(0) || disc() >= Int(0))
    throw std::invalid_argument("QuadForm: expected a positive definite form");
}

bool QuadForm::is_reduced() const {
  if (abs(b_) > a_ || a_ > c_) return false;
  if ((abs(b_) == a_ || a_ == c_) && b_.is_negative()) return false;
  return true;
}

QuadForm QuadForm::reduced() const {
  Int a = a_, b = b_, c = c_;
  Int d = disc();
  while (true) {
    // normalize b into (-a, a]
    Int r = mod_floor(b, Int(2) * a);
    if (r > a) r -= Int(2) * a;
    b = r;
    c = div_exact(b * b - d, Int(4) * a);
    if (a > c) {
      std::swap(a, c);
      b = -b;
      continue;
    }
    break;
  }
  if (a == c && b.is_negative()) b = -b;
  return QuadForm(a, b, c);
}

bool QuadForm::operator==(const QuadForm& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

bool QuadForm::operator<(const QuadForm& o) const {
  if (a_ != o.a_) return a_ < o.a_;
  if (b_ != o.b_) return b_ < o.b_;
  return c_ < o.c_;
}

std::string QuadForm::str() const {
  return "(" + a_.str() + "," + b_.str() + "," + c_.str() + ")";
}

std::vector<QuadForm> reduced_forms(long long disc) {
  if (!QuadraticOrder::is_fundamental(disc))
    throw std::invalid_argument("reduced_forms: not a fundamental negative discriminant");
  std::vector<QuadForm> out;
  for (long long a = 1; 3 * a * a <= -disc; ++a) {
    for (long long b = -a + 1; b <= a; ++b) {
      if (mod4(b * b - disc) % 2 != 0) continue;  // parity: b == disc mod 2
      long long num = b * b - disc;
      if (num % (4 * a)) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      out.emplace_back(Int(a), Int(b), Int(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Fractional ideals

FracIdeal::FracIdeal(long long disc, Int den, Int a, Int b, Int c)
    : disc_(disc), den_(std::move(den)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (den_ <= Int(0) || a_ <= Int(0) || c_ <= Int(0))
    throw std::invalid_argument("FracIdeal: malformed Hermite data");
  if (!(a_ % c_).is_zero() || !(b_ % c_).is_zero())
    throw std::invalid_argument("FracIdeal: lattice is not w0-stable (content)");
  Int t(trace_of(disc));
  Int nm = norm_of_omega(disc);
  Int n_second = b_ * b_ + t * b_ * c_ + nm * c_ * c_;
  if (!(n_second % (a_ * c_)).is_zero())
    throw std::invalid_argument("FracIdeal: lattice is not w0-stable (norm)");
  if (b_ < Int(0) || b_ >= a_) throw std::invalid_argument("FracIdeal: b not reduced");
  // normalize common content against the denominator
  Int g = gcd(gcd(a_, b_), gcd(c_, den_));
  g = gcd(g, den_);
  if (g > Int(1)) {
    a_ = div_exact(a_, g);
    b_ = div_exact(b_, g);
    c_ = div_exact(c_, g);
    den_ = div_exact(den_, g);
  }
}

FracIdeal FracIdeal::unit_ideal(const QuadraticOrder& order) {
  return FracIdeal(order.disc(), Int(1), Int(1), Int(0), Int(1));
}

FracIdeal FracIdeal::from_rows(long long disc, const QMat& rows) {
  if (rows.cols() != 2) throw std::invalid_argument("FracIdeal::from_rows: need 2 columns");
  auto [num, den] = clear_denominators(rows);
  // Hermite-reduce with the w0 coefficient as the leading column, so the
  // echelon basis is (b + c*w0, a).
  IMat swapped(num.rows(), 2);
  swapped.col(0) = num.col(1);
  swapped.col(1) = num.col(0);
  HermiteForm f = hermite_normal_form(std::move(swapped));
  if (f.rank != 2) throw std::invalid_argument("FracIdeal::from_rows: rank < 2");
  return FracIdeal(disc, den, f.h(1, 1), f.h(0, 1), f.h(0, 0));
}

FracIdeal FracIdeal::from_generators(long long disc, const std::vector<Fe>& gens) {
  QMat rows(2 * static_cast<Index>(gens.size()), 2);
  Fe w = Fe::omega(disc);
  Index r = 0;
  for (const Fe& g : gens) {
    if (!g.is_rational() && g.disc() != disc)
      throw std::invalid_argument("from_generators: element of a different field");
    Fe gw = g * w;
    rows(r, 0) = g.x();
    rows(r, 1) = g.y();
    rows(r + 1, 0) = gw.x();
    rows(r + 1, 1) = gw.y();
    r += 2;
  }
  return from_rows(disc, rows);
}

std::vector<Fe> FracIdeal::z_basis() const {
  Rat d(Int(1), den_);
  return {Fe(Rat(a_) * d, Rat(0), disc_), Fe(Rat(b_) * d, Rat(c_) * d, disc_)};
}

Rat FracIdeal::norm() const { return Rat(a_ * c_, den_ * den_); }

bool FracIdeal::contains(const Fe& e) const {
  if (!e.is_rational() && e.disc() != disc_) return false;
  // e = (x + y*w0); need den*e in Z*a + Z*(b + c*w0)
  Rat x = Rat(den_) * e.x();
  Rat y = Rat(den_) * e.y();
  Rat beta = y / Rat(c_);
  if (!beta.is_integer()) return false;
  Rat alpha = (x - beta * Rat(b_)) / Rat(a_);
  return alpha.is_integer();
}

FracIdeal FracIdeal::mul(const FracIdeal& other) const {
  if (disc_ != other.disc_) throw std::invalid_argument("ideal_mul: order mismatch");
  std::vector<Fe> gens;
  for (const Fe& u : z_basis())
    for (const Fe& v : other.z_basis()) gens.push_back(u * v);
  return from_generators(disc_, gens);
}

FracIdeal FracIdeal::conjugate() const {
  QMat rows(2, 2);
  auto basis = z_basis();
  for (Index i = 0; i < 2; ++i) {
    Fe c = basis[static_cast<size_t>(i)].conj();
    rows(i, 0) = c.x();
    rows(i, 1) = c.y();
  }
  return from_rows(disc_, rows);
}

FracIdeal FracIdeal::inverse() const { return conjugate().scaled(Rat(1) / norm()); }

FracIdeal FracIdeal::scaled(const Rat& r) const {
  if (r.is_zero()) throw std::invalid_argument("FracIdeal::scaled: zero scalar");
  Rat s = abs(r);
  Int num = s.num(), den = s.den();
  return FracIdeal(disc_, den_ * den, a_ * num, b_ * num, c_ * num);
}

QuadForm FracIdeal::norm_form() const {
  // primitive part: divide the Hermite basis by its content c
  Int ap = div_exact(a_, c_);
  Int bp = div_exact(b_, c_);
  Int t(trace_of(disc_));
  Int nm = norm_of_omega(disc_);
  Int cp = div_exact(bp * bp + t * bp + nm, ap);
  return QuadForm(ap, Int(2) * bp + t, cp).reduced();
}

bool FracIdeal::operator==(const FracIdeal& o) const {
  return disc_ == o.disc_ && den_ == o.den_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

std::string FracIdeal::str() const {
  return "(1/" + den_.str() + ")[" + a_.str() + ", " + b_.str() + "+" + c_.str() + "w]";
}

nlohmann::json FracIdeal::to_json() const {
  return {{"disc", disc_},
          {"d", den_.to_long_long()},
          {"a", a_.to_long_long()},
          {"b", b_.to_long_long()},
          {"c", c_.to_long_long()}};
}

// ---------------------------------------------------------------------------
// Class groups

ClassGroup::ClassGroup(long long disc) : order_(disc), group_() {
  forms_ = reduced_forms(disc);
  const size_t h = forms_.size();

  // One ideal representative per reduced form: build the ideal attached to
  // the form and flip to the conjugate when orientation lands on the inverse
  // class.
  Int t(order_.omega_trace());
  reps_.reserve(h);
  for (const QuadForm& f : forms_) {
    Int beta = mod_floor(div_exact(-(f.b() + t), Int(2)), f.a());
    FracIdeal ideal = FracIdeal::from_rows(
        disc, [&] {
          QMat rows(2, 2);
          rows(0, 0) = Rat(f.a());
          rows(0, 1) = Rat(0);
          rows(1, 0) = Rat(beta);
          rows(1, 1) = Rat(1);
          return rows;
        }());
    if (!(ideal.norm_form() == f)) ideal = ideal.conjugate();
    if (!(ideal.norm_form() == f))
      throw std::logic_error("ClassGroup: cannot realize form " + f.str());
    reps_.push_back(std::move(ideal));
  }

  // Invariant factors from the relation lattice of the multiplication table.
  IMat relations = IMat::Zero(static_cast<Index>(h * h + 1), static_cast<Index>(h));
  Index row = 0;
  for (size_t i = 0; i < h; ++i)
    for (size_t j = 0; j < h; ++j) {
      size_t k = index_of_form(reps_[i].mul(reps_[j]).norm_form());
      relations(row, static_cast<Index>(i)) += Int(1);
      relations(row, static_cast<Index>(j)) += Int(1);
      relations(row, static_cast<Index>(k)) -= Int(1);
      ++row;
    }
  size_t id = index_of_form(FracIdeal::unit_ideal(order_).norm_form());
  relations(row, static_cast<Index>(id)) = Int(1);

  SmithForm snf = smith_normal_form(std::move(relations), /*with_right_transform=*/true);
  if (static_cast<size_t>(snf.rank()) != h)
    throw std::logic_error("ClassGroup: relation lattice is not of full rank");

  std::vector<Int> factors;
  std::vector<Index> cols;
  for (Index k = 0; k < snf.rank(); ++k)
    if (snf.invariants[static_cast<size_t>(k)] > Int(1)) {
      factors.push_back(snf.invariants[static_cast<size_t>(k)]);
      cols.push_back(k);
    }
  group_ = FiniteAbelianGroup(std::move(factors));

  coords_.reserve(h);
  for (size_t i = 0; i < h; ++i) {
    std::vector<Int> c;
    c.reserve(cols.size());
    for (Index k : cols) c.push_back(snf.v(static_cast<Index>(i), k));
    coords_.push_back(group_.element(std::move(c)));
  }
}

const ClassGroup& ClassGroup::of(long long disc) {
  static std::mutex mtx;
  static std::map<long long, std::unique_ptr<ClassGroup>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(disc);
  if (it == cache.end())
    it = cache.emplace(disc, std::unique_ptr<ClassGroup>(new ClassGroup(disc))).first;
  return *it->second;
}

size_t ClassGroup::index_of_form(const QuadForm& reduced) const {
  auto it = std::lower_bound(forms_.begin(), forms_.end(), reduced);
  if (it == forms_.end() || !(*it == reduced))
    throw std::invalid_argument("form of the wrong discriminant: " + reduced.str());
  return static_cast<size_t>(it - forms_.begin());
}

const GroupElement& ClassGroup::coords_of(size_t form_index) const {
  return coords_.at(form_index);
}

size_t ClassGroup::index_of_class(const GroupElement& g) const {
  for (size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] == g) return i;
  throw std::invalid_argument("no class with the given coordinates");
}

GroupElement ClassGroup::class_of(const FracIdeal& ideal) const {
  if (ideal.disc() != order_.disc())
    throw std::invalid_argument("class_of: ideal of a different order");
  return coords_of(index_of_form(ideal.norm_form()));
}

const FracIdeal& ClassGroup::representative_of(const GroupElement& g) const {
  return reps_.at(index_of_class(g));
}

std::vector<FracIdeal> ideals_of_norm_up_to(const QuadraticOrder& order, const Int& bound) {
  std::vector<FracIdeal> out;
  Int t(order.omega_trace());
  Int nm = order.omega_norm();
  for (Int c(1); c * c <= bound; c += Int(1)) {
    for (Int a(1); c * c * a <= bound; a += Int(1)) {
      for (Int beta(0); beta < a; beta += Int(1)) {
        if (!((beta * beta + t * beta + nm) % a).is_zero()) continue;
        out.emplace_back(FracIdeal::from_rows(order.disc(), [&] {
          QMat rows(2, 2);
          rows(0, 0) = Rat(c * a);
          rows(0, 1) = Rat(0);
          rows(1, 0) = Rat(c * beta);
          rows(1, 1) = Rat(c);
          return rows;
        }()));
      }
    }
  }
  return out;
}

}  // namespace sympcoh
