#include "sympcoh/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "sympcoh/field_linalg.hpp"
#include "sympcoh/hermite.hpp"

namespace sympcoh {

// ---------------------------------------------------------------------------
// SymplecticSpace

SymplecticSpace::SymplecticSpace(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SymplecticSpace: n must be >= 1");
}

Index SymplecticSpace::position(int s, int n) {
  if (s == 0 || std::abs(s) > n) throw std::out_of_range("signed index not in [+-n]");
  return s > 0 ? static_cast<Index>(s - 1) : static_cast<Index>(2 * n + s);
}

int SymplecticSpace::signed_index(Index pos, int n) {
  if (pos < 0 || pos >= 2 * static_cast<Index>(n)) throw std::out_of_range("bad position");
  return pos < n ? static_cast<int>(pos + 1) : static_cast<int>(pos - 2 * n);
}

IMat SymplecticSpace::gram() const {
  IMat g = IMat::Zero(2 * n_, 2 * n_);
  for (int i = 1; i <= n_; ++i) {
    g(position(i, n_), position(-i, n_)) = Int(1);
    g(position(-i, n_), position(i, n_)) = Int(-1);
  }
  return g;
}

IMat omega_action_matrix(long long disc, int n) {
  QuadraticOrder order(disc);
  Int t(order.omega_trace());
  Int nm = order.omega_norm();
  IMat m = IMat::Zero(4 * n, 4 * n);
  for (Index p = 0; p < 2 * static_cast<Index>(n); ++p) {
    // (x + y*w0) * w0 = -nm*y + (x + t*y)*w0
    m(2 * p, 2 * p + 1) = Int(1);
    m(2 * p + 1, 2 * p) = -nm;
    m(2 * p + 1, 2 * p + 1) = t;
  }
  return m;
}

Fe symplectic_pair(const QRow& u, const QRow& v, long long disc, int n) {
  if (u.cols() != 4 * n || v.cols() != 4 * n)
    throw std::invalid_argument("symplectic_pair: wrong coordinate length");
  auto component = [&](const QRow& w, int s) {
    Index p = SymplecticSpace::position(s, n);
    return Fe(w(2 * p), w(2 * p + 1), disc);
  };
  Fe acc(0);
  for (int i = 1; i <= n; ++i) {
    acc += component(u, i) * component(v, -i);
    acc -= component(u, -i) * component(v, i);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// RLattice

RLattice::RLattice(long long disc, int n, IMat rows, Int den)
    : disc_(disc), n_(n), rows_(std::move(rows)), den_(std::move(den)) {}

RLattice RLattice::zero(long long disc, int n) {
  QuadraticOrder order(disc);  // validates
  if (n < 1) throw std::invalid_argument("RLattice: n must be >= 1");
  return RLattice(disc, n, IMat(0, 4 * n), Int(1));
}

RLattice RLattice::standard(long long disc, int n) {
  RLattice l = zero(disc, n);
  l.rows_ = IMat::Identity(4 * n, 4 * n);
  return l;
}

RLattice RLattice::from_rows(long long disc, int n, const QMat& rows) {
  RLattice l = zero(disc, n);
  if (rows.rows() == 0) return l;
  if (rows.cols() != 4 * static_cast<Index>(n))
    throw std::invalid_argument("RLattice: rows must have 4n columns");
  auto [num, den] = clear_denominators(rows);
  IMat h = hnf_basis(num);
  Int g = gcd(content(h), den);
  if (g > Int(1)) {
    for (Index i = 0; i < h.rows(); ++i)
      for (Index j = 0; j < h.cols(); ++j) h(i, j) = div_exact(h(i, j), g);
    den = div_exact(den, g);
  }
  l.rows_ = std::move(h);
  l.den_ = den;
  return l;
}

RLattice RLattice::r_span(long long disc, int n, const QMat& rows) {
  IMat w = omega_action_matrix(disc, n);
  QMat closed(2 * rows.rows(), rows.cols());
  closed.topRows(rows.rows()) = rows;
  for (Index i = 0; i < rows.rows(); ++i) {
    QRow r = rows.row(i);
    QRow rw(rows.cols());
    for (Index j = 0; j < rows.cols(); ++j) {
      Rat acc(0);
      for (Index k = 0; k < rows.cols(); ++k)
        if (!w(k, j).is_zero()) acc += r(k) * Rat(w(k, j));
      rw(j) = acc;
    }
    closed.row(rows.rows() + i) = rw;
  }
  return from_rows(disc, n, closed);
}

int RLattice::r_rank() const {
  if (z_rank() % 2 != 0)
    throw std::logic_error("RLattice: odd Z-rank, lattice is not w0-stable");
  return static_cast<int>(z_rank() / 2);
}

QMat RLattice::rational_rows() const {
  QMat q(rows_.rows(), rows_.cols());
  Rat inv_den(Int(1), den_);
  for (Index i = 0; i < rows_.rows(); ++i)
    for (Index j = 0; j < rows_.cols(); ++j) q(i, j) = Rat(rows_(i, j)) * inv_den;
  return q;
}

Mat<Fe> RLattice::k_rows() const {
  Mat<Fe> k(rows_.rows(), 2 * n_);
  Rat inv_den(Int(1), den_);
  for (Index i = 0; i < rows_.rows(); ++i)
    for (Index p = 0; p < 2 * static_cast<Index>(n_); ++p)
      k(i, p) = Fe(Rat(rows_(i, 2 * p)) * inv_den, Rat(rows_(i, 2 * p + 1)) * inv_den, disc_);
  return k;
}

bool RLattice::is_omega_stable() const {
  IMat w = omega_action_matrix(disc_, n_);
  for (Index i = 0; i < rows_.rows(); ++i) {
    IRow moved = rows_.row(i) * w;
    if (!solve_left(rows_, moved)) return false;
  }
  return true;
}

bool RLattice::contains_row(const QRow& v) const {
  if (v.cols() != dim_q()) throw std::invalid_argument("contains_row: wrong length");
  IRow scaled(v.cols());
  for (Index j = 0; j < v.cols(); ++j) {
    Rat s = v(j) * Rat(den_);
    if (!s.is_integer()) return false;
    scaled(j) = s.num();
  }
  return solve_left(rows_, scaled).has_value();
}

bool RLattice::contains(const RLattice& other) const {
  if (disc_ != other.disc_ || n_ != other.n_)
    throw std::invalid_argument("lattices live in different ambients");
  QMat q = other.rational_rows();
  for (Index i = 0; i < q.rows(); ++i)
    if (!contains_row(q.row(i))) return false;
  return true;
}

RLattice RLattice::sum(const RLattice& other) const {
  if (disc_ != other.disc_ || n_ != other.n_)
    throw std::invalid_argument("lattices live in different ambients");
  QMat all(rows_.rows() + other.rows_.rows(), dim_q());
  all.topRows(rows_.rows()) = rational_rows();
  all.bottomRows(other.rows_.rows()) = other.rational_rows();
  return from_rows(disc_, n_, all);
}

RLattice RLattice::intersect(const RLattice& other) const {
  if (disc_ != other.disc_ || n_ != other.n_)
    throw std::invalid_argument("lattices live in different ambients");
  if (is_zero() || other.is_zero()) return zero(disc_, n_);
  Int common = lcm(den_, other.den_);
  IMat a1 = rows_ * div_exact(common, den_);
  IMat a2 = other.rows_ * div_exact(common, other.den_);
  IMat stacked(a1.rows() + a2.rows(), dim_q());
  stacked.topRows(a1.rows()) = a1;
  stacked.bottomRows(a2.rows()) = -a2;
  IMat ker = left_kernel(stacked);
  QMat rows(ker.rows(), dim_q());
  Rat inv(Int(1), common);
  for (Index i = 0; i < ker.rows(); ++i) {
    IRow combo = ker.row(i).head(a1.rows()) * a1;
    for (Index j = 0; j < dim_q(); ++j) rows(i, j) = Rat(combo(j)) * inv;
  }
  return from_rows(disc_, n_, rows);
}

RLattice RLattice::intersect_with_span(const RLattice& other) const {
  if (disc_ != other.disc_ || n_ != other.n_)
    throw std::invalid_argument("lattices live in different ambients");
  if (other.is_zero()) return zero(disc_, n_);
  // x = y * rows(this) lies in span(other) iff y * (rows(this) * C) = 0 for
  // C the right kernel of other's rows.
  IMat c = right_kernel(other.rows_);
  IMat conditions = rows_ * c;
  IMat y = left_kernel(conditions);
  QMat rows(y.rows(), dim_q());
  Rat inv(Int(1), den_);
  for (Index i = 0; i < y.rows(); ++i) {
    IRow combo = y.row(i) * rows_;
    for (Index j = 0; j < dim_q(); ++j) rows(i, j) = Rat(combo(j)) * inv;
  }
  return from_rows(disc_, n_, rows);
}

bool RLattice::operator==(const RLattice& o) const {
  return disc_ == o.disc_ && n_ == o.n_ && den_ == o.den_ && exact_equal(rows_, o.rows_);
}

nlohmann::json RLattice::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  QMat q = rational_rows();
  for (Index i = 0; i < q.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < q.cols(); ++j) row.push_back(q(i, j).str());
    rows.push_back(std::move(row));
  }
  return {{"disc", disc_}, {"n", n_}, {"rows", rows}};
}

RLattice RLattice::from_json(const nlohmann::json& j) {
  long long disc = j.at("disc").get<long long>();
  int n = j.at("n").get<int>();
  const auto& rows = j.at("rows");
  QMat q(static_cast<Index>(rows.size()), 4 * n);
  for (Index i = 0; i < q.rows(); ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (static_cast<Index>(row.size()) != q.cols())
      throw std::invalid_argument("lattice JSON: wrong row length");
    for (Index k = 0; k < q.cols(); ++k)
      q(i, k) = Rat::parse(row[static_cast<size_t>(k)].get<std::string>());
  }
  return from_rows(disc, n, q);
}

// ---------------------------------------------------------------------------
// Module operations

namespace {

void require_integral(const RLattice& l, const char* what) {
  if (!l.is_integral())
    throw std::invalid_argument(std::string(what) + ": lattice is not contained in R^2n");
}

QMat int_to_rational_rows(const IMat& rows) {
  QMat q(rows.rows(), rows.cols());
  for (Index i = 0; i < rows.rows(); ++i)
    for (Index j = 0; j < rows.cols(); ++j) q(i, j) = Rat(rows(i, j));
  return q;
}

/// Matrix of multiplication-by-w0 in the lattice basis: rows * W = Omega * rows.
IMat omega_in_basis(const RLattice& l) {
  IMat w = omega_action_matrix(l.disc(), l.n());
  IMat out(l.z_rank(), l.z_rank());
  for (Index i = 0; i < l.z_rank(); ++i) {
    IRow moved = l.rows().row(i) * w;
    auto coords = solve_left(l.rows(), moved);
    if (!coords) throw std::invalid_argument("lattice is not w0-stable");
    out.row(i) = *coords;
  }
  return out;
}

}  // namespace

RLattice saturate(const RLattice& l) {
  require_integral(l, "saturate");
  if (l.is_zero()) return l;
  IMat c = right_kernel(l.rows());
  IMat basis = left_kernel(c);
  return RLattice::from_rows(l.disc(), l.n(), int_to_rational_rows(basis));
}

bool is_summand(const RLattice& l) {
  require_integral(l, "is_summand");
  return saturate(l) == l;
}

RLattice orthogonal_complement(const RLattice& l) {
  require_integral(l, "orthogonal_complement");
  if (!is_summand(l)) throw std::invalid_argument("orthogonal_complement: not a summand");
  const int n = l.n();
  const Index dim = 4 * static_cast<Index>(n);
  IMat conditions(dim, 2 * l.z_rank());
  QMat basis_rows = int_to_rational_rows(l.rows());
  for (Index g = 0; g < l.z_rank(); ++g) {
    QRow grow = basis_rows.row(g);
    for (Index t = 0; t < dim; ++t) {
      QRow unit = QRow::Zero(dim);
      unit(t) = Rat(1);
      Fe val = symplectic_pair(unit, grow, l.disc(), n);
      // basis pairings of integer rows stay integral
      conditions(t, 2 * g) = val.x().num();
      conditions(t, 2 * g + 1) = val.y().num();
      if (!val.x().is_integer() || !val.y().is_integer())
        throw std::logic_error("orthogonal_complement: non-integral pairing");
    }
  }
  IMat basis = left_kernel(conditions);
  return RLattice::from_rows(l.disc(), n, int_to_rational_rows(basis));
}

bool is_isotropic(const RLattice& l) {
  QMat q = l.rational_rows();
  for (Index i = 0; i < q.rows(); ++i)
    for (Index j = i + 1; j < q.rows(); ++j)
      if (!symplectic_pair(q.row(i), q.row(j), l.disc(), l.n()).is_zero()) return false;
  return true;
}

GroupElement steinitz_class(const RLattice& l) {
  const int r = l.r_rank();
  if (r == 0) throw std::invalid_argument("steinitz_class: rank-0 module");
  const Index gens = l.z_rank();
  Mat<Fe> k = l.k_rows();

  // Column subsets of size r, enumerated once.
  std::vector<std::vector<Index>> col_subsets;
  {
    std::vector<Index> cs(static_cast<size_t>(r));
    std::iota(cs.begin(), cs.end(), 0);
    const Index ncols = k.cols();
    while (true) {
      col_subsets.push_back(cs);
      int i = r - 1;
      while (i >= 0 && cs[static_cast<size_t>(i)] == ncols - r + i) --i;
      if (i < 0) break;
      ++cs[static_cast<size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        cs[static_cast<size_t>(j)] = cs[static_cast<size_t>(j - 1)] + 1;
    }
  }

  auto minor = [&](const std::vector<Index>& rows_sel, const std::vector<Index>& cols_sel) {
    Mat<Fe> sub(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        sub(i, j) = k(rows_sel[static_cast<size_t>(i)], cols_sel[static_cast<size_t>(j)]);
    return det_field(sub);
  };

  // Reference wedge: first row subset with a nonzero Pluecker coordinate.
  std::vector<Index> rs(static_cast<size_t>(r));
  std::iota(rs.begin(), rs.end(), 0);
  std::vector<Index> ref_rows;
  size_t ref_col_idx = 0;
  Fe ref_value;
  while (true) {
    bool found = false;
    for (size_t ci = 0; ci < col_subsets.size() && !found; ++ci) {
      Fe d = minor(rs, col_subsets[ci]);
      if (!d.is_zero()) {
        ref_rows = rs;
        ref_col_idx = ci;
        ref_value = d;
        found = true;
      }
    }
    if (found) break;
    int i = r - 1;
    while (i >= 0 && rs[static_cast<size_t>(i)] == gens - r + i) --i;
    if (i < 0) throw std::logic_error("steinitz_class: no independent row subset");
    ++rs[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      rs[static_cast<size_t>(j)] = rs[static_cast<size_t>(j - 1)] + 1;
  }

  // Wedge coefficients of every r-subset of generators against the reference
  // wedge line; they generate the fractional ideal representing [L].
  std::vector<Fe> lambdas;
  std::iota(rs.begin(), rs.end(), 0);
  while (true) {
    Fe d = minor(rs, col_subsets[ref_col_idx]);
    if (!d.is_zero()) lambdas.push_back(d / ref_value);
    int i = r - 1;
    while (i >= 0 && rs[static_cast<size_t>(i)] == gens - r + i) --i;
    if (i < 0) break;
    ++rs[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      rs[static_cast<size_t>(j)] = rs[static_cast<size_t>(j - 1)] + 1;
  }

  FracIdeal wedge = FracIdeal::from_generators(l.disc(), lambdas);
  return ClassGroup::of(l.disc()).class_of(wedge);
}

FracIdeal coefficient_ideal(const QRow& v, const RLattice& m) {
  if (m.is_zero()) throw std::invalid_argument("coefficient_ideal: zero module");
  QMat basis = m.rational_rows();
  auto p = solve_left_field<Rat>(basis, v);
  if (!p) throw std::invalid_argument("coefficient_ideal: v not in span of the module");
  IMat w = omega_action_matrix(m.disc(), m.n());
  QRow vw(v.cols());
  for (Index j = 0; j < v.cols(); ++j) {
    Rat acc(0);
    for (Index k = 0; k < v.cols(); ++k)
      if (!w(k, j).is_zero()) acc += v(k) * Rat(w(k, j));
    vw(j) = acc;
  }
  auto q = solve_left_field<Rat>(basis, vw);
  if (!q) throw std::logic_error("coefficient_ideal: module is not w0-stable");

  // { (x,y) : x*p + y*q integral } is the dual of the lattice spanned by the
  // columns (p_k, q_k); its rows give the Z-basis of the coefficient ideal.
  QMat cols(m.z_rank(), 2);
  for (Index k = 0; k < m.z_rank(); ++k) {
    cols(k, 0) = (*p)(k);
    cols(k, 1) = (*q)(k);
  }
  auto [ci, cd] = clear_denominators(cols);
  IMat g = hnf_basis(ci);
  if (g.rows() != 2) throw std::invalid_argument("coefficient_ideal: v is zero");
  Int det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  // basis rows of the dual: cd * (g^{-1})^T
  QMat dual(2, 2);
  dual(0, 0) = Rat(cd * g(1, 1), det);
  dual(0, 1) = Rat(-(cd * g(1, 0)), det);
  dual(1, 0) = Rat(-(cd * g(0, 1)), det);
  dual(1, 1) = Rat(cd * g(0, 0), det);
  return FracIdeal::from_rows(m.disc(), dual);
}

RLattice line_summand(const QRow& v, const RLattice& m) {
  FracIdeal j = coefficient_ideal(v, m);
  IMat w = omega_action_matrix(m.disc(), m.n());
  QRow vw(v.cols());
  for (Index jj = 0; jj < v.cols(); ++jj) {
    Rat acc(0);
    for (Index k = 0; k < v.cols(); ++k)
      if (!w(k, jj).is_zero()) acc += v(k) * Rat(w(k, jj));
    vw(jj) = acc;
  }
  QMat rows(2, v.cols());
  auto basis = j.z_basis();
  for (Index i = 0; i < 2; ++i) {
    const Fe& lam = basis[static_cast<size_t>(i)];
    for (Index k = 0; k < v.cols(); ++k) rows(i, k) = lam.x() * v(k) + lam.y() * vw(k);
  }
  return RLattice::from_rows(m.disc(), m.n(), rows);
}

int search_bound() {
  if (const char* env = std::getenv("SYMPCOH_SEARCH_BOUND")) {
    int b = std::atoi(env);
    if (b >= 1) return b;
  }
  return kDefaultSearchBound;
}

RLattice rank_one_summand_with_class(const RLattice& m, const GroupElement& c) {
  if (m.r_rank() < 2)
    throw std::invalid_argument("rank_one_summand_with_class: need rk(m) >= 2");
  const ClassGroup& cl = ClassGroup::of(m.disc());
  const Index zr = m.z_rank();
  IMat omega = omega_in_basis(m);
  const int bound = search_bound();

  std::vector<Int> z(static_cast<size_t>(zr), Int(0));
  for (int shell = 1; shell <= bound; ++shell) {
    const Int lo(-shell), hi(shell);
    std::fill(z.begin(), z.end(), lo);
    while (true) {
      // accept only primitive vectors on the shell boundary with positive
      // leading sign (each line once)
      Int maxabs(0), g(0);
      int lead = 0;
      for (const Int& zi : z) {
        if (lead == 0 && !zi.is_zero()) lead = zi.sign();
        maxabs = std::max(maxabs, abs(zi));
        g = gcd(g, zi);
      }
      if (maxabs == hi && lead > 0 && g.is_one()) {
        IRow zrow(zr);
        for (Index i = 0; i < zr; ++i) zrow(i) = z[static_cast<size_t>(i)];
        IRow q = zrow * omega;
        // coefficient ideal from basis coordinates: dual of the lattice of
        // columns (z_k, (z*Omega)_k)
        IMat cols(zr, 2);
        for (Index k = 0; k < zr; ++k) {
          cols(k, 0) = zrow(k);
          cols(k, 1) = q(k);
        }
        IMat gmat = hnf_basis(cols);
        if (gmat.rows() == 2) {
          Int det = gmat(0, 0) * gmat(1, 1) - gmat(0, 1) * gmat(1, 0);
          QMat dual(2, 2);
          dual(0, 0) = Rat(gmat(1, 1), det);
          dual(0, 1) = Rat(-gmat(1, 0), det);
          dual(1, 0) = Rat(-gmat(0, 1), det);
          dual(1, 1) = Rat(gmat(0, 0), det);
          FracIdeal coeff = FracIdeal::from_rows(m.disc(), dual);
          if (cl.class_of(coeff) == c) {
            QMat vrow(1, m.dim_q());
            IRow ambient = zrow * m.rows();
            for (Index j = 0; j < m.dim_q(); ++j)
              vrow(0, j) = Rat(ambient(j), m.den());
            return line_summand(vrow.row(0), m);
          }
        }
      }
      // odometer over the cube [-shell, shell]^zr
      size_t i = z.size();
      bool carried = true;
      while (i > 0 && carried) {
        --i;
        z[i] += Int(1);
        if (z[i] <= hi) carried = false;
        else z[i] = lo;
      }
      if (carried) break;
    }
  }
  throw std::runtime_error(
      "rank_one_summand_with_class: search bound exhausted (set SYMPCOH_SEARCH_BOUND "
      "higher; existence is guaranteed, so this indicates a bug or a too-small bound)");
}

RLattice complement_in(const RLattice& u, const RLattice& w) {
  if (u.disc() != w.disc() || u.n() != w.n())
    throw std::invalid_argument("complement_in: different ambients");
  if (u.is_zero()) return w;
  if (!w.contains(u) || !(w.intersect_with_span(u) == u))
    throw std::invalid_argument("complement_in: u is not a summand of w");

  const Index wu = u.z_rank(), ww = w.z_rank();
  // u's rows in w-coordinates: gamma_row * (w.rows / w.den) = u_row / u.den,
  // integral because u is contained in w.
  IMat gamma(wu, ww);
  for (Index i = 0; i < wu; ++i) {
    IRow scaled(u.rows().cols());
    for (Index j = 0; j < u.rows().cols(); ++j) {
      Rat s = Rat(u.rows()(i, j)) * Rat(w.den(), u.den());
      if (!s.is_integer()) throw std::invalid_argument("complement_in: u not inside w");
      scaled(j) = s.num();
    }
    auto coords = solve_left(w.rows(), scaled);
    if (!coords) throw std::invalid_argument("complement_in: u not inside w");
    gamma.row(i) = *coords;
  }

  IMat omega_w = omega_in_basis(w);
  IMat omega_u = omega_in_basis(u);

  // Unknown projector P (ww x wu), row-major vectorized: P(k,j) -> k*wu + j.
  // Constraints: gamma * P = Id (projection fixes u) and
  // omega_w * P = P * omega_u (R-linearity).
  const Index unknowns = ww * wu;
  const Index eqs = wu * wu + ww * wu;
  IMat e = IMat::Zero(eqs, unknowns);
  IRow rhs = IRow::Zero(eqs);
  Index row = 0;
  for (Index i = 0; i < wu; ++i)
    for (Index j = 0; j < wu; ++j) {
      for (Index k = 0; k < ww; ++k) e(row, k * wu + j) += gamma(i, k);
      rhs(row) = Int(i == j ? 1 : 0);
      ++row;
    }
  for (Index i = 0; i < ww; ++i)
    for (Index j = 0; j < wu; ++j) {
      for (Index k = 0; k < ww; ++k) e(row, k * wu + j) += omega_w(i, k);
      for (Index l = 0; l < wu; ++l) e(row, i * wu + l) -= omega_u(l, j);
      ++row;
    }

  auto x = solve_left(IMat(e.transpose()), rhs);
  if (!x) throw std::logic_error("complement_in: projector system has no integral solution");
  IMat p(ww, wu);
  for (Index k = 0; k < ww; ++k)
    for (Index j = 0; j < wu; ++j) p(k, j) = (*x)(k * wu + j);

  IMat ker = left_kernel(p);
  QMat rows(ker.rows(), w.dim_q());
  Rat inv(Int(1), w.den());
  for (Index i = 0; i < ker.rows(); ++i) {
    IRow combo = ker.row(i) * w.rows();
    for (Index j = 0; j < w.dim_q(); ++j) rows(i, j) = Rat(combo(j)) * inv;
  }
  RLattice comp = RLattice::from_rows(w.disc(), w.n(), rows);

  // replay the defining property
  if (!(u.sum(comp) == w) || comp.z_rank() + u.z_rank() != w.z_rank())
    throw std::logic_error("complement_in: splitting replay failed");
  return comp;
}

RLattice relative_extension(const RLattice& u, const RLattice& w, const GroupElement& c) {
  const ClassGroup& cl = ClassGroup::of(u.disc());
  if (!w.contains(u)) throw std::invalid_argument("relative_extension: u not inside w");
  if (!u.is_zero() && !is_summand(u))
    throw std::invalid_argument("relative_extension: u is not a summand");
  if (!is_summand(w)) throw std::invalid_argument("relative_extension: w is not a summand");
  if (!is_isotropic(u)) throw std::invalid_argument("relative_extension: u is not isotropic");
  if (w.r_rank() < u.r_rank() + 2)
    throw std::invalid_argument("relative_extension: need rk(w) >= rk(u) + 2");
  QMat uq = u.rational_rows(), wq = w.rational_rows();
  for (Index i = 0; i < wq.rows(); ++i)
    for (Index j = 0; j < uq.rows(); ++j)
      if (!symplectic_pair(wq.row(i), uq.row(j), u.disc(), u.n()).is_zero())
        throw std::invalid_argument("relative_extension: w is not inside u-perp");

  GroupElement u_class = u.is_zero() ? cl.group().zero() : steinitz_class(u);
  RLattice rest = complement_in(u, w);
  RLattice line = rank_one_summand_with_class(rest, cl.group().sub(c, u_class));
  return u.sum(line);
}

std::vector<RLattice> isotropic_chain(long long disc, int n,
                                      const std::vector<GroupElement>& classes) {
  if (n < 1) throw std::invalid_argument("isotropic_chain: n must be >= 1");
  if (static_cast<int>(classes.size()) != n)
    throw std::invalid_argument("isotropic_chain: need one class per rank");
  RLattice ambient = RLattice::standard(disc, n);
  std::vector<RLattice> chain;
  chain.push_back(rank_one_summand_with_class(ambient, classes[0]));
  for (int i = 1; i < n; ++i)
    chain.push_back(
        relative_extension(chain.back(), orthogonal_complement(chain.back()), classes[static_cast<size_t>(i)]));
  return chain;
}

}  // namespace sympcoh
