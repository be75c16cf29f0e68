#include <doctest.h>

#include "sympcoh/quadratic.hpp"

using namespace sympcoh;

TEST_CASE("fundamental discriminant recognition") {
  for (long long d : {-3, -4, -7, -8, -11, -15, -20, -23, -47})
    CHECK(QuadraticOrder::is_fundamental(d));
  for (long long d : {0, 5, -5, -9, -12, -16, -18, -21, -25})
    CHECK_FALSE(QuadraticOrder::is_fundamental(d));
  CHECK_THROWS(QuadraticOrder(-12));
  CHECK_THROWS(QuadraticOrder(5));
}

TEST_CASE("field arithmetic") {
  Fe w = Fe::omega(-20);  // sqrt(-5)
  CHECK(w * w == Fe(Rat(-5)));
  CHECK((Fe(1) + w).norm() == Rat(6));
  CHECK((Fe(1) + w).conj() == Fe(Rat(1), Rat(-1), -20));
  Fe u = (Fe(1) + w) * (Fe(1) + w).inverse();
  CHECK(u == Fe(1));

  Fe w23 = Fe::omega(-23);  // (1+sqrt(-23))/2, trace 1, norm 6
  CHECK(w23 * w23 == w23 - Fe(6));
  CHECK(w23.norm() == Rat(6));
  CHECK(w23.trace() == Rat(1));
  CHECK_THROWS(w * w23);
}

TEST_CASE("reduced form enumeration gives known class numbers") {
  CHECK(reduced_forms(-3).size() == 1);
  CHECK(reduced_forms(-4).size() == 1);
  CHECK(reduced_forms(-7).size() == 1);
  CHECK(reduced_forms(-8).size() == 1);
  CHECK(reduced_forms(-11).size() == 1);
  CHECK(reduced_forms(-15).size() == 2);
  CHECK(reduced_forms(-47).size() == 5);

  auto f20 = reduced_forms(-20);
  REQUIRE(f20.size() == 2);
  CHECK(f20[0] == QuadForm(Int(1), Int(0), Int(5)));
  CHECK(f20[1] == QuadForm(Int(2), Int(2), Int(3)));

  auto f23 = reduced_forms(-23);
  REQUIRE(f23.size() == 3);
  CHECK(f23[0] == QuadForm(Int(1), Int(1), Int(6)));
  CHECK(f23[1] == QuadForm(Int(2), Int(-1), Int(3)));
  CHECK(f23[2] == QuadForm(Int(2), Int(1), Int(3)));
}

TEST_CASE("form reduction") {
  QuadForm f(Int(2), Int(3), Int(4));  // disc -23
  CHECK(f.reduced() == QuadForm(Int(2), Int(-1), Int(3)));
  CHECK(f.reduced().is_reduced());
  CHECK_FALSE(f.is_reduced());
  CHECK_THROWS(QuadForm(Int(1), Int(2), Int(1)));  // disc 0
}

TEST_CASE("prime over 2 in Z[sqrt(-5)]") {
  QuadraticOrder order(-20);
  Fe w = Fe::omega(-20);
  FracIdeal p = FracIdeal::from_generators(-20, {Fe(2), Fe(1) + w});
  CHECK(p.norm() == Rat(2));
  CHECK(p.contains(Fe(1) + w));
  CHECK(p.contains(Fe(2)));
  CHECK_FALSE(p.contains(Fe(1)));

  FracIdeal two = FracIdeal::from_generators(-20, {Fe(2)});
  CHECK(p.mul(p) == two);  // p^2 = (2): p is ramified

  const ClassGroup& cl = ClassGroup::of(-20);
  CHECK(cl.class_number() == Int(2));
  CHECK(cl.group().factors() == std::vector<Int>{Int(2)});
  CHECK_FALSE(cl.class_of(p).is_zero());
  CHECK(cl.class_of(p.mul(p)).is_zero());
  CHECK(cl.class_of(FracIdeal::unit_ideal(order)).is_zero());
  CHECK(cl.class_of(p.inverse()) == cl.class_of(p));

  // p * p^{-1} = R
  CHECK(p.mul(p.inverse()) == FracIdeal::unit_ideal(order));
}

TEST_CASE("ideal validation rejects unstable lattices") {
  QMat rows(2, 2);
  rows << Rat(1), Rat(0), Rat(0), Rat(2);  // Z + Z*2w is not w-stable
  CHECK_THROWS(FracIdeal::from_rows(-20, rows));
  QMat rank1(2, 2);
  rank1 << Rat(1), Rat(0), Rat(2), Rat(0);
  CHECK_THROWS(FracIdeal::from_rows(-20, rank1));
}

TEST_CASE("class map is a homomorphism on small-norm ideals") {
  for (long long d : {-20, -23}) {
    QuadraticOrder order(d);
    const ClassGroup& cl = ClassGroup::of(d);
    auto ideals = ideals_of_norm_up_to(order, Int(30));
    CHECK(ideals.size() > 10);
    for (size_t i = 0; i < ideals.size(); i += 3)
      for (size_t j = 0; j < ideals.size(); j += 4) {
        GroupElement expect =
            cl.group().add(cl.class_of(ideals[i]), cl.class_of(ideals[j]));
        CHECK(cl.class_of(ideals[i].mul(ideals[j])) == expect);
      }
  }
}

TEST_CASE("representatives realize their forms and coordinates") {
  for (long long d : {-20, -23, -47}) {
    const ClassGroup& cl = ClassGroup::of(d);
    Int order(1);
    for (const Int& f : cl.group().factors()) order *= f;
    CHECK(order == cl.class_number());
    for (size_t i = 0; i < cl.forms().size(); ++i) {
      CHECK(cl.representatives()[i].norm_form() == cl.forms()[i]);
      CHECK(cl.class_of(cl.representatives()[i]) == cl.coords_of(i));
      CHECK(cl.index_of_class(cl.coords_of(i)) == i);
    }
  }
}

TEST_CASE("conjugation inverts classes") {
  const ClassGroup& cl = ClassGroup::of(-23);
  for (const auto& rep : cl.representatives()) {
    GroupElement c = cl.class_of(rep);
    CHECK(cl.class_of(rep.conjugate()) == cl.group().neg(c));
  }
}
