#include <doctest.h>

#include "sympcoh/steinberg.hpp"
#include "sympcoh/xn_complex.hpp"

using namespace sympcoh;

namespace {

FiniteAbelianGroup zmod(long long m) { return FiniteAbelianGroup::cyclic(Int(m)); }
GroupElement g1(const FiniteAbelianGroup& g, long long v) { return g.element({Int(v)}); }

}  // namespace

TEST_CASE("label rendering") {
  CHECK(VertexLabel::b_class(3).str() == "B3");
  CHECK(VertexLabel::a_class(2).str() == "A2");
  CHECK(VertexLabel::opaque({3, 1, -2}).str() == "O{1,-2,3}");  // sorted by |.|
  FiniteAbelianGroup g = zmod(2);
  CHECK(VertexLabel::concrete(2, g1(g, 1)).str() == "C(2,1)");
  CHECK_THROWS(VertexLabel::opaque({1, -1}));
}

TEST_CASE("label_of_subset case split") {
  CHECK(label_of_subset(3, {1, 2, 3}) == VertexLabel::b_class(3));
  CHECK(label_of_subset(3, {1, 2, -3}) == VertexLabel::a_class(3));
  CHECK(label_of_subset(3, {1, -2, 3}) == VertexLabel::opaque({1, -2, 3}));
  CHECK(label_of_subset(3, {-1}) == VertexLabel::a_class(1));
  CHECK(label_of_subset(3, {2}) == VertexLabel::a_class(1));
  CHECK(label_of_subset(3, {1}) == VertexLabel::b_class(1));
  CHECK(label_of_subset(2, {1, -2}) == VertexLabel::a_class(2));
  CHECK_THROWS(label_of_subset(2, {1, -1}));
  CHECK_THROWS(label_of_subset(2, {3}));
}

TEST_CASE("apartment chain for n = 1") {
  FormalChain chain = apartment_chain_symbolic(1);
  CHECK(chain.num_terms() == 2);
  CHECK(chain.coeff({VertexLabel::b_class(1)}) == Int(1));
  CHECK(chain.coeff({VertexLabel::a_class(1)}) == Int(-1));
}

TEST_CASE("good/bad split") {
  for (int n = 1; n <= 4; ++n) {
    GoodBadSplit split = split_good_bad(n);
    CHECK(split.good_count == (1LL << n));
    long long order = (1LL << n);
    for (int k = 2; k <= n; ++k) order *= k;
    CHECK(split.bad_count == order - split.good_count);
    CHECK(split.bad.is_zero());
    CHECK(split.good.num_terms() == static_cast<size_t>(1LL << n));
    CHECK(split.good + split.bad == apartment_chain_symbolic(n));

    // every good chamber uses only B/A labels with the parity sign
    for (const auto& [chamber, coeff] : split.good.terms()) {
      int a_count = 0;
      for (int i = 0; i < n; ++i) {
        const VertexLabel& l = chamber[static_cast<size_t>(i)];
        bool is_b = l == VertexLabel::b_class(i + 1);
        bool is_a = l == VertexLabel::a_class(i + 1);
        CHECK((is_b || is_a));
        a_count += is_a ? 1 : 0;
      }
      CHECK(coeff == Int(a_count % 2 == 0 ? 1 : -1));
    }
  }
  CHECK(split_good_bad(3).bad_count == 40);
  CHECK_THROWS(split_good_bad(6));
}

TEST_CASE("bad chambers cancel in iota-pairs at the label level") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& sigma : all_elements(n)) {
      auto cert = classify(sigma);
      if (!std::holds_alternative<BadCertificate>(cert)) continue;
      const auto& bad = std::get<BadCertificate>(cert);
      Chamber mine, partners;
      bool has_opaque = false;
      for (int m = 1; m <= n; ++m) {
        mine.push_back(label_of_subset(n, sigma.image_of_prefix(m)));
        partners.push_back(label_of_subset(n, bad.partner.image_of_prefix(m)));
        has_opaque = has_opaque || mine.back().kind() == VertexLabel::Kind::Opaque;
      }
      CHECK(mine == partners);
      CHECK(has_opaque);  // bad chambers never collide with good ones
      CHECK(bad.partner.length_parity() == -sigma.length_parity());
    }
  }
}

TEST_CASE("instantiate matches sigma_s_cycle") {
  for (int n = 1; n <= 2; ++n)
    for (long long m : {2, 3}) {
      FiniteAbelianGroup g = zmod(m);
      XnComplex x(n, g);
      auto elems = g.elements();
      for (const auto& a : elems)
        for (const auto& b : elems) {
          if (a == b) continue;
          std::vector<std::pair<GroupElement, GroupElement>> s(static_cast<size_t>(n), {a, b});
          FormalChain inst = instantiate(apartment_chain_symbolic(n), g, s, nullptr);
          CHECK(inst == sigma_s_cycle(x, s));
        }
    }

  // n = 3 over |G| = 4, sampled assignments with distinct entries per level
  FiniteAbelianGroup g = zmod(4);
  XnComplex x(3, g);
  FormalChain apartment = apartment_chain_symbolic(3);
  auto elems = g.elements();
  int counter = 0;
  for (const auto& a1 : elems)
    for (const auto& b1 : elems) {
      if (a1 == b1) continue;
      if (++counter % 3 != 0) continue;
      std::vector<std::pair<GroupElement, GroupElement>> s{
          {a1, b1}, {elems[1], elems[2]}, {elems[0], elems[3]}};
      CHECK(instantiate(apartment, g, s, nullptr) == sigma_s_cycle(x, s));
    }
}

TEST_CASE("instantiate rejects a_i == b_i and resolves opaque labels") {
  FiniteAbelianGroup g = zmod(2);
  std::vector<std::pair<GroupElement, GroupElement>> degenerate{{g.zero(), g.zero()}};
  CHECK_THROWS(instantiate(apartment_chain_symbolic(1), g, degenerate, nullptr));

  // hand-built chain with one opaque label
  FormalChain chain;
  chain.add({VertexLabel::b_class(1), VertexLabel::opaque({1, -2})}, Int(1));
  std::vector<std::pair<GroupElement, GroupElement>> s{{g1(g, 1), g1(g, 0)},
                                                       {g1(g, 1), g1(g, 0)}};
  FormalChain inst = instantiate(chain, g, s, [&](const std::vector<int>&) { return g1(g, 1); });
  CHECK(inst.coeff({VertexLabel::concrete(1, g1(g, 0)), VertexLabel::concrete(2, g1(g, 1))}) ==
        Int(1));
  // missing resolver
  CHECK_THROWS(instantiate(chain, g, s, nullptr));
}

TEST_CASE("integral images") {
  FiniteAbelianGroup z2 = zmod(2);
  // c_1 = 1 forces c_{-1} = 1 in Z/2; the two chambers cancel
  FormalChain img = integral_image(1, z2, {g1(z2, 1)}, {g1(z2, 1)});
  CHECK(img.is_zero());

  FiniteAbelianGroup z5 = zmod(5);
  img = integral_image(1, z5, {g1(z5, 1)}, {g1(z5, 4)});
  CHECK(img.num_terms() == 2);
  CHECK(img.coeff({VertexLabel::concrete(1, g1(z5, 1))}) == Int(1));
  CHECK(img.coeff({VertexLabel::concrete(1, g1(z5, 4))}) == Int(-1));

  // constraint violation
  CHECK_THROWS(integral_image(1, z5, {g1(z5, 1)}, {g1(z5, 1)}));
}

TEST_CASE("count_integral_images bounds") {
  auto run = [](long long h, int n) { return count_integral_images(n, zmod(h)); };

  IntegralImageCount c = run(2, 2);
  CHECK(c.distinct_nonzero == Int(0));
  CHECK(c.kappa_binomial == Int(0));
  CHECK(c.wedge_rank == Int(1));

  c = run(3, 2);
  CHECK(c.distinct_nonzero == Int(0));
  CHECK(c.kappa_binomial == Int(0));
  CHECK(c.wedge_rank == Int(4));

  c = run(4, 2);
  CHECK(c.distinct_nonzero == Int(0));  // 1 and 3 are the only c with c != -c
  CHECK(c.kappa_binomial == Int(1));
  CHECK(c.wedge_rank == Int(9));

  c = run(5, 2);
  CHECK(c.distinct_nonzero == Int(1));  // the pair set {{1,4},{2,3}}
  CHECK(c.kappa_binomial == Int(1));
  CHECK(c.wedge_rank == Int(16));

  c = run(3, 3);
  CHECK(c.distinct_nonzero == Int(0));
  CHECK(c.kappa_binomial == Int(0));
  CHECK(c.wedge_rank == Int(8));

  CHECK_THROWS(count_integral_images(1, zmod(5)));
  CHECK_THROWS(count_integral_images(2, zmod(1)));
}

TEST_CASE("images of assignments with distinct pair sets are cycles") {
  FiniteAbelianGroup z5 = zmod(5);
  XnComplex x(2, z5);
  FormalChain img = integral_image(2, z5, {g1(z5, 1), g1(z5, 2)},
                                   {g1(z5, 4), g1(z5, 3)});
  CHECK(img.num_terms() == 8);
  CHECK(x.is_top_cycle(img));
}
