#include <doctest.h>

#include <map>
#include <set>
#include <thread>

#include "sympcoh/signed_perm.hpp"

using namespace sympcoh;

namespace {

SignedPermutation good_product(int n, const std::vector<unsigned char>& bits) {
  // letters act in index order: s_1 first
  SignedPermutation acc = SignedPermutation::identity(n);
  for (int i = 1; i <= n; ++i)
    if (bits[static_cast<size_t>(i - 1)])
      acc = SignedPermutation::simple(n, i).compose(acc);
  return acc;
}

}  // namespace

TEST_CASE("simple reflection windows") {
  CHECK(SignedPermutation::simple(3, 1).window() == std::vector<int>{2, 1, 3});
  CHECK(SignedPermutation::simple(3, 3).window() == std::vector<int>{1, 2, -3});
  CHECK(SignedPermutation::simple(1, 1).window() == std::vector<int>{-1});
  CHECK_THROWS(SignedPermutation::simple(3, 4));
  CHECK_THROWS(SignedPermutation::simple(3, 0));
}

TEST_CASE("window validation and parsing") {
  CHECK_THROWS(SignedPermutation::from_window({1, 1}));
  CHECK_THROWS(SignedPermutation::from_window({1, -1}));
  CHECK_THROWS(SignedPermutation::from_window({3, 1}));
  CHECK(SignedPermutation::parse("2,-1").window() == std::vector<int>{2, -1});
  CHECK(SignedPermutation::parse("2,-1").window_csv() == "2,-1");
}

TEST_CASE("composition applies the right factor first") {
  auto s1 = SignedPermutation::simple(2, 1);
  auto s2 = SignedPermutation::simple(2, 2);
  CHECK(s1.compose(s2).window() == std::vector<int>{2, -1});
  CHECK(s2.compose(s1).window() == std::vector<int>{-2, 1});
  auto id = SignedPermutation::identity(2);
  CHECK(s1.compose(id) == s1);
  CHECK(id.compose(s1) == s1);
  CHECK(s1.compose(s1) == id);
  CHECK_THROWS(s1.compose(SignedPermutation::identity(3)));
}

TEST_CASE("inverse") {
  auto id = SignedPermutation::identity(3);
  CHECK(id.inverse() == id);
  for (int i = 1; i <= 3; ++i) {
    auto s = SignedPermutation::simple(3, i);
    CHECK(s.inverse() == s);
  }
  auto sigma = SignedPermutation::parse("2,-1");
  CHECK(sigma.inverse().window() == std::vector<int>{-2, 1});
  for (const auto& tau : all_elements(3)) CHECK(tau.compose(tau.inverse()) == id);
}

TEST_CASE("cayley length by BFS") {
  CHECK(cayley_length(SignedPermutation::identity(3)) == 0);
  for (int i = 1; i <= 3; ++i)
    CHECK(cayley_length(SignedPermutation::simple(3, i)) == 1);

  // longest element has length n^2 (the positive-root count of type C_n)
  for (int n = 1; n <= 3; ++n) {
    int longest = 0;
    for (const auto& sigma : all_elements(n)) longest = std::max(longest, cayley_length(sigma));
    CHECK(longest == n * n);
  }
  CHECK_THROWS(cayley_length(SignedPermutation::identity(7)));
}

TEST_CASE("length memo is safe under concurrent first access") {
  // rank 5 is not cached yet when the threads race to build it
  std::vector<int> results(4, -1);
  std::vector<std::thread> threads;
  auto probe = SignedPermutation::parse("5,4,3,2,1");
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { results[static_cast<size_t>(t)] = cayley_length(probe); });
  for (auto& th : threads) th.join();
  for (int r : results) CHECK(r == results[0]);
  CHECK(results[0] >= 1);
}

TEST_CASE("group order is 2^n n!") {
  std::vector<long long> expected{2, 8, 48, 384};
  for (int n = 1; n <= 4; ++n) {
    auto elems = all_elements(n);
    CHECK(static_cast<long long>(elems.size()) == expected[static_cast<size_t>(n - 1)]);
    CHECK(std::set<SignedPermutation>(elems.begin(), elems.end()).size() == elems.size());
  }
}

TEST_CASE("length parity equals the determinant and matches BFS") {
  CHECK(SignedPermutation::identity(4).length_parity() == 1);
  CHECK(SignedPermutation::simple(4, 4).length_parity() == -1);
  for (int n = 1; n <= 4; ++n)
    for (const auto& sigma : all_elements(n))
      CHECK(sigma.length_parity() == (cayley_length(sigma) % 2 == 0 ? 1 : -1));
}

TEST_CASE("length parity is multiplicative") {
  auto elems = all_elements(3);
  for (const auto& a : elems)
    for (const auto& b : elems)
      CHECK(a.compose(b).length_parity() == a.length_parity() * b.length_parity());
}

TEST_CASE("classify: good certificates") {
  auto id_cert = classify(SignedPermutation::identity(3));
  REQUIRE(std::holds_alternative<GoodCertificate>(id_cert));
  CHECK(std::get<GoodCertificate>(id_cert).bits == std::vector<unsigned char>{0, 0, 0});

  // subword with both letters, n = 2: the good element with e = (1,1) is
  // [-2,1] (s_1 acting first, then s_2)
  auto cert = classify(SignedPermutation::parse("-2,1"));
  REQUIRE(std::holds_alternative<GoodCertificate>(cert));
  CHECK(std::get<GoodCertificate>(cert).bits == std::vector<unsigned char>{1, 1});

  // every good element replays its certificate and distinct elements have
  // distinct certificates
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<unsigned char>> seen;
    long long good = 0;
    for (const auto& sigma : all_elements(n)) {
      auto c = classify(sigma);
      if (!std::holds_alternative<GoodCertificate>(c)) continue;
      ++good;
      const auto& bits = std::get<GoodCertificate>(c).bits;
      CHECK(good_product(n, bits) == sigma);
      CHECK(seen.insert(bits).second);
    }
    CHECK(good == (1LL << n));
  }
}

TEST_CASE("classify: bad certificates") {
  // worked example: sigma = [2,3,1] has k=2, j=2, sigma(k)=3, iota = [3,2,1]
  auto cert = classify(SignedPermutation::parse("2,3,1"));
  REQUIRE(std::holds_alternative<BadCertificate>(cert));
  const auto& bad = std::get<BadCertificate>(cert);
  CHECK(bad.k == 2);
  CHECK(bad.j == 2);
  CHECK(bad.partner.window() == std::vector<int>{3, 2, 1});
  CHECK(bad.tau.length_parity() == -1);

  // [2,-1] fails the prefix criterion ([1] is not inside {2,-1}): bad with
  // j = 2, sigma(k) = -1, partner [-1,2]
  auto cert2 = classify(SignedPermutation::parse("2,-1"));
  REQUIRE(std::holds_alternative<BadCertificate>(cert2));
  const auto& bad2 = std::get<BadCertificate>(cert2);
  CHECK(bad2.k == 2);
  CHECK(bad2.j == 2);
  CHECK(bad2.partner.window() == std::vector<int>{-1, 2});
}

TEST_CASE("iota is a fixed-point-free involution preserving k and tau") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& sigma : all_elements(n)) {
      auto c = classify(sigma);
      if (!std::holds_alternative<BadCertificate>(c)) continue;
      const auto& bad = std::get<BadCertificate>(c);
      CHECK(bad.partner != sigma);
      CHECK(bad.partner == bad.tau.compose(sigma));
      CHECK(bad.partner.length_parity() == -sigma.length_parity());

      auto pc = classify(bad.partner);
      REQUIRE(std::holds_alternative<BadCertificate>(pc));
      const auto& pbad = std::get<BadCertificate>(pc);
      CHECK(pbad.partner == sigma);       // involution
      CHECK(pbad.k == bad.k);             // k is preserved
      CHECK(pbad.tau == bad.tau);         // the swapped pair is preserved
      // j and sigma(k) trade places under iota
      CHECK(pbad.j == sigma.apply(bad.k));
      CHECK(bad.partner.apply(pbad.k) == bad.j);
    }
  }
}
