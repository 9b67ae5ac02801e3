#include "doctest.h"
#include "oracles.hpp"

#include "f2c/gf2core.hpp"

#include <random>
#include <set>
#include <unordered_set>

using namespace f2c;

TEST_CASE("Gf2Vec addition is xor and checks dimensions") {
  Gf2Vec a(0b101, 3), b(0b011, 3);
  CHECK((a + b) == Gf2Vec(0b110, 3));
  CHECK((a + a) == Gf2Vec(0, 3));
  CHECK_THROWS_AS(Gf2Vec(8, 3), PreconditionError);
  CHECK_THROWS_AS(a + Gf2Vec(1, 4), PreconditionError);
}

TEST_CASE("ElemSet basics") {
  ElemSet s(3, {1, 2, 7});
  CHECK(s.size() == 3);
  CHECK(s.contains(7));
  CHECK_FALSE(s.contains(0));
  CHECK_FALSE(s.contains(100));
  CHECK(s.elements() == std::vector<Elem>{1, 2, 7});
  s.erase(2);
  CHECK(s.elements() == std::vector<Elem>{1, 7});
  CHECK_THROWS_AS(s.insert(8), PreconditionError);
  CHECK(ElemSet::full(4).size() == 16);
  CHECK(ElemSet(0).universe() == 1);
  CHECK(ElemSet(3).empty());

  ElemSet t(3, {1, 3});
  CHECK((s | t).elements() == std::vector<Elem>{1, 3, 7});
  CHECK((s & t).elements() == std::vector<Elem>{1});
  CHECK((s - t).elements() == std::vector<Elem>{7});
  CHECK(ElemSet(3, {1}).is_subset_of(t));
  CHECK_THROWS_AS(s | ElemSet(4), PreconditionError);
  CHECK(s.translated(1).elements() == std::vector<Elem>{0, 6});
}

TEST_CASE("ElemSet works across word boundaries") {
  ElemSet s(8);
  for (Elem x : {0u, 63u, 64u, 127u, 255u})
    s.insert(x);
  CHECK(s.size() == 5);
  CHECK(s.elements() == std::vector<Elem>{0, 63, 64, 127, 255});
  CHECK(s.translated(64).elements() == std::vector<Elem>{0, 63, 64, 127, 191});
}

TEST_CASE("Subspace keeps a canonical RREF basis") {
  Subspace V(4);
  CHECK(V.insert(0b0110));
  CHECK(V.insert(0b0011));
  CHECK_FALSE(V.insert(0b0101));
  CHECK_FALSE(V.insert(0));
  CHECK(V.dim() == 2);
  const auto &b = V.basis();
  REQUIRE(b.size() == 2);
  CHECK(std::bit_width(b[0]) > std::bit_width(b[1]));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (i != j)
        CHECK(((b[j] >> (std::bit_width(b[i]) - 1)) & 1u) == 0);

  std::vector<Elem> other{0b0101, 0b0110};
  CHECK(Subspace::span_of(4, other) == V);
  CHECK(V.members().elements() == std::vector<Elem>{0, 3, 5, 6});
  CHECK(V.contains(5));
  CHECK_FALSE(V.contains(1));
  CHECK(V.reduce(0b1111) == 0b1001);
}

TEST_CASE("Subspace coordinates invert the basis expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ElemSet X = testing::random_set(rng, 6, 0.1);
    Subspace V = span(X);
    std::vector<Elem> by_pivot(V.basis().rbegin(), V.basis().rend());
    V.members().for_each([&](Elem v) {
      Elem c = V.coordinates(v);
      Elem back = 0;
      for (std::size_t i = 0; i < by_pivot.size(); ++i)
        if ((c >> i) & 1u)
          back ^= by_pivot[i];
      CHECK(back == v);
    });
  }
  Subspace V = Subspace::span_of(3, std::vector<Elem>{1});
  CHECK_THROWS_AS(V.coordinates(2), PreconditionError);
}

TEST_CASE("reduce returns the coset minimum") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Subspace V = span(testing::random_set(rng, 5, 0.08));
    ElemSet members = V.members();
    for (Elem x = 0; x < 32; ++x) {
      Elem best = x;
      members.for_each([&](Elem v) { best = std::min(best, x ^ v); });
      CHECK(V.reduce(x) == best);
    }
  }
}

TEST_CASE("gaussian binomial values") {
  CHECK(gaussian_binomial(2, 1) == 3);
  CHECK(gaussian_binomial(4, 2) == 35);
  CHECK(gaussian_binomial(5, 0) == 1);
  CHECK(gaussian_binomial(5, 5) == 1);
  const int totals[] = {1, 2, 5, 16, 67, 374};
  for (int n = 0; n <= 5; ++n) {
    BigInt sum = 0;
    for (int m = 0; m <= n; ++m)
      sum += gaussian_binomial(n, m);
    CHECK(sum == totals[n]);
  }
  // symmetry [n m] = [n n-m]
  for (int n = 0; n <= 20; ++n)
    for (int m = 0; m <= n; ++m)
      CHECK(gaussian_binomial(n, m) == gaussian_binomial(n, n - m));
  CHECK_THROWS_AS(gaussian_binomial(65, 1), PreconditionError);
  CHECK_THROWS_AS(gaussian_binomial(3, -1), PreconditionError);
  CHECK_THROWS_AS(gaussian_binomial(3, 4), PreconditionError);
}

TEST_CASE("enumerate_subspaces matches closure oracle") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= n; ++m) {
      auto subs = enumerate_subspaces(n, m);
      std::set<std::vector<Elem>> got;
      std::unordered_set<Subspace, SubspaceHash> uniq;
      for (const auto &s : subs) {
        CHECK(s.dim() == m);
        got.insert(s.members().elements());
        uniq.insert(s);
      }
      CHECK(uniq.size() == subs.size());
      CHECK(got == testing::naive_subspaces(n, m));
    }
}

TEST_CASE("for_each_subspace respects the budget") {
  CHECK_THROWS_AS(for_each_subspace(6, 3, [](const Subspace &) {}, 10), BudgetExceeded);
  std::size_t count = 0;
  for_each_subspace(6, 3, [&](const Subspace &) { ++count; }, 2000);
  CHECK(count == 1395);
}

TEST_CASE("cosets partition the space") {
  Subspace V = Subspace::span_of(3, std::vector<Elem>{1});
  auto cs = cosets(V);
  REQUIRE(cs.size() == 4);
  std::vector<Elem> labels;
  ElemSet all(3);
  for (const auto &c : cs) {
    labels.push_back(c.label);
    CHECK(c.members.size() == 2);
    CHECK((all & c.members).empty());
    all |= c.members;
  }
  CHECK(labels == std::vector<Elem>{0, 2, 4, 6});
  CHECK(all == ElemSet::full(3));

  auto whole = cosets(Subspace::span_of(2, std::vector<Elem>{1, 2}));
  CHECK(whole.size() == 1);
  CHECK(cosets(Subspace(2)).size() == 4);
}
