#include "doctest.h"
#include "oracles.hpp"

#include "f2c/cliquechrom.hpp"

#include <random>

using namespace f2c;

namespace {

std::uint64_t naive_subspace_count(const ElemSet &A, int m) {
  std::uint64_t count = 0;
  for (const auto &members : testing::naive_subspaces(A.dim(), m)) {
    bool ok = true;
    for (Elem h : members)
      if (h != 0 && !A.contains(h))
        ok = false;
    count += ok;
  }
  return count;
}

ElemSet punctured(const Subspace &H) {
  ElemSet A = H.members();
  A.erase(0);
  return A;
}

} // namespace

TEST_CASE("clique and independence predicates") {
  auto G = from_generators(3, ElemSet(3, {1, 2, 3}));
  CHECK(is_clique(G, ElemSet(3, {0, 1, 2, 3})));
  CHECK_FALSE(is_clique(G, ElemSet(3, {0, 4})));
  CHECK(is_independent(G, ElemSet(3, {0, 4})));
  CHECK(is_clique(G, ElemSet(3)));
  CHECK_THROWS_AS(is_clique(G, ElemSet(4)), PreconditionError);
}

TEST_CASE("max clique equals naive all-subsets maximum") {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      ElemSet A = testing::random_set(rng, n, 0.2 + 0.15 * (trial % 5));
      A.erase(0);
      auto G = from_generators(n, A);
      auto res = max_clique(G);
      CHECK(res.optimal);
      CHECK(res.size == testing::naive_clique_number(A));
      CHECK(res.upper_bound == res.size);
      CHECK(res.witness.size() == res.size);
      CHECK(res.witness.contains(0));
      CHECK(is_clique(G, res.witness));
    }
}

TEST_CASE("clique of a punctured subspace") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m <= n; ++m)
      for (const auto &H : enumerate_subspaces(n, m)) {
        auto res = max_clique_of_generators(punctured(H));
        CHECK(res.size == (std::size_t{1} << m));
        CHECK(res.method == CliqueMethod::subspace_seeded);
      }
}

TEST_CASE("edge cases") {
  auto empty = max_clique(from_generators(3, ElemSet(3)));
  CHECK(empty.size == 1);
  CHECK(empty.optimal);
  auto complete = max_clique(from_generators(4, ElemSet::full(4)));
  CHECK(complete.size == 16);
  auto alpha = independence_number(from_generators(4, ElemSet::full(4)));
  CHECK(alpha.size == 1);
}

TEST_CASE("budget exhaustion reports a lower bound") {
  auto G = sample_cayley(10, 3);
  auto res = max_clique(G, 5);
  CHECK_FALSE(res.optimal);
  CHECK(res.method == CliqueMethod::budget_exhausted);
  CHECK(res.upper_bound >= res.size);
  CHECK(is_clique(G, res.witness));
  auto full = max_clique(G);
  CHECK(full.optimal);
  CHECK(full.size >= res.size);
  CHECK(full.size <= res.upper_bound);
}

TEST_CASE("largest subspace clique") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    ElemSet A = testing::random_set(rng, n, 0.6);
    Subspace H = largest_subspace_clique(A);
    ElemSet members = H.members();
    members.erase(0);
    CHECK(members.is_subset_of(A));
    int best = 0;
    for (int m = 0; m <= n; ++m)
      if (naive_subspace_count(A, m) > 0)
        best = m;
    CHECK(H.dim() == best);
  }
}

TEST_CASE("subspace clique counts match closure oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    ElemSet A = testing::random_set(rng, n, 0.7);
    A.erase(0);
    auto rep = subspace_cliques(A);
    CHECK_FALSE(rep.partial);
    CHECK(rep.counts[0] == 1);
    for (int m = 0; m <= n; ++m) {
      const std::uint64_t got = m < static_cast<int>(rep.counts.size()) ? rep.counts[m] : 0;
      CHECK(got == naive_subspace_count(A, m));
    }
    CHECK(rep.max_dim == largest_subspace_clique(A).dim());
  }
  auto full = subspace_cliques(ElemSet::full(4));
  CHECK(full.counts == std::vector<std::uint64_t>{1, 15, 35, 15, 1});
  auto capped = subspace_cliques(ElemSet::full(4), 2);
  CHECK(capped.counts == std::vector<std::uint64_t>{1, 15, 35});
  auto tight = subspace_cliques(ElemSet::full(5), -1, 20);
  CHECK(tight.partial);
  CHECK(tight.counts == std::vector<std::uint64_t>{1});
}

TEST_CASE("coset colouring") {
  auto G = from_generators(3, ElemSet(3, {1, 2, 3}));
  Subspace V = Subspace::span_of(3, std::vector<Elem>{4});
  auto c = coset_coloring(G, V);
  CHECK(c.num_colors == 4);
  CHECK(is_proper_coloring(G, c));
  try {
    coset_coloring(G, Subspace::span_of(3, std::vector<Elem>{1}));
    FAIL("expected PreconditionError");
  } catch (const PreconditionError &e) {
    CHECK(std::string(e.what()).find("vertices 0 and 1") != std::string::npos);
  }
}

TEST_CASE("dsatur and proper-colouring checker") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 8; ++n) {
    auto G = from_generators(n, testing::random_set(rng, n));
    auto c = dsatur_coloring(G);
    CHECK(is_proper_coloring(G, c));
    if (c.num_colors > 1) {
      auto bad = c;
      bad.color.assign(G.order(), 0);
      CHECK_FALSE(is_proper_coloring(G, bad));
    }
  }
}

TEST_CASE("chromatic bracket contains the exact chromatic number") {
  std::mt19937_64 rng(404);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      ElemSet A = testing::random_set(rng, n, 0.2 + 0.15 * (trial % 5));
      A.erase(0);
      auto G = from_generators(n, A);
      auto b = chromatic_bracket(G);
      const auto chi = testing::naive_chromatic_number(A);
      CHECK(b.lower <= chi);
      CHECK(chi <= b.upper);
      REQUIRE(b.exact.has_value());
      CHECK(*b.exact == chi);
      CHECK(b.best.num_colors == chi);
      CHECK(is_proper_coloring(G, b.best));
    }
}

TEST_CASE("chromatic number of a punctured subspace") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 0; m <= n; ++m)
      for (const auto &H : enumerate_subspaces(n, m)) {
        auto b = chromatic_bracket(from_generators(n, punctured(H)));
        REQUIRE(b.exact.has_value());
        CHECK(*b.exact == (std::size_t{1} << m));
      }
}

TEST_CASE("bracket above the exact range") {
  auto G = sample_cayley(7, 11);
  auto b = chromatic_bracket(G);
  CHECK_FALSE(b.exact.has_value());
  CHECK(b.lower <= b.upper);
  CHECK(b.best.num_colors == b.upper);
  CHECK(is_proper_coloring(G, b.best));
  CHECK(b.lower >= b.omega.size);
}

TEST_CASE("translated clique witnesses stay cliques") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto G = sample_cayley(6, seed);
    auto res = max_clique(G);
    for (Elem t = 0; t < G.order(); t += 7)
      CHECK(is_clique(G, res.witness.translated(t)));
  }
}

TEST_CASE("X containing 0 spans a clique iff its restricted sumset lies in A") {
  auto agree = [](int n, const ElemSet &A, const ElemSet &X) {
    const auto G = from_generators(n, A);
    bool sums_in_A = true;
    for (Elem x : X.elements())
      for (Elem y : X.elements())
        if (x != y && !A.contains(x ^ y))
          sums_in_A = false;
    return is_clique(G, X) == sums_in_A;
  };
  for (int n = 2; n <= 3; ++n) {
    const std::uint32_t V = 1u << n;
    for (std::uint32_t a = 0; a < (1u << (V - 1)); ++a) {
      ElemSet A(n);
      for (Elem x = 1; x < V; ++x)
        if ((a >> (x - 1)) & 1u)
          A.insert(x);
      for (std::uint32_t s = 0; s < (1u << (V - 1)); ++s) {
        ElemSet X(n, {0});
        for (Elem x = 1; x < V; ++x)
          if ((s >> (x - 1)) & 1u)
            X.insert(x);
        CHECK(agree(n, A, X));
      }
    }
  }
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 20; ++trial) {
    ElemSet A = testing::random_set(rng, 4, 0.7);
    A.erase(0);
    for (std::uint32_t s = 0; s < (1u << 15); s += 1 + trial) {
      ElemSet X(4, {0});
      for (Elem x = 1; x < 16; ++x)
        if ((s >> (x - 1)) & 1u)
          X.insert(x);
      CHECK(agree(4, A, X));
    }
  }
}
