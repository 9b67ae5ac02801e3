#include "doctest.h"
#include "oracles.hpp"

#include "f2c/freiman.hpp"
#include "f2c/sumset.hpp"

#include <cmath>
#include <random>

using namespace f2c;

namespace {

void check_witness(const ElemSet &X, const FreimanResult &res) {
  auto pts = X.elements();
  REQUIRE(res.witness.size() == pts.size());
  CHECK(preserves_quadruples(pts, res.witness));
  CHECK(affine_dimension(res.witness) == res.r);
  for (Elem w : res.witness)
    CHECK((w >> res.r) == 0);
}

} // namespace

TEST_CASE("affine dimension") {
  CHECK(affine_dimension(std::vector<Elem>{5}) == 0);
  CHECK(affine_dimension(std::vector<Elem>{1, 2}) == 1);
  CHECK(affine_dimension(std::vector<Elem>{1, 2, 3}) == 2);
  CHECK(affine_dimension(std::vector<Elem>{0, 1, 2, 4}) == 3);
  CHECK_THROWS_AS(affine_dimension(std::vector<Elem>{}), PreconditionError);
}

TEST_CASE("freiman isomorphism examples") {
  CHECK_FALSE(is_freiman_isomorphic(ElemSet(3, {0, 1, 2, 3}), ElemSet(3, {0, 1, 2, 4})));
  CHECK(is_freiman_isomorphic(ElemSet(3, {0, 1, 2, 3}), ElemSet(4, {8, 9, 12, 13})));
  CHECK(is_freiman_isomorphic(ElemSet(3, {0, 1, 2}), ElemSet(5, {3, 17, 30})));
  CHECK_THROWS_AS(is_freiman_isomorphic(ElemSet(3, {0}), ElemSet(3, {0, 1})), PreconditionError);
}

TEST_CASE("freiman dimension on spec examples") {
  auto square = freiman_dimension(ElemSet(2, {0, 1, 2, 3}));
  CHECK(square.r == 2);
  CHECK(square.method == FreimanMethod::brute_force);
  check_witness(ElemSet(2, {0, 1, 2, 3}), square);

  auto tri = freiman_dimension(ElemSet(2, {0, 1, 2}));
  CHECK(tri.r == 2);
  check_witness(ElemSet(2, {0, 1, 2}), tri);

  CHECK(freiman_dimension(ElemSet(3, {6})).r == 0);
  CHECK(freiman_dimension(ElemSet(3, {1, 6})).r == 1);
  CHECK_THROWS_AS(freiman_dimension(ElemSet(3)), PreconditionError);
}

TEST_CASE("affinely independent sets have r = k - 1") {
  for (int k = 1; k <= 6; ++k) {
    ElemSet X(6);
    X.insert(0);
    for (int i = 0; i + 1 < k; ++i)
      X.insert(Elem{1} << i);
    auto res = freiman_dimension_brute(X);
    CHECK(res.r == k - 1);
    check_witness(X, res);
  }
}

TEST_CASE("affine subspaces have r equal to their dimension") {
  CHECK(freiman_dimension(ElemSet::full(3)).r == 3);
  CHECK(freiman_dimension(ElemSet(4, {5, 4, 7, 6, 13, 12, 15, 14})).r == 3);
  CHECK(freiman_dimension_universal(ElemSet::full(4)).r == 4);
}

TEST_CASE("brute force and universal model agree on random sets") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + trial % 3;
    const std::size_t k = 1 + trial % 6;
    ElemSet X = testing::random_set_of_size(rng, n, k);
    auto b = freiman_dimension_brute(X);
    auto u = freiman_dimension_universal(X);
    CHECK(b.r == u.r);
    check_witness(X, b);
    check_witness(X, u);
  }
}

TEST_CASE("universal path handles larger sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    ElemSet X = testing::random_set_of_size(rng, 6, 7 + trial % 10);
    auto res = freiman_dimension(X);
    CHECK(res.method == FreimanMethod::universal_model);
    check_witness(X, res);
    CHECK(res.r >= affine_dimension(X.elements()));
  }
  CHECK_THROWS_AS(freiman_dimension(ElemSet::full(5)), PreconditionError);
}

TEST_CASE("dimension bound check") {
  auto rep = check_dim_bound(ElemSet(2, {0, 1, 2}));
  CHECK(rep.r == 2);
  CHECK(rep.l == 4);
  CHECK(static_cast<double>(rep.bound) == doctest::Approx(std::log2(3.0) + 8.0 / 3.0));
  CHECK(rep.holds);
  CHECK_THROWS_AS(check_dim_bound(ElemSet::full(3)), PreconditionError);
}

TEST_CASE("even-zohar bound") {
  auto pair = check_even_zohar(ElemSet(3, {1, 2}));
  CHECK(pair.span_size == 4);
  CHECK(static_cast<double>(pair.bound) == doctest::Approx(4.0));
  CHECK(pair.holds);

  // Three independent vectors: K = 4/3 and 4^K k / (2K) = 7.143 < 8.
  auto basis = check_even_zohar(ElemSet(3, {1, 2, 4}));
  CHECK(basis.k == 3);
  CHECK(basis.span_size == 8);
  CHECK(static_cast<double>(basis.K) == doctest::Approx(4.0 / 3.0));
  CHECK(static_cast<double>(basis.bound) == doctest::Approx(7.1433).epsilon(1e-4));
  CHECK_FALSE(basis.holds);

  auto sub = check_even_zohar(ElemSet(3, {0, 1, 2, 3}));
  CHECK(sub.span_size == 4);
  CHECK(static_cast<double>(sub.bound) == doctest::Approx(8.0));
}

TEST_CASE("census matches frozen counts") {
  auto c22 = census_skl(2, 2);
  CHECK(c22.counts == std::map<std::size_t, std::uint64_t>{{1, 6}});
  CHECK(c22.union_bound == Rational(3));

  auto c23 = census_skl(2, 3);
  CHECK(c23.counts == std::map<std::size_t, std::uint64_t>{{3, 4}});
  CHECK(c23.union_bound == Rational(1, 2));

  auto c33 = census_skl(3, 3);
  CHECK(c33.counts == std::map<std::size_t, std::uint64_t>{{3, 56}});
  CHECK(c33.union_bound == Rational(7));

  auto c34 = census_skl(3, 4);
  CHECK(c34.counts == std::map<std::size_t, std::uint64_t>{{3, 14}, {6, 56}});
  CHECK(c34.union_bound == Rational(21, 8));
  CHECK(c34.total == 70);

  auto c43 = census_skl(4, 3);
  CHECK(c43.counts == std::map<std::size_t, std::uint64_t>{{3, 560}});
  CHECK(c43.union_bound == Rational(70));

  auto c44 = census_skl(4, 4, 3);
  CHECK(c44.counts == std::map<std::size_t, std::uint64_t>{{3, 140}, {6, 1680}});
  CHECK(c44.union_bound == Rational(175, 4));
}

TEST_CASE("census agrees with bitmask enumeration and across thread counts") {
  const int n = 3;
  for (int k = 1; k <= 8; ++k) {
    std::map<std::size_t, std::uint64_t> oracle;
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
      if (std::popcount(mask) != k)
        continue;
      ElemSet X(n);
      for (Elem x = 0; x < 8; ++x)
        if ((mask >> x) & 1u)
          X.insert(x);
      ++oracle[restricted_sumset(X, X).size()];
    }
    CHECK(census_skl(n, k, 1).counts == oracle);
    CHECK(census_skl(n, k, 4).counts == oracle);
  }
  CHECK_THROWS_AS(census_skl(10, 6, 1, 1000), BudgetExceeded);
  CHECK_THROWS_AS(census_skl(3, 9), PreconditionError);
}

TEST_CASE("census csv") {
  auto csv = census_to_csv(census_skl(3, 4));
  CHECK(csv == "n,k,l,count,union_bound_term\n3,4,3,14,7/4\n3,4,6,56,7/8\n");
}

TEST_CASE("tail exponent") {
  auto t = tail_exponent(4, 2, 20);
  CHECK(t.regime == TailRegime::large_l);
  CHECK(static_cast<double>(t.log2_bound) == doctest::Approx(80.0));
  CHECK(static_cast<double>(t.freiman_dim_bound) == doctest::Approx(22.0));

  const long double k = 10240;
  auto at_sq = tail_exponent(1024, k, k * k);
  CHECK(static_cast<double>(at_sq.log2_bound) == doctest::Approx(-83325747.9708642).epsilon(1e-9));
  auto at_nk = tail_exponent(1024, k, 1024 * k);
  CHECK(static_cast<double>(at_nk.log2_bound) == doctest::Approx(-7828275.9708642).epsilon(1e-9));
  auto at_10k = tail_exponent(1024, k, 10 * k);
  CHECK(static_cast<double>(at_10k.log2_bound) == doctest::Approx(478412.029135751).epsilon(1e-9));

  // The moderate branch is reachable only for k > 10^30.
  auto mod = tail_exponent(20, 1e40L, 1e41L);
  CHECK(mod.regime == TailRegime::moderate_l);

  CHECK_THROWS_AS(tail_exponent(10, 1, 100), PreconditionError);
  CHECK_THROWS_AS(tail_exponent(10, 100, 999), PreconditionError);
}

TEST_CASE("family cover probe") {
  auto rep = family_cover_probe(4, 5, 0.5, 2);
  CHECK(rep.sets_checked == 4368);
  CHECK(rep.failures.empty());
  CHECK(rep.k_prime == 4);
  CHECK_THROWS_AS(family_cover_probe(5, 3, 0.5, 1), PreconditionError);
  CHECK_THROWS_AS(family_cover_probe(4, 8, 0.5, 1, 100), BudgetExceeded);
}
