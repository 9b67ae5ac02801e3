#include "doctest.h"
#include "oracles.hpp"

#include "f2c/sumset.hpp"

#include <random>

using namespace f2c;

namespace {

ElemSet naive_sumset(const ElemSet &X, const ElemSet &Y, bool restricted) {
  ElemSet out(X.dim());
  for (Elem x : X.elements())
    for (Elem y : Y.elements())
      if (!restricted || x != y)
        out.insert(x ^ y);
  return out;
}

} // namespace

TEST_CASE("small sumsets") {
  ElemSet X(2, {0, 1, 2});
  CHECK(sumset(X, X) == ElemSet::full(2));
  CHECK(restricted_sumset(X, X).elements() == std::vector<Elem>{1, 2, 3});
  CHECK(sym(X) == Subspace(2));
  CHECK(sym(ElemSet::full(3)).dim() == 3);
  CHECK(sym(ElemSet(3, {2, 3, 6, 7})).members().elements() == std::vector<Elem>{0, 1, 4, 5});
  CHECK_THROWS_AS(sym(ElemSet(3)), PreconditionError);
  CHECK(sumset(ElemSet(3), X.dim() == 2 ? ElemSet(3, {1}) : ElemSet(3)).empty());
}

TEST_CASE("sumsets agree with the pairwise oracle") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    ElemSet X = testing::random_set(rng, n, 0.3);
    ElemSet Y = testing::random_set(rng, n, 0.3);
    CHECK(sumset(X, Y) == naive_sumset(X, Y, false));
    CHECK(restricted_sumset(X, Y) == naive_sumset(X, Y, true));
    if (!X.empty()) {
      ElemSet S = sumset(X, Y);
      if (!S.empty()) {
        Subspace H = sym(S);
        H.members().for_each([&](Elem g) { CHECK(S.translated(g) == S); });
      }
    }
  }
}

TEST_CASE("kneser on the spec example") {
  ElemSet A(2, {0, 1, 2});
  auto r = kneser_check(A, A);
  CHECK(r.lhs == 4);
  CHECK(r.rhs == 2);
  CHECK(r.holds);
  CHECK_THROWS_AS(kneser_check(ElemSet(2), A), PreconditionError);
}

TEST_CASE("sandwich preconditions and values") {
  ElemSet A(3, {0, 1});
  ElemSet B(3, {0, 2, 4});
  auto r = sandwich_check(A, B, 2);
  CHECK(r.lhs == static_cast<long long>(sumset(A, B).size()));
  CHECK(r.rhs == 4);
  CHECK(r.holds);
  CHECK_THROWS_AS(sandwich_check(A, B, 3), PreconditionError);
  CHECK_THROWS_AS(sandwich_check(A, B, 4), PreconditionError);
  CHECK_THROWS_AS(sandwich_check(ElemSet(3), B, 1), PreconditionError);
}

TEST_CASE("doubling identity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 9;
    ElemSet X = testing::random_set(rng, n, 0.2);
    if (X.empty())
      X.insert(0);
    auto s = doubling_stats(X);
    CHECK(s.sum_size == s.restricted_size + 1);
    CHECK(s.ratio == doctest::Approx(double(s.sum_size) / double(s.k)));
  }
  CHECK_THROWS_AS(doubling_stats(ElemSet(3)), PreconditionError);
  auto one = doubling_stats(ElemSet(3, {5}));
  CHECK(one.sum_size == 1);
  CHECK(one.restricted_size == 0);
}
