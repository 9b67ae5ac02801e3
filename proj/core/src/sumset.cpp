#include "f2c/sumset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace f2c {

namespace {

void same_dim(const ElemSet &X, const ElemSet &Y, const char *op) {
  require(X.dim() == Y.dim(), std::string(op) + ": dimension mismatch");
}

} // namespace

ElemSet sumset(const ElemSet &X, const ElemSet &Y) {
  same_dim(X, Y, "sumset");
  ElemSet out(X.dim());
  const auto xs = X.elements();
  Y.for_each([&](Elem y) {
    for (Elem x : xs)
      out.insert(x ^ y);
  });
  return out;
}

ElemSet restricted_sumset(const ElemSet &X, const ElemSet &Y) {
  same_dim(X, Y, "restricted_sumset");
  ElemSet out(X.dim());
  const auto xs = X.elements();
  Y.for_each([&](Elem y) {
    for (Elem x : xs)
      if (x != y)
        out.insert(x ^ y);
  });
  return out;
}

Subspace sym(const ElemSet &S) {
  require(!S.empty(), "sym: empty set");
  const auto elems = S.elements();
  const Elem s0 = elems.front();
  Subspace out(S.dim());
  // g + s0 must lie in S, so g ranges over s0 + S.
  for (Elem s : elems) {
    const Elem g = s ^ s0;
    if (g == 0 || out.contains(g))
      continue;
    bool stable = std::all_of(elems.begin(), elems.end(),
                              [&](Elem x) { return S.contains(x ^ g); });
    if (stable)
      out.insert(g);
  }
  return out;
}

InequalityReport kneser_check(const ElemSet &A, const ElemSet &B) {
  require(!A.empty() && !B.empty(), "kneser_check: empty input");
  same_dim(A, B, "kneser_check");
  const ElemSet AB = sumset(A, B);
  InequalityReport r;
  r.lhs = static_cast<long long>(AB.size());
  r.rhs = static_cast<long long>(A.size() + B.size()) -
          static_cast<long long>(sym(AB).size());
  r.holds = r.lhs >= r.rhs;
  return r;
}

InequalityReport sandwich_check(const ElemSet &A, const ElemSet &B, std::size_t m) {
  require(!A.empty(), "sandwich_check: A empty");
  require(m >= 1 && std::has_single_bit(m), "sandwich_check: m must be a power of 2");
  require(B.size() > m, "sandwich_check: requires |B| > m");
  same_dim(A, B, "sandwich_check");
  InequalityReport r;
  r.lhs = static_cast<long long>(sumset(A, B).size());
  r.rhs = static_cast<long long>(std::min(A.size() + m, 2 * m));
  r.holds = r.lhs >= r.rhs;
  return r;
}

DoublingStats doubling_stats(const ElemSet &X) {
  require(!X.empty(), "doubling_stats: empty set");
  DoublingStats d;
  d.k = X.size();
  d.sum_size = sumset(X, X).size();
  d.restricted_size = restricted_sumset(X, X).size();
  d.ratio = static_cast<double>(d.sum_size) / static_cast<double>(d.k);
  if (d.sum_size != d.restricted_size + 1)
    throw std::logic_error("doubling_stats: |X+X| != |X^X| + 1");
  return d;
}

} // namespace f2c
