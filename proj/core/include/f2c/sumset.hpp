#pragma once

#include "f2c/gf2core.hpp"

#include <cstddef>

namespace f2c {

/// {x + y : x in X, y in Y}.
ElemSet sumset(const ElemSet &X, const ElemSet &Y);

/// {x + y : x in X, y in Y, x != y}. For X = Y this is (X + X) \ {0}.
ElemSet restricted_sumset(const ElemSet &X, const ElemSet &Y);

/// Stabilizer {g : g + S = S}. S must be nonempty.
Subspace sym(const ElemSet &S);

struct InequalityReport {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

/// |A+B| >= |A| + |B| - |Sym(A+B)|.
InequalityReport kneser_check(const ElemSet &A, const ElemSet &B);

/// |A+B| >= min(|A| + m, 2m) for |B| > m, m a power of two.
InequalityReport sandwich_check(const ElemSet &A, const ElemSet &B, std::size_t m);

struct DoublingStats {
  std::size_t k = 0;
  std::size_t sum_size = 0;
  std::size_t restricted_size = 0;
  double ratio = 0.0;
};

DoublingStats doubling_stats(const ElemSet &X);

} // namespace f2c
