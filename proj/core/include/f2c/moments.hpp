#pragma once

#include "f2c/numeric.hpp"

#include <string>

namespace f2c {

/// Ordered pairs (H, H') of m-dimensional subspaces of F_2^n with
/// dim(H n H') = j. Closed form: [n m] [m j] 2^((m-j)^2) [n-m, m-j].
BigInt pairs_by_intersection(int n, int m, int j);

/// E[M] = [n m] 2^-(2^m - 1) for M = #{m-dim H : H \ {0} inside A}.
Rational expected_M(int n, int m);

/// Var[M] = sum_j pairs(n,m,j) 2^-(2^(m+1) - 2^j - 1) - E[M]^2.
Rational variance_M(int n, int m);

struct MomentReport {
  int n = 0;
  int m = 0;
  Rational E_M;
  Rational Var_M;
  Rational E_lb;      // 2^(nm - m^2 - 2^m)
  Rational Var_ub;    // 2 sum_{l=1}^m 2^(2mn - 2^(m+1) + 2^l - nl)
  Rational chebyshev; // Var / E^2
  Rational cheb_ub;   // 8m 2^(2m^2 - n)
  bool holds_E = false;
  bool holds_Var = false;
  bool holds_cheb = false;
};

MomentReport moment_report(int n, int m);

std::string moment_csv_header();
std::string moment_csv_row(const MomentReport &r);

struct EqknCheck {
  int m = 0;
  BigInt value; // 2^m - n(m-1) - 2
  bool nonpositive = false;
};

EqknCheck eqkn_value(std::uint64_t n, int m);

struct EqknReport {
  std::uint64_t n = 0;
  EqknCheck at_m;      // m = floor(log2 n + log2 log2 n)
  EqknCheck at_m_plus; // m + 1
};

/// Requires n >= 2.
EqknReport eqkn_check(std::uint64_t n);

} // namespace f2c
