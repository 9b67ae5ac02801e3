#include "f2c/moments.hpp"

#include "f2c/experiments.hpp"
#include "f2c/gf2core.hpp"

#include <sstream>

namespace f2c {

namespace {

constexpr int kMaxMomentDim = 64;
// 2^-(2^m - 1) needs a 2^m-bit denominator.
constexpr int kMaxExactMomentM = 24;

void check_nm(int n, int m, const char *op) {
  require(n >= 0 && n <= kMaxMomentDim, std::string(op) + ": n out of range [0, 64]");
  require(m >= 0 && m <= n, std::string(op) + ": m out of range [0, n]");
}

} // namespace

BigInt pairs_by_intersection(int n, int m, int j) {
  check_nm(n, m, "pairs_by_intersection");
  require(j >= 0 && j <= m, "pairs_by_intersection: j out of range [0, m]");
  if (m - j > n - m)
    return 0;
  // Choose H, then J inside H, then H' meeting H exactly in J.
  BigInt r = gaussian_binomial(n, m) * gaussian_binomial(m, j);
  r <<= static_cast<unsigned>((m - j) * (m - j));
  r *= gaussian_binomial(n - m, m - j);
  return r;
}

Rational expected_M(int n, int m) {
  check_nm(n, m, "expected_M");
  require(m <= kMaxExactMomentM, "expected_M: m above 24");
  const long long nonzero = (1LL << m) - 1;
  return Rational(gaussian_binomial(n, m)) * pow2(-nonzero);
}

Rational variance_M(int n, int m) {
  check_nm(n, m, "variance_M");
  require(m <= kMaxExactMomentM, "variance_M: m above 24");
  Rational second = 0;
  for (int j = 0; j <= m; ++j) {
    // |(H u H') \ {0}| = 2^(m+1) - 2^j - 1
    const long long union_nonzero = (1LL << (m + 1)) - (1LL << j) - 1;
    second += Rational(pairs_by_intersection(n, m, j)) * pow2(-union_nonzero);
  }
  const Rational e = expected_M(n, m);
  return second - e * e;
}

MomentReport moment_report(int n, int m) {
  check_nm(n, m, "moment_report");
  MomentReport r;
  r.n = n;
  r.m = m;
  r.E_M = expected_M(n, m);
  r.Var_M = variance_M(n, m);
  const long long N = n, M = m;
  r.E_lb = pow2(N * M - M * M - (1LL << m));
  r.Var_ub = 0;
  for (long long l = 1; l <= M; ++l)
    r.Var_ub += pow2(2 * M * N - (1LL << (m + 1)) + (1LL << l) - N * l);
  r.Var_ub *= 2;
  r.chebyshev = r.E_M > 0 ? r.Var_M / (r.E_M * r.E_M) : Rational(0);
  r.cheb_ub = Rational(8 * M) * pow2(2 * M * M - N);
  r.holds_E = r.E_M >= r.E_lb;
  r.holds_Var = r.Var_M <= r.Var_ub;
  r.holds_cheb = r.chebyshev <= r.cheb_ub;
  return r;
}

std::string moment_csv_header() {
  return "n,m,E_M,Var_M,E_lb,Var_ub,chebyshev,cheb_ub,holds_E,holds_Var,holds_cheb";
}

std::string moment_csv_row(const MomentReport &r) {
  std::ostringstream os;
  os << r.n << ',' << r.m << ',' << to_string(r.E_M) << ',' << to_string(r.Var_M) << ','
     << to_string(r.E_lb) << ',' << to_string(r.Var_ub) << ','
     << to_string(r.chebyshev) << ',' << to_string(r.cheb_ub) << ',' << r.holds_E << ','
     << r.holds_Var << ',' << r.holds_cheb;
  return os.str();
}

EqknCheck eqkn_value(std::uint64_t n, int m) {
  require(m >= 0 && m < 4096, "eqkn_value: m out of range");
  EqknCheck c;
  c.m = m;
  c.value = (BigInt(1) << m) - BigInt(n) * (m - 1) - 2;
  c.nonpositive = c.value <= 0;
  return c;
}

EqknReport eqkn_check(std::uint64_t n) {
  require(n >= 2, "eqkn_check: requires n >= 2");
  EqknReport r;
  r.n = n;
  const int m = static_cast<int>(classify_n(n, 0.0).m_pred);
  r.at_m = eqkn_value(n, m);
  r.at_m_plus = eqkn_value(n, m + 1);
  return r;
}

} // namespace f2c
