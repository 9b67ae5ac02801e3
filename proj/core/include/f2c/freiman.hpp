#pragma once

#include "f2c/gf2core.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace f2c {

enum class FreimanMethod { brute_force, universal_model };

const char *to_string(FreimanMethod m);

/// r(X): the largest r such that X is Freiman-isomorphic to a subset of F_2^r
/// whose affine hull is all of F_2^r.
struct FreimanResult {
  int r = 0;
  /// Image of X.elements() (same order) inside F_2^r.
  std::vector<Elem> witness;
  FreimanMethod method = FreimanMethod::brute_force;
};

/// Largest set size accepted by is_freiman_isomorphic.
inline constexpr std::size_t kMaxIsoSetSize = 8;
/// Largest set size for the brute-force dimension search.
inline constexpr std::size_t kMaxBruteDimSetSize = 6;
/// Largest set size for the universal-model rank computation.
inline constexpr std::size_t kMaxUniversalSetSize = 20;

/// True iff some bijection X -> Y satisfies
/// x1 + x2 = x3 + x4  <=>  f(x1) + f(x2) = f(x3) + f(x4).
/// X and Y may live in different ambient dimensions.
bool is_freiman_isomorphic(const ElemSet &X, const ElemSet &Y);

/// Checks that `image` (indexed like `points`) is injective and preserves
/// additive quadruples in both directions.
bool preserves_quadruples(std::span<const Elem> points, std::span<const Elem> image);

/// Dimension of the affine hull of the given points (0 for a single point).
int affine_dimension(std::span<const Elem> points);

/// Brute force for |X| <= 6 (authoritative); the universal-model rank is used
/// above that, up to |X| <= 20.
FreimanResult freiman_dimension(const ElemSet &X);

/// Exhaustive search over injections into F_2^r, r = k-1 downward, with images
/// normalised up to translation and GL(r).
FreimanResult freiman_dimension_brute(const ElemSet &X);

/// Rank of the free F_2-space on X modulo all additive-quadruple relations.
FreimanResult freiman_dimension_universal(const ElemSet &X);

struct DimBoundReport {
  int r = 0;
  std::size_t k = 0;
  std::size_t l = 0; // |X + X|
  long double bound = 0;
  bool holds = false;
};

/// r(X) <= log2 k + 2l/k with l = |X+X|. Requires |X| <= 6.
DimBoundReport check_dim_bound(const ElemSet &X);

struct EvenZoharReport {
  std::size_t k = 0;
  long double K = 0;
  std::uint64_t span_size = 0;
  long double bound = 0;
  bool holds = false;
};

/// |span(X u {0})| <= 4^K k / (2K) with K = |X+X|/k.
EvenZoharReport check_even_zohar(const ElemSet &X);

/// Number of k-subsets of F_2^n by restricted doubling l = |X ^+ X|.
struct SklCensus {
  int n = 0;
  int k = 0;
  std::map<std::size_t, std::uint64_t> counts;
  BigInt total;
  /// sum_l counts[l] * 2^-l
  Rational union_bound;
};

SklCensus census_skl(int n, int k, unsigned threads = 1,
                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Rows n,k,l,count,union_bound_term with a header line.
std::string census_to_csv(const SklCensus &c);

enum class TailRegime {
  large_l,    // l >= k^(31/30): N^(r+1) k^(4k) 2^-l
  moderate_l, // l <  k^(31/30): N^(r+1) (el/k)^k e^(k^(31/32)) 2^-l
};

const char *to_string(TailRegime r);

struct TailExponent {
  long double log2_bound = 0;
  TailRegime regime = TailRegime::large_l;
  long double freiman_dim_bound = 0; // log2 k + 2(l+1)/k
};

/// log2 of the bound on |S_k^l| 2^-l in F_2^n (N = 2^n) with the Freiman
/// dimension bounded by log2 k + 2(l+1)/k. Requires k >= 2 and l >= 10k.
TailExponent tail_exponent(long double n, long double k, long double l);

struct FamilyCoverReport {
  int n = 0;
  int k = 0;
  int k_prime = 0;
  std::uint64_t sets_checked = 0;
  std::vector<ElemSet> failures;
  /// Upper bound on the size of the almost-coset family for these parameters.
  BigInt family_size_bound;
};

/// For each k-subset X of F_2^n, looks for a union F of almost-cosets (a coset
/// of V minus at most eps^3 |V| elements) of some subspace V of codimension
/// <= d with F inside X + X and |F| >= (2 - eps) k'. Report-only.
FamilyCoverReport family_cover_probe(int n, int k, double eps, int d,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace f2c
