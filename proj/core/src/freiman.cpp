#include "f2c/freiman.hpp"

#include "f2c/sumset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace f2c {

const char *to_string(FreimanMethod m) {
  switch (m) {
  case FreimanMethod::brute_force:
    return "brute-force";
  case FreimanMethod::universal_model:
    return "universal-model";
  }
  return "?";
}

const char *to_string(TailRegime r) {
  switch (r) {
  case TailRegime::large_l:
    return "large_l";
  case TailRegime::moderate_l:
    return "moderate_l";
  }
  return "?";
}

namespace {

// Checks the pairs introduced by assigning index t against every pair among
// indices 0..t. Indices below t are assumed consistent already.
bool consistent_with_new(std::span<const Elem> x, std::span<const Elem> y, std::size_t t) {
  for (std::size_t i = 0; i < t; ++i) {
    if (y[i] == y[t])
      return false;
    const Elem sx = x[i] ^ x[t];
    const Elem sy = y[i] ^ y[t];
    for (std::size_t q = 1; q <= t; ++q) {
      for (std::size_t p = 0; p < q; ++p) {
        if (p == i && q == t)
          continue;
        const bool eq_x = (x[p] ^ x[q]) == sx;
        const bool eq_y = (y[p] ^ y[q]) == sy;
        if (eq_x != eq_y)
          return false;
      }
    }
  }
  return true;
}

class IsoSearch {
public:
  IsoSearch(std::vector<Elem> xs, std::vector<Elem> ys)
      : x_(std::move(xs)), targets_(std::move(ys)), y_(x_.size()),
        used_(targets_.size(), false) {}

  bool run() { return assign(0); }

private:
  bool assign(std::size_t t) {
    if (t == x_.size())
      return true;
    for (std::size_t j = 0; j < targets_.size(); ++j) {
      if (used_[j])
        continue;
      y_[t] = targets_[j];
      if (!consistent_with_new(x_, y_, t))
        continue;
      used_[j] = true;
      if (assign(t + 1))
        return true;
      used_[j] = false;
    }
    return false;
  }

  std::vector<Elem> x_;
  std::vector<Elem> targets_;
  std::vector<Elem> y_;
  std::vector<bool> used_;
};

// Searches for a quadruple-preserving injection with image spanning F_2^r.
// Translation lets the first image be 0; GL(r) lets each image that raises
// the rank be the next standard basis vector.
class DimSearch {
public:
  DimSearch(std::vector<Elem> xs, int r) : x_(std::move(xs)), r_(r), y_(x_.size()) {}

  bool run() {
    y_[0] = 0;
    return assign(1, 0);
  }

  const std::vector<Elem> &image() const { return y_; }

private:
  bool assign(std::size_t t, int rank) {
    const std::size_t k = x_.size();
    if (t == k)
      return rank == r_;
    if (rank + static_cast<int>(k - t) < r_)
      return false;
    const Elem inside = Elem{1} << rank;
    for (Elem v = 0; v < inside; ++v) {
      y_[t] = v;
      if (consistent_with_new(x_, y_, t) && assign(t + 1, rank))
        return true;
    }
    if (rank < r_) {
      y_[t] = inside;
      if (consistent_with_new(x_, y_, t) && assign(t + 1, rank + 1))
        return true;
    }
    return false;
  }

  std::vector<Elem> x_;
  int r_;
  std::vector<Elem> y_;
};

} // namespace

bool preserves_quadruples(std::span<const Elem> points, std::span<const Elem> image) {
  require(points.size() == image.size(), "preserves_quadruples: size mismatch");
  for (std::size_t t = 0; t < points.size(); ++t)
    if (!consistent_with_new(points, image, t))
      return false;
  return true;
}

int affine_dimension(std::span<const Elem> points) {
  require(!points.empty(), "affine_dimension: empty point set");
  Subspace s(31);
  for (Elem p : points)
    s.insert(p ^ points.front());
  return s.dim();
}

bool is_freiman_isomorphic(const ElemSet &X, const ElemSet &Y) {
  require(X.size() == Y.size(), "is_freiman_isomorphic: size mismatch");
  require(X.size() <= kMaxIsoSetSize, "is_freiman_isomorphic: |X| > 8");
  return IsoSearch(X.elements(), Y.elements()).run();
}

FreimanResult freiman_dimension_brute(const ElemSet &X) {
  require(!X.empty(), "freiman_dimension: empty set");
  require(X.size() <= kMaxBruteDimSetSize, "freiman_dimension_brute: |X| > 6");
  const auto xs = X.elements();
  const int k = static_cast<int>(xs.size());
  for (int r = k - 1; r >= 0; --r) {
    DimSearch search(xs, r);
    if (search.run())
      return FreimanResult{r, search.image(), FreimanMethod::brute_force};
  }
  // r = 0 always succeeds for a singleton, and k >= 2 reaches r = 1 at least.
  throw std::logic_error("freiman_dimension_brute: no embedding found");
}

FreimanResult freiman_dimension_universal(const ElemSet &X) {
  require(!X.empty(), "freiman_dimension: empty set");
  require(X.size() <= kMaxUniversalSetSize, "freiman_dimension_universal: |X| > 20");
  const auto xs = X.elements();
  const std::size_t k = xs.size();

  // Distinct pairs with equal sum are disjoint, so each relation has weight 4.
  std::unordered_map<Elem, Elem> first_pair_with_sum;
  Subspace relations(static_cast<int>(k));
  for (std::size_t b = 1; b < k; ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      const Elem pair_mask = (Elem{1} << a) | (Elem{1} << b);
      auto [it, fresh] = first_pair_with_sum.try_emplace(xs[a] ^ xs[b], pair_mask);
      if (!fresh)
        relations.insert(it->second ^ pair_mask);
    }
  }

  std::vector<Elem> reps(k, 0);
  Subspace hull(static_cast<int>(k));
  for (std::size_t i = 1; i < k; ++i) {
    reps[i] = relations.reduce((Elem{1} << i) | Elem{1});
    hull.insert(reps[i]);
  }
  FreimanResult res;
  res.r = hull.dim();
  res.method = FreimanMethod::universal_model;
  res.witness.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    res.witness[i] = hull.coordinates(reps[i]);
  if (res.r != static_cast<int>(k) - 1 - relations.dim())
    throw std::logic_error("freiman_dimension_universal: rank bookkeeping mismatch");
  return res;
}

FreimanResult freiman_dimension(const ElemSet &X) {
  require(!X.empty(), "freiman_dimension: empty set");
  if (X.size() <= kMaxBruteDimSetSize)
    return freiman_dimension_brute(X);
  return freiman_dimension_universal(X);
}

DimBoundReport check_dim_bound(const ElemSet &X) {
  require(X.size() <= kMaxBruteDimSetSize, "check_dim_bound: |X| > 6");
  DimBoundReport rep;
  rep.r = freiman_dimension_brute(X).r;
  rep.k = X.size();
  rep.l = sumset(X, X).size();
  const auto k = static_cast<long double>(rep.k);
  rep.bound = std::log2(k) + 2.0L * static_cast<long double>(rep.l) / k;
  rep.holds = static_cast<long double>(rep.r) <= rep.bound;
  return rep;
}

EvenZoharReport check_even_zohar(const ElemSet &X) {
  require(!X.empty(), "check_even_zohar: empty set");
  EvenZoharReport rep;
  rep.k = X.size();
  const auto k = static_cast<long double>(rep.k);
  rep.K = static_cast<long double>(sumset(X, X).size()) / k;
  rep.span_size = span(X).size();
  rep.bound = std::pow(4.0L, rep.K) * k / (2.0L * rep.K);
  rep.holds = static_cast<long double>(rep.span_size) <= rep.bound;
  return rep;
}

// ----------------------------------------------------------------- census

namespace {

class CensusWorker {
public:
  CensusWorker(int n, int k)
      : universe_(Elem{1} << n), k_(static_cast<std::size_t>(k)), pair_count_(universe_, 0) {
    chosen_.reserve(k_);
  }

  // All k-subsets whose minimum is `first`.
  void run_from(Elem first) {
    chosen_.push_back(first);
    descend(first + 1, 0);
    chosen_.pop_back();
  }

  std::map<std::size_t, std::uint64_t> &counts() { return counts_; }

private:
  void descend(Elem start, std::size_t l) {
    if (chosen_.size() == k_) {
      ++counts_[l];
      return;
    }
    const Elem last = universe_ - static_cast<Elem>(k_ - chosen_.size());
    for (Elem x = start; x <= last; ++x) {
      std::size_t added = 0;
      for (Elem y : chosen_)
        if (pair_count_[x ^ y]++ == 0)
          ++added;
      chosen_.push_back(x);
      descend(x + 1, l + added);
      chosen_.pop_back();
      for (Elem y : chosen_)
        --pair_count_[x ^ y];
    }
  }

  Elem universe_;
  std::size_t k_;
  std::vector<std::uint32_t> pair_count_;
  std::vector<Elem> chosen_;
  std::map<std::size_t, std::uint64_t> counts_;
};

} // namespace

SklCensus census_skl(int n, int k, unsigned threads, std::uint64_t budget) {
  require(n >= 1 && n <= kMaxSetDim, "census_skl: n out of range [1, 20]");
  const std::uint64_t universe = std::uint64_t{1} << n;
  require(k >= 1 && static_cast<std::uint64_t>(k) <= universe, "census_skl: k out of range");
  SklCensus c;
  c.n = n;
  c.k = k;
  c.total = binomial(universe, static_cast<std::uint64_t>(k));
  if (c.total > budget)
    throw BudgetExceeded("census_skl: C(2^" + std::to_string(n) + ", " + std::to_string(k) +
                         ") = " + c.total.str() + " exceeds budget " + std::to_string(budget));

  const Elem first_max = static_cast<Elem>(universe - static_cast<std::uint64_t>(k));
  std::atomic<Elem> next{0};
  std::mutex merge_mutex;
  auto work = [&] {
    CensusWorker w(n, k);
    for (Elem a = next++; a <= first_max; a = next++)
      w.run_from(a);
    std::lock_guard lock(merge_mutex);
    for (auto [l, cnt] : w.counts())
      c.counts[l] += cnt;
  };
  threads = std::max(1u, threads);
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(work);
  work();
  pool.clear();

  c.union_bound = 0;
  for (auto [l, cnt] : c.counts)
    c.union_bound += Rational(cnt) * pow2(-static_cast<long long>(l));
  return c;
}

std::string census_to_csv(const SklCensus &c) {
  std::ostringstream os;
  os << "n,k,l,count,union_bound_term\n";
  for (auto [l, cnt] : c.counts) {
    os << c.n << ',' << c.k << ',' << l << ',' << cnt << ','
       << to_string(Rational(cnt) * pow2(-static_cast<long long>(l))) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------- tail exponent

TailExponent tail_exponent(long double n, long double k, long double l) {
  require(k >= 2, "tail_exponent: requires k >= 2");
  require(l >= 10 * k, "tail_exponent: requires l >= 10k");
  require(n >= 1, "tail_exponent: requires n >= 1");
  constexpr long double log2e = std::numbers::log2e_v<long double>;
  TailExponent t;
  t.freiman_dim_bound = std::log2(k) + 2.0L * (l + 1.0L) / k;
  // log2 N^(r+1) = n (r+1)
  const long double ambient = n * (t.freiman_dim_bound + 1.0L);
  if (l >= std::pow(k, 31.0L / 30.0L)) {
    t.regime = TailRegime::large_l;
    t.log2_bound = ambient + 4.0L * k * std::log2(k) - l;
  } else {
    t.regime = TailRegime::moderate_l;
    t.log2_bound = ambient + k * std::log2(std::numbers::e_v<long double> * l / k) +
                   std::pow(k, 31.0L / 32.0L) * log2e - l;
  }
  return t;
}

// ------------------------------------------------------------ cover probe

FamilyCoverReport family_cover_probe(int n, int k, double eps, int d, std::uint64_t budget) {
  require(n >= 1 && n <= 4, "family_cover_probe: requires 1 <= n <= 4");
  const int universe = 1 << n;
  require(k >= 2 && k <= universe, "family_cover_probe: requires 2 <= k <= 2^n");
  require(eps > 0.0 && eps < 1.0, "family_cover_probe: requires 0 < eps < 1");
  require(d >= 0 && d <= n, "family_cover_probe: requires 0 <= d <= n");
  const BigInt total = binomial(static_cast<std::uint64_t>(universe), static_cast<std::uint64_t>(k));
  if (total > budget)
    throw BudgetExceeded("family_cover_probe: " + total.str() + " sets exceed budget");

  FamilyCoverReport rep;
  rep.n = n;
  rep.k = k;
  rep.k_prime = 1 << (std::bit_width(static_cast<unsigned>(k - 1)) - 1);

  // Each candidate V is kept as its list of coset masks.
  struct Candidate {
    std::size_t coset_size;
    std::vector<std::uint32_t> coset_masks;
  };
  std::vector<Candidate> candidates;
  for (int dim = n - d; dim <= n; ++dim) {
    for_each_subspace(n, dim, [&](const Subspace &V) {
      Candidate c{static_cast<std::size_t>(V.size()), {}};
      for (const Coset &C : cosets(V)) {
        std::uint32_t mask = 0;
        C.members.for_each([&](Elem x) { mask |= 1u << x; });
        c.coset_masks.push_back(mask);
      }
      candidates.push_back(std::move(c));
    });
  }

  const double need = (2.0 - eps) * rep.k_prime;
  const double eps3 = eps * eps * eps;
  const std::uint32_t limit = universe == 32 ? 0 : (1u << universe);
  // Gosper's hack over k-subsets of the 2^n elements.
  for (std::uint32_t x = (1u << k) - 1; x != 0 && x < limit;) {
    std::uint32_t sumset_mask = 0;
    for (std::uint32_t a = x; a; a &= a - 1)
      for (std::uint32_t b = x; b; b &= b - 1)
        sumset_mask |= 1u << (std::countr_zero(a) ^ std::countr_zero(b));

    bool covered = false;
    for (const auto &c : candidates) {
      const double removable = eps3 * static_cast<double>(c.coset_size);
      std::size_t f_size = 0;
      for (std::uint32_t cm : c.coset_masks) {
        const auto missing = static_cast<double>(std::popcount(cm & ~sumset_mask));
        if (missing <= removable)
          f_size += static_cast<std::size_t>(std::popcount(cm & sumset_mask));
      }
      if (f_size > 0 && static_cast<double>(f_size) >= need) {
        covered = true;
        break;
      }
    }
    ++rep.sets_checked;
    if (!covered) {
      ElemSet fail(n);
      for (std::uint32_t a = x; a; a &= a - 1)
        fail.insert(static_cast<Elem>(std::countr_zero(a)));
      rep.failures.push_back(std::move(fail));
    }

    const std::uint32_t lowest = x & (~x + 1);
    const std::uint32_t ripple = x + lowest;
    if (ripple == 0)
      break;
    x = (((ripple ^ x) >> 2) / lowest) | ripple;
  }

  // sum over d' <= d of N^d' * 2^D' * (sum_{s <= eps^3 N/D'} C(N/D', s))^D'
  rep.family_size_bound = 0;
  const std::uint64_t N = static_cast<std::uint64_t>(universe);
  for (int dp = 0; dp <= d; ++dp) {
    const std::uint64_t D = std::uint64_t{1} << dp;
    const std::uint64_t coset = N / D;
    const auto max_removed =
        static_cast<std::uint64_t>(std::floor(eps3 * static_cast<double>(coset)));
    BigInt per_coset = 0;
    for (std::uint64_t s = 0; s <= max_removed && s <= coset; ++s)
      per_coset += binomial(coset, s);
    BigInt term = boost::multiprecision::pow(BigInt(N), static_cast<unsigned>(dp));
    term <<= static_cast<unsigned>(D);
    term *= boost::multiprecision::pow(per_coset, static_cast<unsigned>(D));
    rep.family_size_bound += term;
  }
  return rep;
}

} // namespace f2c
