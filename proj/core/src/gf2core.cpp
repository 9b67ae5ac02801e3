#include "f2c/gf2core.hpp"

#include <algorithm>
#include <numeric>

namespace f2c {

namespace {

constexpr int kMaxSubspaceDim = 31;

int pivot_of(Elem v) { return 31 - std::countl_zero(v); }

} // namespace

// ---------------------------------------------------------------- ElemSet

ElemSet::ElemSet(int n) : n_(n) {
  require(n >= 0 && n <= kMaxSetDim, "ElemSet: dimension out of range [0, 20]");
  words_.assign((universe() + 63) / 64, 0);
}

ElemSet::ElemSet(int n, std::initializer_list<Elem> elems)
    : ElemSet(n, std::span<const Elem>(elems.begin(), elems.size())) {}

ElemSet::ElemSet(int n, std::span<const Elem> elems) : ElemSet(n) {
  for (Elem x : elems)
    insert(x);
}

ElemSet ElemSet::full(int n) {
  ElemSet s(n);
  std::size_t u = s.universe();
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    std::size_t lo = w * 64;
    std::size_t cnt = std::min<std::size_t>(64, u - lo);
    s.words_[w] = cnt == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << cnt) - 1);
  }
  return s;
}

std::size_t ElemSet::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElemSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

ElemSet ElemSet::translated(Elem t) const {
  check(t);
  ElemSet out(n_);
  for_each([&](Elem x) { out.insert(x ^ t); });
  return out;
}

ElemSet &ElemSet::operator|=(const ElemSet &o) {
  check_same_dim(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= o.words_[i];
  return *this;
}

ElemSet &ElemSet::operator&=(const ElemSet &o) {
  check_same_dim(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
  return *this;
}

ElemSet &ElemSet::operator-=(const ElemSet &o) {
  check_same_dim(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

bool ElemSet::is_subset_of(const ElemSet &o) const {
  check_same_dim(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i])
      return false;
  return true;
}

// --------------------------------------------------------------- Subspace

Subspace::Subspace(int n) : n_(n) {
  require(n >= 0 && n <= kMaxSubspaceDim, "Subspace: dimension out of range");
}

Subspace Subspace::span_of(int n, std::span<const Elem> vectors) {
  Subspace s(n);
  for (Elem v : vectors)
    s.insert(v);
  return s;
}

Elem Subspace::reduce(Elem v) const noexcept {
  for (Elem b : basis_)
    if ((v >> pivot_of(b)) & 1u)
      v ^= b;
  return v;
}

bool Subspace::insert(Elem v) {
  require((v >> n_) == 0, "Subspace: vector outside F_2^n");
  v = reduce(v);
  if (v == 0)
    return false;
  const int p = pivot_of(v);
  // Only rows with a higher pivot can carry bit p.
  for (Elem &b : basis_)
    if ((b >> p) & 1u)
      b ^= v;
  auto pos = std::find_if(basis_.begin(), basis_.end(),
                          [p](Elem b) { return pivot_of(b) < p; });
  basis_.insert(pos, v);
  return true;
}

Elem Subspace::coordinates(Elem v) const {
  Elem coords = 0;
  Elem acc = 0;
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    Elem b = basis_[i];
    if ((v >> pivot_of(b)) & 1u) {
      coords |= Elem{1} << (d - 1 - i);
      acc ^= b;
    }
  }
  require(acc == v, "Subspace::coordinates: vector not in subspace");
  return coords;
}

ElemSet Subspace::members() const {
  require(n_ <= kMaxSetDim, "Subspace::members: ambient dimension above 20");
  ElemSet out(n_);
  // Gray-code walk over all combinations.
  Elem cur = 0;
  out.insert(0);
  const std::uint64_t total = size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
    out.insert(cur);
  }
  return out;
}

std::size_t Subspace::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9E3779B97F4A7C15ull;
  for (Elem b : basis_) {
    h ^= b + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ------------------------------------------------------------- operations

Subspace span(const ElemSet &X) {
  Subspace s(X.dim());
  X.for_each([&](Elem x) { s.insert(x); });
  return s;
}

ElemSet subspace_members(const Subspace &V) { return V.members(); }

BigInt gaussian_binomial(int n, int m) {
  require(n >= 0 && n <= 64, "gaussian_binomial: n out of range [0, 64]");
  require(m >= 0 && m <= n, "gaussian_binomial: m out of range [0, n]");
  BigInt num = 1, den = 1;
  const BigInt one = 1;
  for (int i = 0; i < m; ++i) {
    num *= (one << (n - i)) - 1;
    den *= (one << (m - i)) - 1;
  }
  return num / den;
}

void for_each_subspace(int n, int m, const std::function<void(const Subspace &)> &fn,
                       std::uint64_t budget) {
  require(n >= 0 && n <= kMaxSetDim, "enumerate_subspaces: n out of range [0, 20]");
  require(m >= 0 && m <= n, "enumerate_subspaces: m out of range [0, n]");
  if (gaussian_binomial(n, m) > budget)
    throw BudgetExceeded("enumerate_subspaces: " + gaussian_binomial(n, m).str() +
                         " subspaces exceed budget " + std::to_string(budget));

  // Pivot positions q_0 < ... < q_{m-1}; row i has q_i - i free positions.
  std::vector<int> q(static_cast<std::size_t>(m));
  std::iota(q.begin(), q.end(), 0);
  std::vector<std::vector<int>> free_pos(static_cast<std::size_t>(m));

  while (true) {
    std::uint64_t pivot_mask = 0;
    for (int p : q)
      pivot_mask |= std::uint64_t{1} << p;
    int total_free = 0;
    for (int i = 0; i < m; ++i) {
      auto &fp = free_pos[static_cast<std::size_t>(i)];
      fp.clear();
      for (int b = 0; b < q[static_cast<std::size_t>(i)]; ++b)
        if (!((pivot_mask >> b) & 1u))
          fp.push_back(b);
      total_free += static_cast<int>(fp.size());
    }
    const std::uint64_t combos = std::uint64_t{1} << total_free;
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t bits = c;
      Subspace s(n);
      s.basis_.resize(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        Elem row = Elem{1} << q[static_cast<std::size_t>(i)];
        for (int b : free_pos[static_cast<std::size_t>(i)]) {
          if (bits & 1u)
            row |= Elem{1} << b;
          bits >>= 1;
        }
        // basis_ is stored with decreasing pivots.
        s.basis_[static_cast<std::size_t>(m - 1 - i)] = row;
      }
      fn(s);
    }

    // Next combination of pivots.
    int i = m - 1;
    while (i >= 0 && q[static_cast<std::size_t>(i)] == n - m + i)
      --i;
    if (i < 0)
      break;
    ++q[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j)
      q[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(int n, int m, std::uint64_t budget) {
  std::vector<Subspace> out;
  for_each_subspace(n, m, [&](const Subspace &s) { out.push_back(s); }, budget);
  return out;
}

std::vector<Coset> cosets(const Subspace &V) {
  const int n = V.ambient_dim();
  require(n <= kMaxSetDim, "cosets: ambient dimension above 20");
  std::vector<Coset> out;
  out.reserve(std::size_t{1} << (n - V.dim()));
  const ElemSet base = V.members();
  const Elem universe = Elem{1} << n;
  for (Elem x = 0; x < universe; ++x) {
    // Reduced vectors are exactly the coset minima.
    if (V.reduce(x) == x)
      out.push_back(Coset{x, base.translated(x)});
  }
  return out;
}

} // namespace f2c
