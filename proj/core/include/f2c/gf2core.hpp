#pragma once

// Exact linear algebra over F_2: vectors as bit words, dense element sets,
// canonical (RREF) subspaces, cosets, and subspace enumeration/counting.

#include "f2c/errors.hpp"
#include "f2c/numeric.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace f2c {

using Elem = std::uint32_t;

/// Largest ambient dimension accepted by set-level operations (2^20-bit sets).
inline constexpr int kMaxSetDim = 20;

/// Default cap on exhaustive enumerations.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// An element of F_2^n. Addition is XOR.
struct Gf2Vec {
  Elem bits = 0;
  int n = 0;

  Gf2Vec() = default;
  Gf2Vec(Elem bits_, int n_) : bits(bits_), n(n_) {
    require(n_ >= 0 && n_ <= kMaxSetDim, "Gf2Vec: dimension out of range");
    require((bits_ >> n_) == 0, "Gf2Vec: bits exceed 2^n");
  }

  friend Gf2Vec operator+(Gf2Vec a, Gf2Vec b) {
    require(a.n == b.n, "Gf2Vec: dimension mismatch");
    return Gf2Vec(a.bits ^ b.bits, a.n);
  }
  friend bool operator==(const Gf2Vec &, const Gf2Vec &) = default;
};

/// Dense bitset over all 2^n elements of F_2^n.
class ElemSet {
public:
  ElemSet() : ElemSet(0) {}
  explicit ElemSet(int n);
  ElemSet(int n, std::initializer_list<Elem> elems);
  ElemSet(int n, std::span<const Elem> elems);

  static ElemSet full(int n);

  int dim() const noexcept { return n_; }
  std::size_t universe() const noexcept { return std::size_t{1} << n_; }

  bool contains(Elem x) const noexcept {
    return x < universe() && ((words_[x >> 6] >> (x & 63)) & 1u);
  }
  void insert(Elem x) {
    check(x);
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  void erase(Elem x) {
    check(x);
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  /// Members in increasing order.
  std::vector<Elem> elements() const;

  template <class F> void for_each(F &&fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        fn(static_cast<Elem>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  /// {t + x : x in this}.
  ElemSet translated(Elem t) const;

  ElemSet &operator|=(const ElemSet &o);
  ElemSet &operator&=(const ElemSet &o);
  ElemSet &operator-=(const ElemSet &o);
  friend ElemSet operator|(ElemSet a, const ElemSet &b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet &b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet &b) { return a -= b; }
  friend bool operator==(const ElemSet &, const ElemSet &) = default;

  bool is_subset_of(const ElemSet &o) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
  void check(Elem x) const {
    require(x < universe(), "ElemSet: element outside F_2^n");
  }
  void check_same_dim(const ElemSet &o) const {
    require(o.n_ == n_, "ElemSet: dimension mismatch");
  }

  int n_;
  std::vector<std::uint64_t> words_;
};

/// A linear subspace of F_2^n stored as its reduced row-echelon basis:
/// pivots (leading bits) strictly decrease and each pivot bit is set in
/// exactly one basis vector. Two Subspace values compare equal iff they
/// describe the same set.
class Subspace {
public:
  explicit Subspace(int n = 0);

  static Subspace span_of(int n, std::span<const Elem> vectors);

  int ambient_dim() const noexcept { return n_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << dim(); }
  const std::vector<Elem> &basis() const noexcept { return basis_; }

  /// Adds v to the span. Returns true if the dimension grew.
  bool insert(Elem v);

  /// Canonical representative of v + V, which is also its minimum element.
  Elem reduce(Elem v) const noexcept;
  bool contains(Elem v) const noexcept { return reduce(v) == 0; }

  /// For v in V: bit i of the result is the coefficient of the basis vector
  /// with the i-th smallest pivot.
  Elem coordinates(Elem v) const;

  ElemSet members() const;

  friend bool operator==(const Subspace &, const Subspace &) = default;

  std::size_t hash() const noexcept;

private:
  friend void for_each_subspace(int, int, const std::function<void(const Subspace &)> &,
                                std::uint64_t);

  int n_;
  std::vector<Elem> basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace &s) const noexcept { return s.hash(); }
};

/// Linear span of the members of X.
Subspace span(const ElemSet &X);

/// All 2^dim members of V.
ElemSet subspace_members(const Subspace &V);

/// Number of m-dimensional subspaces of F_2^n.
BigInt gaussian_binomial(int n, int m);

/// Calls fn once per m-dimensional subspace of F_2^n, ordered by pivot tuple
/// (lexicographically increasing) and then by the free entries read as a
/// counter. Throws BudgetExceeded before visiting anything if the count is
/// above budget.
void for_each_subspace(int n, int m, const std::function<void(const Subspace &)> &fn,
                       std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<Subspace> enumerate_subspaces(int n, int m,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

struct Coset {
  Elem label; // minimum element
  ElemSet members;
};

/// Partition of F_2^n into the cosets of V, ordered by label.
std::vector<Coset> cosets(const Subspace &V);

} // namespace f2c
