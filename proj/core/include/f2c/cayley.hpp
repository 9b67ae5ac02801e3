#pragma once

#include "f2c/gf2core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace f2c {

inline constexpr int kMinGraphDim = 2;
inline constexpr int kMaxGraphDim = 13;

/// Cayley sum graph on F_2^n: x ~ y iff x != y and x + y lies in A.
/// 0 is never a member of A. One neighbour bitset is stored per vertex.
class CayleyGraph {
public:
  CayleyGraph(int n, ElemSet generators, std::optional<std::uint64_t> seed = std::nullopt);

  int dim() const noexcept { return n_; }
  std::size_t order() const noexcept { return std::size_t{1} << n_; }
  const ElemSet &generators() const noexcept { return generators_; }
  const std::optional<std::uint64_t> &seed() const noexcept { return seed_; }

  bool adjacent(Elem x, Elem y) const noexcept { return x != y && generators_.contains(x ^ y); }

  /// {x + a : a in A}
  const ElemSet &neighbors(Elem x) const;

  std::size_t degree() const noexcept { return generators_.size(); }

  /// Generators of the complement graph: (F_2^n \ {0}) \ A.
  ElemSet complement_generators() const;

private:
  int n_;
  ElemSet generators_;
  std::optional<std::uint64_t> seed_;
  std::vector<ElemSet> adjacency_;
};

/// Membership of nonzero element i is bit (i mod 64) of mix64(seed, i / 64),
/// a pure function of (seed, i).
ElemSet sample_generators(int n, std::uint64_t seed);

CayleyGraph sample_cayley(int n, std::uint64_t seed);

/// Builds the graph for an explicit generator set; 0 is dropped.
CayleyGraph from_generators(int n, const ElemSet &A);

const ElemSet &neighbors(const CayleyGraph &G, Gf2Vec x);

/// Text form: "n=<n> seed=<seed|none>\n<hex>\n". Hex digit i (from the left)
/// holds elements 4i..4i+3, element 4i+j in bit j of the digit.
std::string serialize(const CayleyGraph &G);
CayleyGraph deserialize(const std::string &text);

std::string to_hex(const ElemSet &S);
ElemSet from_hex(int n, const std::string &hex);

} // namespace f2c
