#pragma once

#include "f2c/cayley.hpp"
#include "f2c/gf2core.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace f2c {

/// Search budgets count search-tree nodes.
inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

enum class CliqueMethod {
  exact,            // search completed and improved on the subspace incumbent
  subspace_seeded,  // search completed; the subspace incumbent was optimal
  budget_exhausted, // lower bound only
};

const char *to_string(CliqueMethod m);

struct CliqueOutcome {
  std::size_t size = 0;
  ElemSet witness;
  bool optimal = false;
  CliqueMethod method = CliqueMethod::exact;
  std::uint64_t nodes_explored = 0;
  /// Equal to size when optimal; otherwise the root colouring bound.
  std::size_t upper_bound = 0;
};

/// M_m = number of m-dimensional subspaces H with H \ {0} inside A.
struct SubspaceCliqueReport {
  std::vector<std::uint64_t> counts; // counts[m]
  int max_dim = 0;
  /// Set when a level outgrew the memory budget; counts stop at that level.
  bool partial = false;
};

inline constexpr std::size_t kDefaultSubspaceMemoryBudget = std::size_t{1} << 22;

/// True iff every pair of distinct members differs by an element of A.
bool is_clique(const CayleyGraph &G, const ElemSet &S);
bool is_independent(const CayleyGraph &G, const ElemSet &S);

/// Largest subspace H with H \ {0} inside A (depth-first, exact).
Subspace largest_subspace_clique(const ElemSet &A);

/// Level-by-level extension with RREF deduplication. max_dim < 0 means no cap.
SubspaceCliqueReport subspace_cliques(const ElemSet &A, int max_dim = -1,
                                      std::size_t memory_budget = kDefaultSubspaceMemoryBudget);
SubspaceCliqueReport subspace_cliques(const CayleyGraph &G, int max_dim = -1,
                                      std::size_t memory_budget = kDefaultSubspaceMemoryBudget);

/// Maximum clique of the Cayley graph on generators A (0 excluded).
/// Searches cliques through vertex 0 only, which loses nothing because
/// translations are automorphisms.
CliqueOutcome max_clique_of_generators(const ElemSet &A, std::uint64_t budget = kUnlimitedBudget);

CliqueOutcome max_clique(const CayleyGraph &G, std::uint64_t budget = kUnlimitedBudget);

/// Maximum clique of the Cayley graph on the complementary generator set.
CliqueOutcome independence_number(const CayleyGraph &G, std::uint64_t budget = kUnlimitedBudget);

struct Coloring {
  std::vector<std::uint32_t> color; // per vertex
  std::size_t num_colors = 0;
};

bool is_proper_coloring(const CayleyGraph &G, const Coloring &c);

/// Colours each coset of V by its index in label order. V \ {0} must avoid A.
Coloring coset_coloring(const CayleyGraph &G, const Subspace &V);

Coloring dsatur_coloring(const CayleyGraph &G);

inline constexpr int kMaxExactChromaticDim = 5;

struct ChromaticBracket {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  Coloring best; // proper colouring with `upper` (or `exact`) colours
  CliqueOutcome omega;
  CliqueOutcome alpha;
  int independent_subspace_dim = 0;
  std::uint64_t nodes = 0;
};

/// lower = max(omega, ceil(2^n / alpha_ub)); upper = min(DSATUR, best coset
/// colouring); exact branch-and-bound when n <= 5 and the budget allows.
ChromaticBracket chromatic_bracket(const CayleyGraph &G, std::uint64_t budget = kUnlimitedBudget);

} // namespace f2c
