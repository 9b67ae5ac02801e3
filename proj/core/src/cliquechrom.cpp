#include "f2c/cliquechrom.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace f2c {

const char *to_string(CliqueMethod m) {
  switch (m) {
  case CliqueMethod::exact:
    return "exact";
  case CliqueMethod::subspace_seeded:
    return "subspace-seeded";
  case CliqueMethod::budget_exhausted:
    return "budget-exhausted";
  }
  return "?";
}

namespace {

bool all_pair_sums_in(const ElemSet &A, const ElemSet &S) {
  const auto v = S.elements();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!A.contains(v[i] ^ v[j]))
        return false;
  return true;
}

bool no_pair_sum_in(const ElemSet &A, const ElemSet &S) {
  const auto v = S.elements();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (A.contains(v[i] ^ v[j]))
        return false;
  return true;
}

// ------------------------------------------------ largest subspace clique

class SubspaceDfs {
public:
  explicit SubspaceDfs(int n) : best_(n) {}

  void search(const Subspace &H, ElemSet C) {
    if (H.dim() > best_.dim())
      best_ = H;
    while (!C.empty()) {
      // Extending H to dimension D puts 2^D - 2^dim(H) elements in C.
      const std::uint64_t reach = C.size() + H.size();
      const int max_dim = std::bit_width(reach) - 1;
      if (max_dim <= best_.dim())
        return;
      Elem v = 0;
      C.for_each([&](Elem x) {
        if (v == 0)
          v = x;
      });
      Subspace next = H;
      next.insert(v);
      search(next, C & C.translated(v));
      // Every element of v + H generates the same extension.
      const ElemSet vH = H.members().translated(v);
      C -= vH;
    }
  }

  const Subspace &best() const { return best_; }

private:
  Subspace best_;
};

// -------------------------------------------------------- max clique core

using Words = std::vector<std::uint64_t>;

inline void set_bit(Words &w, std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear_bit(Words &w, std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

// Bitset branch-and-bound with greedy-colouring bounds on a local graph.
// Each recursion depth owns its buffers, so the search allocates only when it
// first reaches a new depth.
class CliqueSearch {
public:
  CliqueSearch(std::vector<Words> adj, std::size_t vertices, std::uint64_t budget)
      : adj_(std::move(adj)), n_(vertices), words_((vertices + 63) / 64), budget_(budget) {}

  void seed(std::vector<std::size_t> clique) {
    best_size_ = clique.size();
    best_ = std::move(clique);
  }

  // Returns the root colouring bound.
  std::size_t run() {
    Level &root = level(0);
    root.P.assign(words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      set_bit(root.P, i);
    const std::size_t root_bound = color_sort(root, 0);
    if (best_size_ < root_bound)
      expand(0);
    return root_bound;
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::size_t> &best() const { return best_; }
  bool improved() const { return improved_; }

private:
  struct Level {
    Words P, U, Q;
    std::vector<std::uint32_t> order, colors;
  };

  Level &level(std::size_t depth) {
    while (levels_.size() <= depth)
      levels_.push_back({Words(words_), Words(words_), Words(words_), {}, {}});
    return levels_[depth];
  }

  // Greedy sequential colouring of L.P, one colour class at a time. Vertices
  // in classes above kmin are recorded in colour order as branching
  // candidates; lower classes cannot lead to a larger clique. Returns the
  // number of colours used.
  std::size_t color_sort(Level &L, std::size_t kmin) {
    L.order.clear();
    L.colors.clear();
    L.U = L.P;
    std::uint32_t color = 0;
    std::size_t lo = 0; // first word of U that may be nonzero
    while (true) {
      while (lo < words_ && L.U[lo] == 0)
        ++lo;
      if (lo == words_)
        break;
      ++color;
      for (std::size_t w = lo; w < words_; ++w)
        L.Q[w] = L.U[w];
      for (std::size_t w = lo; w < words_; ++w) {
        while (L.Q[w]) {
          const auto b = static_cast<std::size_t>(std::countr_zero(L.Q[w]));
          const std::size_t v = w * 64 + b;
          const std::uint64_t bit = std::uint64_t{1} << b;
          L.U[w] &= ~bit;
          L.Q[w] &= ~bit;
          const Words &nv = adj_[v];
          for (std::size_t x = w; x < words_; ++x)
            L.Q[x] &= ~nv[x];
          if (color > kmin) {
            L.order.push_back(static_cast<std::uint32_t>(v));
            L.colors.push_back(color);
          }
        }
      }
    }
    return color;
  }

  void expand(std::size_t depth) {
    for (std::size_t i = levels_[depth].order.size(); i-- > 0;) {
      Level &L = levels_[depth];
      if (aborted_)
        return;
      if (current_.size() + L.colors[i] <= best_size_)
        return;
      if (++nodes_ > budget_) {
        aborted_ = true;
        return;
      }
      const std::size_t v = L.order[i];
      current_.push_back(v);
      Level &child = level(depth + 1);
      Level &parent = levels_[depth]; // level() may have reallocated
      const Words &nv = adj_[v];
      bool empty = true;
      for (std::size_t w = 0; w < words_; ++w) {
        child.P[w] = parent.P[w] & nv[w];
        empty = empty && child.P[w] == 0;
      }
      if (empty) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
          improved_ = true;
        }
      } else {
        const std::size_t kmin = best_size_ >= current_.size() ? best_size_ - current_.size() : 0;
        color_sort(child, kmin);
        expand(depth + 1);
      }
      current_.pop_back();
      clear_bit(levels_[depth].P, v);
    }
  }

  std::vector<Words> adj_;
  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool improved_ = false;
  std::size_t best_size_ = 0;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> current_;
  std::vector<Level> levels_;
};

// --------------------------------------------------- exact colouring B&B

class ExactColoring {
public:
  ExactColoring(const CayleyGraph &G, std::size_t lower, std::size_t upper, std::uint64_t budget)
      : G_(G), V_(G.order()), lower_(lower), best_count_(upper), budget_(budget),
        color_(V_, kNone), sat_count_(V_ * 64, 0), sat_(V_, 0) {}

  void run() {
    if (best_count_ <= lower_)
      return;
    search(0, 0);
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t best_count() const { return best_count_; }
  const std::vector<std::uint32_t> &best() const { return best_; }

private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  void assign(std::size_t v, std::uint32_t c) {
    color_[v] = c;
    G_.neighbors(static_cast<Elem>(v)).for_each([&](Elem u) {
      if (sat_count_[u * 64 + c]++ == 0)
        sat_[u] |= std::uint64_t{1} << c;
    });
  }

  void unassign(std::size_t v) {
    const std::uint32_t c = color_[v];
    color_[v] = kNone;
    G_.neighbors(static_cast<Elem>(v)).for_each([&](Elem u) {
      if (--sat_count_[u * 64 + c] == 0)
        sat_[u] &= ~(std::uint64_t{1} << c);
    });
  }

  void search(std::size_t colored, std::size_t used) {
    if (aborted_ || best_count_ <= lower_)
      return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (colored == V_) {
      best_count_ = used;
      best_ = color_;
      return;
    }
    // DSATUR branching vertex: max saturation, then index.
    std::size_t pick = V_;
    int pick_sat = -1;
    for (std::size_t v = 0; v < V_; ++v) {
      if (color_[v] != kNone)
        continue;
      const int s = std::popcount(sat_[v]);
      if (s > pick_sat) {
        pick_sat = s;
        pick = v;
      }
    }
    const std::size_t limit = std::min(used + 1, best_count_ - 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if ((sat_[pick] >> c) & 1u)
        continue;
      assign(pick, c);
      search(colored + 1, std::max<std::size_t>(used, c + 1));
      unassign(pick);
      if (aborted_ || best_count_ <= lower_)
        return;
    }
  }

  const CayleyGraph &G_;
  std::size_t V_;
  std::size_t lower_;
  std::size_t best_count_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint8_t> sat_count_;
  std::vector<std::uint64_t> sat_;
  std::vector<std::uint32_t> best_;
};

} // namespace

bool is_clique(const CayleyGraph &G, const ElemSet &S) {
  require(S.dim() == G.dim(), "is_clique: dimension mismatch");
  return all_pair_sums_in(G.generators(), S);
}

bool is_independent(const CayleyGraph &G, const ElemSet &S) {
  require(S.dim() == G.dim(), "is_independent: dimension mismatch");
  return no_pair_sum_in(G.generators(), S);
}

Subspace largest_subspace_clique(const ElemSet &A) {
  ElemSet C = A;
  C.erase(0);
  SubspaceDfs dfs(A.dim());
  dfs.search(Subspace(A.dim()), std::move(C));
  return dfs.best();
}

SubspaceCliqueReport subspace_cliques(const ElemSet &A_in, int max_dim, std::size_t memory_budget) {
  ElemSet A = A_in;
  A.erase(0);
  const int n = A.dim();
  const int cap = max_dim < 0 ? n : std::min(max_dim, n);
  const auto gens = A.elements();

  SubspaceCliqueReport rep;
  rep.counts.push_back(1);
  std::vector<Subspace> level{Subspace(n)};
  for (int d = 0; d < cap && !level.empty(); ++d) {
    std::unordered_set<Subspace, SubspaceHash> next;
    for (const Subspace &H : level) {
      const auto members = H.members().elements();
      for (Elem v : gens) {
        if (H.contains(v))
          continue;
        bool ok = true;
        for (Elem h : members)
          if (h != 0 && !A.contains(v ^ h)) {
            ok = false;
            break;
          }
        if (!ok)
          continue;
        Subspace ext = H;
        ext.insert(v);
        next.insert(std::move(ext));
        if (next.size() > memory_budget) {
          rep.partial = true;
          break;
        }
      }
      if (rep.partial)
        break;
    }
    if (rep.partial)
      break;
    if (next.empty())
      break;
    rep.counts.push_back(next.size());
    level.assign(next.begin(), next.end());
  }
  rep.max_dim = static_cast<int>(rep.counts.size()) - 1;
  return rep;
}

SubspaceCliqueReport subspace_cliques(const CayleyGraph &G, int max_dim, std::size_t memory_budget) {
  return subspace_cliques(G.generators(), max_dim, memory_budget);
}

CliqueOutcome max_clique_of_generators(const ElemSet &A_in, std::uint64_t budget) {
  ElemSet A = A_in;
  A.erase(0);
  const int n = A.dim();
  CliqueOutcome out;
  out.witness = ElemSet(n);
  out.witness.insert(0);

  // Local graph on A, ordered by degree (descending) then element.
  auto verts = A.elements();
  const std::size_t s = verts.size();
  if (s == 0) {
    out.size = 1;
    out.optimal = true;
    out.method = CliqueMethod::subspace_seeded;
    out.upper_bound = 1;
    return out;
  }
  std::vector<std::size_t> degree(s, 0);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (i != j && A.contains(verts[i] ^ verts[j]))
        ++degree[i];
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
  std::vector<Elem> local(s);
  for (std::size_t i = 0; i < s; ++i)
    local[i] = verts[perm[i]];

  const std::size_t W = (s + 63) / 64;
  std::vector<Words> adj(s, Words(W, 0));
  std::vector<std::size_t> index_of(std::size_t{1} << n, s);
  for (std::size_t i = 0; i < s; ++i)
    index_of[local[i]] = i;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (i != j && A.contains(local[i] ^ local[j]))
        set_bit(adj[i], j);

  // Incumbent from the largest subspace clique: H \ {0} plus vertex 0.
  const Subspace H = largest_subspace_clique(A);
  std::vector<std::size_t> seed;
  H.members().for_each([&](Elem h) {
    if (h != 0)
      seed.push_back(index_of[h]);
  });

  CliqueSearch search(std::move(adj), s, budget);
  search.seed(seed);
  const std::size_t root_bound = search.run();

  for (std::size_t i : search.best())
    out.witness.insert(local[i]);
  out.size = out.witness.size();
  out.nodes_explored = search.nodes();
  out.optimal = !search.aborted();
  out.upper_bound = out.optimal ? out.size : std::max(out.size, root_bound + 1);
  if (!out.optimal)
    out.method = CliqueMethod::budget_exhausted;
  else
    out.method = search.improved() ? CliqueMethod::exact : CliqueMethod::subspace_seeded;

  if (!all_pair_sums_in(A, out.witness))
    throw std::logic_error("max_clique: witness is not a clique");
  return out;
}

CliqueOutcome max_clique(const CayleyGraph &G, std::uint64_t budget) {
  return max_clique_of_generators(G.generators(), budget);
}

CliqueOutcome independence_number(const CayleyGraph &G, std::uint64_t budget) {
  CliqueOutcome out = max_clique_of_generators(G.complement_generators(), budget);
  if (!is_independent(G, out.witness))
    throw std::logic_error("independence_number: witness is not independent");
  return out;
}

bool is_proper_coloring(const CayleyGraph &G, const Coloring &c) {
  if (c.color.size() != G.order())
    return false;
  for (Elem x = 0; x < G.order(); ++x) {
    if (c.color[x] >= c.num_colors)
      return false;
    bool ok = true;
    G.neighbors(x).for_each([&](Elem y) {
      if (c.color[y] == c.color[x])
        ok = false;
    });
    if (!ok)
      return false;
  }
  return true;
}

Coloring coset_coloring(const CayleyGraph &G, const Subspace &V) {
  require(V.ambient_dim() == G.dim(), "coset_coloring: dimension mismatch");
  V.members().for_each([&](Elem v) {
    if (v != 0 && G.generators().contains(v))
      throw PreconditionError("coset_coloring: V is not independent; vertices 0 and " +
                              std::to_string(v) + " are adjacent");
  });
  Coloring c;
  c.color.assign(G.order(), 0);
  const auto parts = cosets(V);
  c.num_colors = parts.size();
  for (std::uint32_t i = 0; i < parts.size(); ++i)
    parts[i].members.for_each([&](Elem x) { c.color[x] = i; });
  if (!is_proper_coloring(G, c))
    throw std::logic_error("coset_coloring: produced an improper colouring");
  return c;
}

Coloring dsatur_coloring(const CayleyGraph &G) {
  const std::size_t V = G.order();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  Coloring c;
  c.color.assign(V, kNone);
  std::vector<std::vector<std::uint64_t>> seen(V);
  std::vector<std::size_t> sat(V, 0);
  for (std::size_t step = 0; step < V; ++step) {
    std::size_t pick = V;
    for (std::size_t v = 0; v < V; ++v)
      if (c.color[v] == kNone && (pick == V || sat[v] > sat[pick]))
        pick = v;
    const auto &used = seen[pick];
    std::uint32_t col = 0;
    while ((col >> 6) < used.size() && ((used[col >> 6] >> (col & 63)) & 1u))
      ++col;
    c.color[pick] = col;
    c.num_colors = std::max<std::size_t>(c.num_colors, col + 1);
    G.neighbors(static_cast<Elem>(pick)).for_each([&](Elem u) {
      auto &s = seen[u];
      if (s.size() <= (col >> 6))
        s.resize((col >> 6) + 1, 0);
      const std::uint64_t bit = std::uint64_t{1} << (col & 63);
      if (!(s[col >> 6] & bit)) {
        s[col >> 6] |= bit;
        ++sat[u];
      }
    });
  }
  if (!is_proper_coloring(G, c))
    throw std::logic_error("dsatur_coloring: produced an improper colouring");
  return c;
}

ChromaticBracket chromatic_bracket(const CayleyGraph &G, std::uint64_t budget) {
  ChromaticBracket b;
  b.omega = max_clique(G, budget);
  b.alpha = independence_number(G, budget);
  b.nodes = b.omega.nodes_explored + b.alpha.nodes_explored;

  const std::size_t order = G.order();
  const std::size_t alpha_ub = b.alpha.optimal ? b.alpha.size : b.alpha.upper_bound;
  b.lower = std::max(b.omega.size, (order + alpha_ub - 1) / alpha_ub);

  b.best = dsatur_coloring(G);
  const Subspace V = largest_subspace_clique(G.complement_generators());
  b.independent_subspace_dim = V.dim();
  if ((std::size_t{1} << (G.dim() - V.dim())) < b.best.num_colors)
    b.best = coset_coloring(G, V);
  b.upper = b.best.num_colors;

  if (G.dim() <= kMaxExactChromaticDim) {
    ExactColoring exact(G, b.lower, b.upper, budget);
    exact.run();
    b.nodes += exact.nodes();
    if (!exact.aborted()) {
      b.exact = exact.best_count();
      if (exact.best_count() < b.best.num_colors) {
        b.best.color = exact.best();
        b.best.num_colors = exact.best_count();
      }
    }
  }
  if (!is_proper_coloring(G, b.best))
    throw std::logic_error("chromatic_bracket: colouring is not proper");
  if (b.lower > b.upper || (b.exact && (*b.exact < b.lower || *b.exact > b.upper)))
    throw std::logic_error("chromatic_bracket: inconsistent bracket");
  return b;
}

} // namespace f2c
