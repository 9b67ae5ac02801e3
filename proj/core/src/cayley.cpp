#include "f2c/cayley.hpp"

#include "f2c/rng.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace f2c {

namespace {

void check_graph_dim(int n) {
  require(n >= kMinGraphDim && n <= kMaxGraphDim, "cayley: n out of range [2, 13]");
}

} // namespace

CayleyGraph::CayleyGraph(int n, ElemSet generators, std::optional<std::uint64_t> seed)
    : n_(n), generators_(std::move(generators)), seed_(seed) {
  check_graph_dim(n);
  require(generators_.dim() == n, "cayley: generator set dimension mismatch");
  generators_.erase(0);
  adjacency_.reserve(order());
  for (Elem x = 0; x < order(); ++x)
    adjacency_.push_back(generators_.translated(x));
}

const ElemSet &CayleyGraph::neighbors(Elem x) const {
  require(x < order(), "neighbors: vertex outside F_2^n");
  return adjacency_[x];
}

ElemSet CayleyGraph::complement_generators() const {
  ElemSet c = ElemSet::full(n_) - generators_;
  c.erase(0);
  return c;
}

ElemSet sample_generators(int n, std::uint64_t seed) {
  check_graph_dim(n);
  ElemSet A(n);
  const Elem universe = Elem{1} << n;
  std::uint64_t word = 0;
  for (Elem i = 0; i < universe; ++i) {
    if ((i & 63) == 0)
      word = mix64(seed, i >> 6);
    if (i != 0 && ((word >> (i & 63)) & 1u))
      A.insert(i);
  }
  return A;
}

CayleyGraph sample_cayley(int n, std::uint64_t seed) {
  return CayleyGraph(n, sample_generators(n, seed), seed);
}

CayleyGraph from_generators(int n, const ElemSet &A) {
  check_graph_dim(n);
  require(A.dim() == n, "from_generators: dimension mismatch");
  return CayleyGraph(n, A);
}

const ElemSet &neighbors(const CayleyGraph &G, Gf2Vec x) {
  require(x.n == G.dim(), "neighbors: dimension mismatch");
  return G.neighbors(x.bits);
}

std::string to_hex(const ElemSet &S) {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t len = (S.universe() + 3) / 4;
  std::string out(len, '0');
  for (std::size_t i = 0; i < len; ++i) {
    unsigned nib = 0;
    for (unsigned j = 0; j < 4; ++j)
      if (S.contains(static_cast<Elem>(4 * i + j)))
        nib |= 1u << j;
    out[i] = digits[nib];
  }
  return out;
}

ElemSet from_hex(int n, const std::string &hex) {
  ElemSet S(n);
  const std::size_t len = (S.universe() + 3) / 4;
  require(hex.size() == len, "from_hex: expected " + std::to_string(len) + " hex digits");
  for (std::size_t i = 0; i < len; ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[i])));
    unsigned nib = 0;
    if (c >= '0' && c <= '9')
      nib = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      nib = static_cast<unsigned>(c - 'a' + 10);
    else
      throw PreconditionError("from_hex: invalid hex digit");
    for (unsigned j = 0; j < 4; ++j) {
      if (!((nib >> j) & 1u))
        continue;
      const std::size_t e = 4 * i + j;
      require(e < S.universe(), "from_hex: bit set beyond 2^n");
      S.insert(static_cast<Elem>(e));
    }
  }
  return S;
}

std::string serialize(const CayleyGraph &G) {
  std::ostringstream os;
  os << "n=" << G.dim() << " seed=";
  if (G.seed())
    os << *G.seed();
  else
    os << "none";
  os << '\n' << to_hex(G.generators()) << '\n';
  return os.str();
}

CayleyGraph deserialize(const std::string &text) {
  std::istringstream is(text);
  std::string n_tok, seed_tok, hex;
  require(static_cast<bool>(is >> n_tok >> seed_tok >> hex), "deserialize: truncated graph text");
  require(n_tok.rfind("n=", 0) == 0 && seed_tok.rfind("seed=", 0) == 0,
          "deserialize: malformed header");

  int n = 0;
  const auto nv = n_tok.substr(2);
  auto [np, nec] = std::from_chars(nv.data(), nv.data() + nv.size(), n);
  require(nec == std::errc{} && np == nv.data() + nv.size(), "deserialize: bad n");

  std::optional<std::uint64_t> seed;
  const auto sv = seed_tok.substr(5);
  if (sv != "none") {
    std::uint64_t s = 0;
    auto [sp, sec] = std::from_chars(sv.data(), sv.data() + sv.size(), s);
    require(sec == std::errc{} && sp == sv.data() + sv.size(), "deserialize: bad seed");
    seed = s;
  }
  check_graph_dim(n);
  return CayleyGraph(n, from_hex(n, hex), seed);
}

} // namespace f2c
