#include "f2c/cayley.hpp"
#include "f2c/cliquechrom.hpp"
#include "f2c/experiments.hpp"
#include "f2c/freiman.hpp"
#include "f2c/moments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace f2c;

namespace {

enum class Format { json, csv };

struct Globals {
  Format format = Format::json;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

std::string csv_cell(const json &v) {
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
      out += (i ? ";" : "") + csv_cell(v[i]);
    return out;
  }
  if (v.is_object()) {
    std::string out;
    bool first = true;
    for (const auto &[k, x] : v.items()) {
      out += (first ? "" : ";") + k + ":" + csv_cell(x);
      first = false;
    }
    return out;
  }
  if (v.is_null())
    return "";
  return v.dump();
}

/// One object per line in JSON mode; a header plus one row in CSV mode.
void emit(const Globals &g, const json &obj) {
  if (g.format == Format::json) {
    std::cout << obj.dump() << '\n';
    return;
  }
  std::string header, row;
  bool first = true;
  for (const auto &[k, v] : obj.items()) {
    header += (first ? "" : ",") + k;
    row += (first ? "" : ",") + csv_cell(v);
    first = false;
  }
  std::cout << header << '\n' << row << '\n';
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json elements_json(const ElemSet &S) { return S.elements(); }

struct GraphSource {
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string in;

  void add_to(CLI::App *cmd) {
    auto *n_opt = cmd->add_option("--n", n, "Dimension of F_2^n (2..13)");
    auto *seed_opt = cmd->add_option("--seed", seed, "Sampling seed");
    auto *in_opt = cmd->add_option("--in", in, "Graph file written by `sample --out`");
    seed_opt->needs(n_opt);
    in_opt->excludes(seed_opt)->excludes(n_opt);
  }

  CayleyGraph load() const {
    if (!in.empty())
      return deserialize(read_file(in));
    require(seed.has_value() && n != 0, "either --in or both --n and --seed are required");
    return sample_cayley(n, *seed);
  }
};

json clique_json(const CayleyGraph &G, const CliqueOutcome &c) {
  json j;
  j["n"] = G.dim();
  j["seed"] = G.seed() ? json(*G.seed()) : json(nullptr);
  j["A_size"] = G.generators().size();
  j["omega"] = c.size;
  j["optimal"] = c.optimal;
  j["method"] = to_string(c.method);
  j["upper_bound"] = c.upper_bound;
  j["nodes"] = c.nodes_explored;
  j["witness"] = elements_json(c.witness);
  return j;
}

ElemSet parse_hex_elements(const std::string &text) {
  std::vector<Elem> elems;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty())
      continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used, 16);
    } catch (const std::exception &) {
      throw PreconditionError("freiman-dim: bad hex element '" + token + "'");
    }
    require(used == token.size(), "freiman-dim: bad hex element '" + token + "'");
    require(v < (1ul << kMaxSetDim), "freiman-dim: element exceeds 2^20");
    elems.push_back(static_cast<Elem>(v));
  }
  require(!elems.empty(), "freiman-dim: empty set");
  Elem top = *std::max_element(elems.begin(), elems.end());
  const int n = std::max(1, static_cast<int>(std::bit_width(top)));
  return ElemSet(n, elems);
}

json nclass_json(const NClass &c) {
  json j;
  j["n"] = c.n ? json(*c.n) : json(nullptr);
  j["log2_n"] = static_cast<double>(c.log2_n);
  j["m_pred"] = c.m_pred;
  j["predicted_omega"] = c.predicted_omega ? json(c.predicted_omega->str()) : json(nullptr);
  j["frac"] = static_cast<double>(c.frac);
  j["exact"] = c.exact;
  j["near_tie"] = c.near_tie;
  j["eps"] = c.eps;
  j["in_T"] = c.in_T;
  return j;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Random Cayley sum graphs on F_2^n: cliques, colourings, sumsets and moments"};
  app.require_subcommand(1);
  Globals g;
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  std::function<void()> action;

  auto *sample = app.add_subcommand("sample", "Sample a random generator set");
  int sample_n = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  sample->add_option("--n", sample_n, "Dimension (2..13)")->required();
  sample->add_option("--seed", sample_seed, "Seed")->required();
  sample->add_option("--out", sample_out, "Write the graph file here");
  sample->callback([&] {
    action = [&] {
      const auto G = sample_cayley(sample_n, sample_seed);
      if (!sample_out.empty()) {
        std::ofstream out(sample_out, std::ios::binary);
        require(static_cast<bool>(out << serialize(G)), "cannot write " + sample_out);
      }
      json j;
      j["n"] = G.dim();
      j["seed"] = sample_seed;
      j["A_size"] = G.generators().size();
      j["generators_hex"] = to_hex(G.generators());
      emit(g, j);
    };
  });

  auto *omega = app.add_subcommand("omega", "Maximum clique");
  GraphSource omega_src;
  std::uint64_t omega_budget = kUnlimitedBudget;
  omega_src.add_to(omega);
  omega->add_option("--budget", omega_budget, "Search-node budget");
  omega->callback([&] {
    action = [&] {
      const auto G = omega_src.load();
      emit(g, clique_json(G, max_clique(G, omega_budget)));
    };
  });

  auto *chi = app.add_subcommand("chi", "Chromatic number bracket");
  GraphSource chi_src;
  std::uint64_t chi_budget = kUnlimitedBudget;
  chi_src.add_to(chi);
  chi->add_option("--budget", chi_budget, "Search-node budget");
  chi->callback([&] {
    action = [&] {
      const auto G = chi_src.load();
      const auto b = chromatic_bracket(G, chi_budget);
      json j;
      j["n"] = G.dim();
      j["seed"] = G.seed() ? json(*G.seed()) : json(nullptr);
      j["chi_lower"] = b.lower;
      j["chi_upper"] = b.upper;
      j["chi_exact"] = b.exact ? json(*b.exact) : json(nullptr);
      j["omega"] = b.omega.size;
      j["omega_optimal"] = b.omega.optimal;
      j["alpha"] = b.alpha.size;
      j["alpha_optimal"] = b.alpha.optimal;
      j["independent_subspace_dim"] = b.independent_subspace_dim;
      j["nodes"] = b.nodes;
      j["coloring"] = b.best.color;
      emit(g, j);
    };
  });

  auto *moments = app.add_subcommand("moments", "Exact mean and variance of M_m");
  int mom_n = 0, mom_m = 0;
  bool mom_csv = false;
  moments->add_option("--n", mom_n, "Dimension")->required();
  moments->add_option("--m", mom_m, "Subspace dimension")->required();
  moments->add_flag("--csv", mom_csv, "CSV output");
  moments->callback([&] {
    action = [&] {
      const auto r = moment_report(mom_n, mom_m);
      if (mom_csv || g.format == Format::csv) {
        std::cout << moment_csv_header() << '\n' << moment_csv_row(r) << '\n';
        return;
      }
      json j;
      j["n"] = r.n;
      j["m"] = r.m;
      j["E_M"] = to_string(r.E_M);
      j["E_M_approx"] = static_cast<double>(to_long_double(r.E_M));
      j["Var_M"] = to_string(r.Var_M);
      j["Var_M_approx"] = static_cast<double>(to_long_double(r.Var_M));
      j["E_lb"] = to_string(r.E_lb);
      j["Var_ub"] = to_string(r.Var_ub);
      j["chebyshev"] = to_string(r.chebyshev);
      j["cheb_ub"] = to_string(r.cheb_ub);
      j["holds_E"] = r.holds_E;
      j["holds_Var"] = r.holds_Var;
      j["holds_cheb"] = r.holds_cheb;
      emit(g, j);
    };
  });

  auto *skl = app.add_subcommand("skl", "Census of k-subsets by restricted doubling");
  int skl_n = 0, skl_k = 0;
  bool skl_csv = false;
  skl->add_option("--n", skl_n, "Dimension")->required();
  skl->add_option("--k", skl_k, "Subset size")->required();
  skl->add_flag("--csv", skl_csv, "CSV output");
  skl->callback([&] {
    action = [&] {
      const auto c = census_skl(skl_n, skl_k, g.threads);
      if (skl_csv || g.format == Format::csv) {
        std::cout << census_to_csv(c);
        return;
      }
      json j;
      j["n"] = c.n;
      j["k"] = c.k;
      j["total"] = c.total.str();
      json counts = json::object();
      for (const auto &[l, count] : c.counts)
        counts[std::to_string(l)] = count;
      j["counts"] = counts;
      j["union_bound"] = to_string(c.union_bound);
      emit(g, j);
    };
  });

  auto *fdim = app.add_subcommand("freiman-dim", "Freiman dimension of a set");
  std::string fdim_set;
  fdim->add_option("--set", fdim_set, "Comma-separated hex elements, e.g. 0,1,2,3")->required();
  fdim->callback([&] {
    action = [&] {
      const ElemSet X = parse_hex_elements(fdim_set);
      const auto r = freiman_dimension(X);
      json j;
      j["k"] = X.size();
      j["r"] = r.r;
      j["method"] = to_string(r.method);
      j["elements"] = X.elements();
      j["witness"] = r.witness;
      emit(g, j);
    };
  });

  auto *classify = app.add_subcommand("classify", "Concentration-point classification of n");
  std::uint64_t cls_n = 0;
  double cls_eps = 0.1;
  classify->add_option("--n", cls_n, "n >= 2")->required();
  classify->add_option("--eps", cls_eps, "epsilon")->capture_default_str();
  classify->callback([&] { action = [&] { emit(g, nclass_json(classify_n(cls_n, cls_eps))); }; });

  auto *density = app.add_subcommand("density", "Fraction of n <= N_max with frac < 1 - eps/24");
  std::uint64_t den_max = 0;
  double den_eps = 0.1;
  density->add_option("--nmax", den_max, "N_max (<= 1e7)")->required();
  density->add_option("--eps", den_eps, "epsilon")->capture_default_str();
  density->callback([&] {
    action = [&] {
      const auto d = density_measure(den_max, den_eps);
      json j;
      j["nmax"] = den_max;
      j["eps"] = den_eps;
      j["count"] = d.count;
      j["total"] = d.total;
      j["fraction"] = d.fraction;
      j["near_ties"] = d.near_ties;
      emit(g, j);
    };
  });

  auto *bounds = app.add_subcommand("bounds", "log2 of the tail bound on |S_k^l| 2^-l");
  long double b_n = 0, b_k = 0, b_l = 0;
  bounds->add_option("--n", b_n, "Dimension")->required();
  bounds->add_option("--k", b_k, "Set size")->required();
  bounds->add_option("--l", b_l, "Restricted doubling l >= 10k")->required();
  bounds->callback([&] {
    action = [&] {
      const auto t = tail_exponent(b_n, b_k, b_l);
      json j;
      j["n"] = static_cast<double>(b_n);
      j["k"] = static_cast<double>(b_k);
      j["l"] = static_cast<double>(b_l);
      j["log2_bound"] = static_cast<double>(t.log2_bound);
      j["regime"] = to_string(t.regime);
      j["freiman_dim_bound"] = static_cast<double>(t.freiman_dim_bound);
      emit(g, j);
    };
  });

  auto *experiment = app.add_subcommand("experiment", "Run seeded trials from a JSON config");
  std::string exp_config;
  experiment->add_option("--config", exp_config, "Config file")->required()->check(CLI::ExistingFile);
  experiment->callback([&] {
    action = [&] {
      const auto config = parse_experiment_config(read_file(exp_config));
      const auto res = run_experiment(config, g.threads);
      if (g.format == Format::csv) {
        std::cout << summary_csv(res.summary);
        return;
      }
      json j;
      j["trials_jsonl"] = res.jsonl_path.string();
      j["summary_csv"] = res.summary_path.string();
      j["records"] = res.records.size();
      emit(g, j);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }
  g.format = format == "csv" ? Format::csv : Format::json;

  try {
    action();
  } catch (const PreconditionError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded &e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
