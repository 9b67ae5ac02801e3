#include "f2c/experiments.hpp"

#include "f2c/cayley.hpp"
#include "f2c/rng.hpp"

#include <json.hpp>

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace f2c {

using ordered_json = nlohmann::ordered_json;

namespace {

void finish(NClass &c, long double x_int, long double x_frac, bool exact, double eps) {
  // x = x_int + x_frac with x_int integral; x_frac may be outside [0, 1).
  const long double fl = std::floor(x_frac);
  c.m_pred = static_cast<std::int64_t>(x_int + fl);
  c.frac = x_frac - fl;
  c.exact = exact;
  const long double dist = std::min(c.frac, 1.0L - c.frac);
  c.near_tie = !exact && dist < kNearTieDistance;
  if (c.m_pred <= kMaxPredictedOmegaExponent)
    c.predicted_omega = BigInt(1) << c.m_pred;
  c.eps = eps;
  c.in_T = c.frac < 1.0L - static_cast<long double>(eps);
}

} // namespace

NClass classify_pow2(std::uint64_t log2_n, double eps) {
  require(log2_n >= 1, "classify_n: requires n >= 2");
  NClass c;
  if (log2_n < 64)
    c.n = std::uint64_t{1} << log2_n;
  c.log2_n = static_cast<long double>(log2_n);
  if (std::has_single_bit(log2_n)) {
    const auto loglog = static_cast<long double>(std::countr_zero(log2_n));
    finish(c, c.log2_n + loglog, 0.0L, true, eps);
  } else {
    finish(c, c.log2_n, std::log2(static_cast<long double>(log2_n)), false, eps);
  }
  return c;
}

NClass classify_n(std::uint64_t n, double eps) {
  require(n >= 2, "classify_n: requires n >= 2");
  if (std::has_single_bit(n))
    return classify_pow2(static_cast<std::uint64_t>(std::countr_zero(n)), eps);
  NClass c;
  c.n = n;
  c.log2_n = std::log2(static_cast<long double>(n));
  const long double x = c.log2_n + std::log2(c.log2_n);
  finish(c, 0.0L, x, false, eps);
  return c;
}

DensityResult density_measure(std::uint64_t n_max, double eps) {
  require(n_max >= 2 && n_max <= kMaxDensityRange, "density_measure: N_max out of range [2, 1e7]");
  require(eps > 0.0 && eps <= 1.0, "density_measure: eps out of range (0, 1]");
  DensityResult d;
  const long double threshold = 1.0L - static_cast<long double>(eps) / 24.0L;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const NClass c = classify_n(n, eps);
    ++d.total;
    if (c.near_tie)
      ++d.near_ties;
    if (c.frac < threshold)
      ++d.count;
  }
  d.fraction = static_cast<double>(d.count) / static_cast<double>(d.total);
  return d;
}

PowerOfTwo seq_ni(double eps, int i) {
  require(i >= 1 && i <= 62, "seq_ni: i out of range [1, 62]");
  require(eps > 0.0, "seq_ni: requires eps > 0");
  PowerOfTwo p;
  p.exponent = static_cast<std::uint64_t>(
      std::floor(std::ldexp(1.0L, i) / (1.0L + static_cast<long double>(eps))));
  if (p.exponent < 64)
    p.value = std::uint64_t{1} << p.exponent;
  return p;
}

SeqNj seq_nj(int j) {
  require(j >= 1 && j <= 62, "seq_nj: j out of range [1, 62]");
  SeqNj s;
  s.j = j;
  s.n.exponent = (std::uint64_t{1} << j) - 1;
  if (s.n.exponent < 64)
    s.n.value = std::uint64_t{1} << s.n.exponent;
  s.cls = classify_pow2(s.n.exponent, 0.0);
  const auto x = static_cast<long double>(s.n.exponent);
  s.delta = std::log2(1.0L + 2.0L / x);
  s.near_one = s.cls.frac > 1.0L - s.delta;
  return s;
}

// ---------------------------------------------------------------- trials

void validate(const TrialRecord &r) {
  auto fail = [&](const std::string &what) {
    throw std::runtime_error("TrialRecord(n=" + std::to_string(r.n) +
                             ", seed=" + std::to_string(r.seed) + "): " + what);
  };
  if (r.n < kMinGraphDim || r.n > kMaxGraphDim)
    fail("n out of range");
  if (r.omega_size < (std::size_t{1} << r.max_subspace_dim))
    fail("omega_size < 2^max_subspace_dim");
  if (r.chi_lower > r.chi_upper)
    fail("chi_lower > chi_upper");
  if (r.chi_exact && (*r.chi_exact < r.chi_lower || *r.chi_exact > r.chi_upper))
    fail("chi_exact outside [chi_lower, chi_upper]");
  if (r.M_counts.empty() || r.M_counts[0] != 1)
    fail("M_0 must be 1");
  for (std::size_t m = 1; m < r.M_counts.size(); ++m)
    if (r.M_counts[m] >= 1 && r.M_counts[m - 1] == 0)
      fail("M_m >= 1 with M_{m-1} = 0");
  if (!r.M_partial && static_cast<int>(r.M_counts.size()) - 1 != r.max_subspace_dim)
    fail("M_counts disagree with max_subspace_dim");
}

std::string to_json_line(const TrialRecord &r) {
  ordered_json j;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["A_size"] = r.A_size;
  j["omega_size"] = r.omega_size;
  j["omega_optimal"] = r.omega_optimal;
  j["max_subspace_dim"] = r.max_subspace_dim;
  j["M_counts"] = r.M_counts;
  j["M_partial"] = r.M_partial;
  j["chi_lower"] = r.chi_lower;
  j["chi_upper"] = r.chi_upper;
  if (r.chi_exact)
    j["chi_exact"] = *r.chi_exact;
  else
    j["chi_exact"] = nullptr;
  j["predicted_omega"] = r.predicted_omega;
  j["nodes"] = r.nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

TrialRecord trial_from_json(const std::string &line) {
  const auto j = ordered_json::parse(line);
  TrialRecord r;
  r.n = j.at("n").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.A_size = j.at("A_size").get<std::size_t>();
  r.omega_size = j.at("omega_size").get<std::size_t>();
  r.omega_optimal = j.at("omega_optimal").get<bool>();
  r.max_subspace_dim = j.at("max_subspace_dim").get<int>();
  r.M_counts = j.at("M_counts").get<std::vector<std::uint64_t>>();
  r.M_partial = j.at("M_partial").get<bool>();
  r.chi_lower = j.at("chi_lower").get<std::size_t>();
  r.chi_upper = j.at("chi_upper").get<std::size_t>();
  if (!j.at("chi_exact").is_null())
    r.chi_exact = j.at("chi_exact").get<std::size_t>();
  r.predicted_omega = j.at("predicted_omega").get<std::string>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  validate(r);
  return r;
}

TrialRecord run_trial(int n, std::uint64_t seed, const TrialBudgets &budgets) {
  const auto t0 = std::chrono::steady_clock::now();
  const CayleyGraph G = sample_cayley(n, seed);

  TrialRecord r;
  r.n = n;
  r.seed = seed;
  r.A_size = G.generators().size();

  const SubspaceCliqueReport sub = subspace_cliques(G);
  r.M_counts = sub.counts;
  r.M_partial = sub.partial;
  r.max_subspace_dim = largest_subspace_clique(G.generators()).dim();

  const CliqueOutcome omega = max_clique(G, budgets.clique);
  r.omega_size = omega.size;
  r.omega_optimal = omega.optimal;

  const ChromaticBracket chi = chromatic_bracket(G, budgets.chi);
  r.chi_lower = std::max(chi.lower, omega.size);
  r.chi_upper = chi.upper;
  r.chi_exact = chi.exact;

  r.predicted_omega = classify_n(static_cast<std::uint64_t>(n), 0.0).predicted_omega->str();
  r.nodes = omega.nodes_explored + chi.nodes;
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  validate(r);
  return r;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial_index) {
  return mix64(base_seed, trial_index);
}

// ------------------------------------------------------------ experiments

ExperimentConfig parse_experiment_config(const std::string &json_text) {
  ExperimentConfig c;
  try {
    const auto j = nlohmann::json::parse(json_text);
    c.ns = j.at("ns").get<std::vector<int>>();
    c.trials = j.at("trials").get<std::uint64_t>();
    c.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("clique_budget"))
      c.clique_budget = j.at("clique_budget").get<std::uint64_t>();
    if (j.contains("chi_budget"))
      c.chi_budget = j.at("chi_budget").get<std::uint64_t>();
    c.out_dir = j.at("out_dir").get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw PreconditionError(std::string("experiment config: ") + e.what());
  }
  for (int n : c.ns)
    require(n >= kMinGraphDim && n <= kMaxGraphDim, "experiment config: n out of range [2, 13]");
  require(!c.out_dir.empty(), "experiment config: out_dir is empty");
  return c;
}

std::string summary_csv(const std::vector<SummaryRow> &rows) {
  std::ostringstream os;
  os << "n,trials,predicted_omega,omega_distribution,max_subspace_dim_distribution,"
        "omega_match_rate,subspace_match_rate,omega_optimal_rate,mean_chi_lower,mean_chi_upper\n";
  for (const auto &r : rows) {
    os << r.n << ',' << r.trials << ',' << r.predicted_omega << ',';
    for (std::size_t i = 0; i < r.omega_hist.size(); ++i)
      os << (i ? ";" : "") << r.omega_hist[i].first << ':' << r.omega_hist[i].second;
    os << ',';
    for (std::size_t i = 0; i < r.subspace_dim_hist.size(); ++i)
      os << (i ? ";" : "") << r.subspace_dim_hist[i].first << ':' << r.subspace_dim_hist[i].second;
    os << ',' << r.omega_match_rate << ',' << r.subspace_match_rate << ','
       << r.omega_optimal_rate << ',' << r.mean_chi_lower << ',' << r.mean_chi_upper << '\n';
  }
  return os.str();
}

namespace {

SummaryRow summarize(int n, std::span<const TrialRecord> recs) {
  SummaryRow row;
  row.n = n;
  row.trials = recs.size();
  const NClass cls = classify_n(static_cast<std::uint64_t>(n), 0.0);
  row.predicted_omega = cls.predicted_omega->str();
  std::map<std::size_t, std::uint64_t> omega;
  std::map<int, std::uint64_t> dims;
  std::uint64_t omega_match = 0, dim_match = 0, optimal = 0;
  double lo = 0, hi = 0;
  for (const auto &r : recs) {
    ++omega[r.omega_size];
    ++dims[r.max_subspace_dim];
    omega_match += r.predicted_omega == std::to_string(r.omega_size);
    dim_match += r.max_subspace_dim == cls.m_pred;
    optimal += r.omega_optimal;
    lo += static_cast<double>(r.chi_lower);
    hi += static_cast<double>(r.chi_upper);
  }
  row.omega_hist.assign(omega.begin(), omega.end());
  row.subspace_dim_hist.assign(dims.begin(), dims.end());
  if (!recs.empty()) {
    const auto t = static_cast<double>(recs.size());
    row.omega_match_rate = static_cast<double>(omega_match) / t;
    row.subspace_match_rate = static_cast<double>(dim_match) / t;
    row.omega_optimal_rate = static_cast<double>(optimal) / t;
    row.mean_chi_lower = lo / t;
    row.mean_chi_upper = hi / t;
  }
  return row;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig &config, unsigned threads) {
  for (int n : config.ns)
    require(n >= kMinGraphDim && n <= kMaxGraphDim, "run_experiment: n out of range [2, 13]");

  std::vector<std::uint64_t> seeds(config.trials);
  std::unordered_set<std::uint64_t> distinct;
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    seeds[i] = trial_seed(config.base_seed, i);
    if (!distinct.insert(seeds[i]).second)
      throw std::runtime_error("run_experiment: trial seed collision at index " + std::to_string(i));
  }

  struct Task {
    int n;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (int n : config.ns)
    for (std::uint64_t i = 0; i < config.trials; ++i)
      tasks.push_back({n, seeds[i]});

  ExperimentResult res;
  res.records.resize(tasks.size());
  const TrialBudgets budgets{config.clique_budget, config.chi_budget};
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        res.records[t] = run_trial(tasks[t].n, tasks[t].seed, budgets);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = tasks.size();
      }
    }
  };
  threads = std::max(1u, threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < threads; ++w)
      pool.emplace_back(work);
    work();
  }
  if (error)
    std::rethrow_exception(error);

  for (std::size_t i = 0; i < config.ns.size(); ++i) {
    std::span<const TrialRecord> recs(res.records.data() + i * config.trials, config.trials);
    res.summary.push_back(summarize(config.ns[i], recs));
  }

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec)
    throw PreconditionError("run_experiment: cannot create " + config.out_dir.string() + ": " +
                            ec.message());
  res.jsonl_path = config.out_dir / "trials.jsonl";
  res.summary_path = config.out_dir / "summary.csv";
  std::ofstream jsonl(res.jsonl_path, std::ios::binary | std::ios::trunc);
  std::ofstream csv(res.summary_path, std::ios::binary | std::ios::trunc);
  if (!jsonl || !csv)
    throw PreconditionError("run_experiment: output path not writable: " + config.out_dir.string());
  for (const auto &r : res.records)
    jsonl << to_json_line(r) << '\n';
  csv << summary_csv(res.summary);
  if (!jsonl.flush() || !csv.flush())
    throw PreconditionError("run_experiment: failed writing to " + config.out_dir.string());
  return res;
}

} // namespace f2c
