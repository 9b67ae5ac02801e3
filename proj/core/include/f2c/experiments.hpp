#pragma once

#include "f2c/cliquechrom.hpp"
#include "f2c/numeric.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace f2c {

/// Position of n relative to the concentration point 2^floor(log2 n + log2 log2 n).
struct NClass {
  std::optional<std::uint64_t> n; // empty when n only exists in exponent form
  long double log2_n = 0;
  std::int64_t m_pred = 0;
  std::optional<BigInt> predicted_omega; // 2^m_pred, empty above kMaxPredictedOmegaExponent
  long double frac = 0;   // {log2 n + log2 log2 n}
  bool exact = false;     // frac computed without rounding
  bool near_tie = false;  // inexact and within 1e-9 of an integer
  double eps = 0;
  bool in_T = false;      // frac < 1 - eps
};

inline constexpr long double kNearTieDistance = 1e-9L;
inline constexpr std::int64_t kMaxPredictedOmegaExponent = 4096;

/// Requires n >= 2.
NClass classify_n(std::uint64_t n, double eps);

/// Same classification for n = 2^log2_n, usable past 64 bits.
NClass classify_pow2(std::uint64_t log2_n, double eps);

struct DensityResult {
  std::uint64_t count = 0; // n in [2, N_max] with frac < 1 - eps/24
  std::uint64_t total = 0;
  double fraction = 0;
  std::uint64_t near_ties = 0;
};

inline constexpr std::uint64_t kMaxDensityRange = 10'000'000;

DensityResult density_measure(std::uint64_t n_max, double eps);

/// A power of two 2^exponent, with its integer value when it fits in 64 bits.
struct PowerOfTwo {
  std::uint64_t exponent = 0;
  std::optional<std::uint64_t> value;
};

/// n_i = 2^m_i with m_i = floor(2^i / (1 + eps)).
PowerOfTwo seq_ni(double eps, int i);

struct SeqNj {
  int j = 0;
  PowerOfTwo n;        // 2^(2^j - 1)
  NClass cls;
  long double delta = 0; // log2(1 + 2/x), x = 2^j - 1
  bool near_one = false; // frac > 1 - delta
};

SeqNj seq_nj(int j);

struct TrialBudgets {
  std::uint64_t clique = kUnlimitedBudget;
  std::uint64_t chi = kUnlimitedBudget;
};

struct TrialRecord {
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t A_size = 0;
  std::size_t omega_size = 0;
  bool omega_optimal = false;
  int max_subspace_dim = 0;
  std::vector<std::uint64_t> M_counts;
  bool M_partial = false;
  std::size_t chi_lower = 0;
  std::size_t chi_upper = 0;
  std::optional<std::size_t> chi_exact;
  std::string predicted_omega;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

/// Throws std::runtime_error if the record violates its invariants.
void validate(const TrialRecord &r);

/// One JSON object, no trailing newline. Field order is fixed.
std::string to_json_line(const TrialRecord &r);
TrialRecord trial_from_json(const std::string &line);

/// Samples the graph for (n, seed), counts subspace cliques, runs max_clique
/// and chromatic_bracket. Everything except elapsed_ms is a function of the
/// arguments.
TrialRecord run_trial(int n, std::uint64_t seed, const TrialBudgets &budgets = {});

/// Per-trial seed: mix64(base_seed, trial_index).
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial_index);

struct ExperimentConfig {
  std::vector<int> ns;
  std::uint64_t trials = 0;
  std::uint64_t base_seed = 0;
  std::uint64_t clique_budget = kUnlimitedBudget;
  std::uint64_t chi_budget = kUnlimitedBudget;
  std::filesystem::path out_dir;
};

/// Parses {ns, trials, base_seed, clique_budget, chi_budget, out_dir}.
ExperimentConfig parse_experiment_config(const std::string &json_text);

struct SummaryRow {
  int n = 0;
  std::uint64_t trials = 0;
  std::string predicted_omega;
  std::vector<std::pair<std::size_t, std::uint64_t>> omega_hist;
  std::vector<std::pair<int, std::uint64_t>> subspace_dim_hist;
  double omega_match_rate = 0;
  double subspace_match_rate = 0;
  double omega_optimal_rate = 0;
  double mean_chi_lower = 0;
  double mean_chi_upper = 0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records; // index order: ns outer, trials inner
  std::vector<SummaryRow> summary;
  std::filesystem::path jsonl_path;
  std::filesystem::path summary_path;
};

std::string summary_csv(const std::vector<SummaryRow> &rows);

/// Runs every trial on `threads` workers and writes <out_dir>/trials.jsonl
/// and <out_dir>/summary.csv. Output is independent of the worker count.
ExperimentResult run_experiment(const ExperimentConfig &config, unsigned threads = 1);

} // namespace f2c
