#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquetop {

struct ConfigError : std::runtime_error {
  using runtime_error::runtime_error;
};

// Grid experiment over G(n, n^alpha). Metric specs:
//   dimension | betti_gf2 | betti_q | collapse | minimal_cycle |
//   odd_torsion_screen | patterns:<name>(,<name>)* | bubble(<edge_cap>)
struct ExperimentConfig {
  std::vector<int> n_values;
  std::vector<double> alpha_values;  // exponents, all < 0 so that p < 1
  int trials = 10;
  std::uint64_t base_seed = 1;
  std::vector<std::string> metrics = {"dimension"};
  int dim_cap = 5;
  long long count_cap = 2'000'000;
};

// Flat "key = value" lines, '#' comments. Numeric lists split on commas or
// spaces; the metrics list splits on spaces only, since a metric spec like
// patterns:k3,k4 contains commas. Keys: n, alpha, trials, seed, metrics,
// dim_cap, count_cap. Unknown keys and malformed values throw ConfigError.
ExperimentConfig parse_config(std::istream& is);
void validate_config(const ExperimentConfig& c);  // throws ConfigError

// Per-trial seed: base_seed, n, alpha index and trial index folded in with
// distinct salts, so changing one coordinate changes the whole stream.
std::uint64_t trial_seed(std::uint64_t base_seed, int n, int alpha_index, int trial_index);

struct TrialRecord {
  int n = 0;
  double alpha = 0;
  int alpha_index = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  bool failed = false;  // exception captured; values are blank
  std::string error;
  std::vector<std::string> values;  // aligned with ExperimentResult::metric_columns
  double wall_ms = 0;
};

struct ExperimentResult {
  std::vector<std::string> metric_columns;
  std::vector<TrialRecord> records;
  long long failures = 0;
};

// Runs the full grid. A throwing trial is recorded and counted, not fatal;
// callers map failures > 0 to a partial-failure exit status.
ExperimentResult run_experiment(const ExperimentConfig& c);

// Columns: n,alpha,alpha_index,trial,seed,failed,error,<metrics>,wall_ms.
// wall_ms comes last so runs compare byte for byte once it is dropped.
void write_experiment_csv(std::ostream& os, const ExperimentResult& r, bool with_wall_ms = true);
void write_experiment_json(std::ostream& os, const ExperimentResult& r, bool with_wall_ms = true);

// One-event frequency sweep over alpha. Events:
//   contains:<pattern>      pattern skeleton embeds (cap 1)
//   dimension>=<k>          clique complex reaches dimension k
//   b<k>_<q|gf2>_zero       betti number vanishes
//   b<k>_<q|gf2>_positive   betti number is positive
//   collapsible_to_graph    collapse certificate reaches a graph residue
struct SweepSpec {
  int n = 0;
  std::vector<double> alphas;
  int trials = 0;
  std::uint64_t base_seed = 1;
  std::string event;
  int dim_cap = 5;
};

struct SweepPoint {
  double alpha = 0;
  long long hits = 0;
  long long trials = 0;
  double freq = 0;
  double se = 0;  // binomial standard error sqrt(f(1-f)/trials)
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepPoint> points;
  std::optional<double> crossing;  // linear interpolation where freq crosses 1/2
  std::optional<double> marker;    // known threshold exponent, when the event has one
};

SweepResult threshold_sweep(const SweepSpec& spec);

// "alpha,hits,trials,freq,se" rows.
void write_sweep_csv(std::ostream& os, const SweepResult& r);
// Step plot of the frequencies with error ticks and the marker as a dashed
// vertical line.
void write_sweep_svg(std::ostream& os, const SweepResult& r);
// Human-readable recap; frequencies carry binomial standard errors, and any
// crossing is described as a finite-size proxy for the asymptotic threshold.
std::string sweep_summary(const SweepResult& r);

}  // namespace cliquetop
