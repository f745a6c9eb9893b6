#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bjorth/matrix.hpp"
#include "bjorth/parallel.hpp"

namespace bjorth {

/// n×n matrix of i.i.d. standard Gaussians of the field (complex: re, im ~ N(0, 1/2)).
Matrix gen_ginibre(std::size_t n, std::uint64_t seed, Field field);

/// Pair with a known witness: A is Ginibre, x₀ a top right singular vector of A,
/// and B = B′ − (⟨B′x₀, Ax₀⟩/‖Ax₀‖²)·(Ax₀)x₀* for a second Ginibre B′, so that
/// ⟨Bx₀, Ax₀⟩ = 0 and ‖Ax₀‖ = ‖A‖.
struct OrthogonalPair {
  Matrix a;
  Matrix b;
  Vector x0;
};
OrthogonalPair gen_orthogonal_pair(std::size_t n, std::uint64_t seed, Field field);

struct SuiteTolerances {
  double decision_tol = 1e-7;
  double gap_tol = 1e-4;
  double witness_eps = 1e-6;
};

struct SuiteConfig {
  std::vector<int> dims{2, 3, 4, 5, 6};
  int trials_per_dim = 40;
  std::uint64_t seed = 0;
  Field field = Field::Complex;
  SuiteTolerances tolerances;
  int restarts = 50;
  Exec exec = Exec::Parallel;
};

SuiteConfig suite_config_from_json(const nlohmann::json& j, std::uint64_t default_seed = 0);
nlohmann::json to_json(const SuiteConfig& c);

enum class Suite { Minimax, Agreement, WitnessQuality };
std::string_view to_string(Suite s);

struct TrialRecord {
  Suite suite = Suite::Minimax;
  int dim = 0;
  int trial = 0;
  std::uint64_t trial_seed = 0;
  bool passed = false;
  std::string verdict;
  std::optional<double> margin;
  std::optional<double> gap;
  std::optional<double> relative_gap;
  std::optional<double> witness_residual;
  std::string error;
  double runtime_ms = 0.0;
};

/// Inputs of one trial, regenerated from the trial seed.
std::pair<Matrix, Matrix> trial_inputs(Suite suite, int dim, std::uint64_t trial_seed, Field field);

/// Runs a single trial; replaying a record's coordinates reproduces it exactly.
TrialRecord run_trial(const SuiteConfig& config, Suite suite, int dim, int trial);

struct SuiteAggregates {
  int total = 0;
  int passed = 0;
  int minimax_passed = 0;
  int agreement_passed = 0;
  int witness_passed = 0;
  double max_relative_gap = 0.0;
  double median_relative_gap = 0.0;
  double max_witness_residual = 0.0;
  int boundary_count = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<TrialRecord> records;  // suite-major, then dim, then trial
  SuiteAggregates aggregates;
  double total_runtime_ms = 0.0;

  bool all_passed() const { return aggregates.passed == aggregates.total; }
};

SuiteReport run_suite(const SuiteConfig& config);

/// Report JSON. Runtimes live only under the "runtimes" key; the rest is a
/// deterministic function of the config.
nlohmann::json to_json(const SuiteReport& r);
/// One row per trial: dim,trial,suite,verdict,margin,gap,witness_residual.
std::string to_csv(const SuiteReport& r);

}  // namespace bjorth
