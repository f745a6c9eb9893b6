#include "bjorth/ensemble.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bjorth/errors.hpp"
#include "bjorth/matrix_json.hpp"
#include "bjorth/minimax.hpp"
#include "bjorth/orthogonality.hpp"
#include "bjorth/random.hpp"
#include "bjorth/spectral.hpp"

namespace bjorth {

using nlohmann::json;

Matrix gen_ginibre(std::size_t n, std::uint64_t seed, Field field) {
  if (n < 1) throw InputError("gen_ginibre: n must be positive");
  Rng rng(seed);
  std::vector<cx> data(n * n);
  for (auto& z : data) z = rng.gaussian(field);
  return Matrix(n, n, std::move(data), field);
}

OrthogonalPair gen_orthogonal_pair(std::size_t n, std::uint64_t seed, Field field) {
  if (n < 2) throw InputError("gen_orthogonal_pair: n must be at least 2");
  Matrix a = gen_ginibre(n, seed, field);
  for (std::uint64_t s = seed + 2; a.is_zero(); s += 2) a = gen_ginibre(n, s, field);
  Vector x0 = top_singular_subspace(a).top_subspace.front();
  Matrix b = gen_ginibre(n, seed + 1, field);

  const Vector ax = a * x0;
  const cx coef = inner(b * x0, ax) / ax.norm_squared();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) -= coef * ax[i] * std::conj(x0[j]);
  }
  return {std::move(a), std::move(b), std::move(x0)};
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Minimax: return "minimax";
    case Suite::Agreement: return "agreement";
    case Suite::WitnessQuality: return "witness";
  }
  return "?";
}

// ---------------------------------------------------------------- config

SuiteConfig suite_config_from_json(const json& j, std::uint64_t default_seed) {
  if (!j.is_object()) throw InputError("suite config must be a JSON object");
  SuiteConfig c;
  c.seed = default_seed;
  try {
    if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<int>>();
    if (j.contains("trials_per_dim")) c.trials_per_dim = j.at("trials_per_dim").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("field")) c.field = field_from_string(j.at("field").get<std::string>());
    if (j.contains("restarts")) c.restarts = j.at("restarts").get<int>();
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      if (t.contains("decision_tol")) c.tolerances.decision_tol = t.at("decision_tol").get<double>();
      if (t.contains("gap_tol")) c.tolerances.gap_tol = t.at("gap_tol").get<double>();
      if (t.contains("witness_eps")) c.tolerances.witness_eps = t.at("witness_eps").get<double>();
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("suite config: ") + e.what());
  }
  if (c.dims.empty()) throw InputError("suite config: dims must not be empty");
  for (int d : c.dims) {
    if (d < 2) throw InputError("suite config: every dim must be at least 2");
  }
  if (c.trials_per_dim < 1) throw InputError("suite config: trials_per_dim must be positive");
  if (c.restarts < 1) throw InputError("suite config: restarts must be positive");
  const SuiteTolerances& t = c.tolerances;
  if (!(t.decision_tol > 0.0 && t.decision_tol < 1.0)) {
    throw InputError("suite config: decision_tol must lie in (0, 1)");
  }
  if (!(t.gap_tol > 0.0) || !(t.witness_eps > 0.0)) {
    throw InputError("suite config: gap_tol and witness_eps must be positive");
  }
  return c;
}

json to_json(const SuiteConfig& c) {
  return json{{"dims", c.dims},
              {"trials_per_dim", c.trials_per_dim},
              {"seed", c.seed},
              {"field", std::string(to_string(c.field))},
              {"restarts", c.restarts},
              {"tolerances",
               {{"decision_tol", c.tolerances.decision_tol},
                {"gap_tol", c.tolerances.gap_tol},
                {"witness_eps", c.tolerances.witness_eps}}}};
}

// ---------------------------------------------------------------- trials

namespace {

std::uint64_t trial_seed(const SuiteConfig& c, Suite suite, int dim, int trial) {
  return substream_seed(c.seed, {static_cast<std::uint64_t>(suite), static_cast<std::uint64_t>(dim),
                                 static_cast<std::uint64_t>(trial)});
}

void run_minimax(const SuiteConfig& c, const Matrix& a, const Matrix& b, TrialRecord& rec) {
  MinimaxOptions o;
  o.restarts = c.restarts;
  o.gap_tol = c.tolerances.gap_tol;
  o.seed = rec.trial_seed;
  o.exec = Exec::Serial;
  const MinimaxReport r = minimax_report(a, b, o);
  rec.gap = r.gap;
  rec.relative_gap = r.relative_gap();
  rec.passed = r.gap >= -1e-9 && r.relative_gap() <= c.tolerances.gap_tol;
  rec.verdict = r.restart_starved ? "RESTART_STARVED" : "EQUAL";
}

WitnessOptions witness_options(std::uint64_t seed) {
  WitnessOptions w;
  w.seed = seed;
  w.exec = Exec::Serial;
  return w;
}

void run_agreement(const SuiteConfig& c, const Matrix& a, const Matrix& b, TrialRecord& rec) {
  const Decision d = decide(a, b, c.tolerances.decision_tol, witness_options(rec.trial_seed));
  rec.verdict = std::string(to_string(d.status));
  rec.margin = d.definitional.margin;
  if (d.witness) rec.witness_residual = d.witness->epsilon;
  rec.passed = d.routes_agree || d.status == Status::Boundary;
}

void run_witness_quality(const SuiteConfig& c, const Matrix& a, const Matrix& b, TrialRecord& rec) {
  const double norm_a = operator_norm(a);
  const double norm_b = operator_norm(b);
  const Verdict def = check_definitional(a, b, c.tolerances.decision_tol);
  rec.margin = def.margin;
  const WitnessOutcome out = find_witness(a, b, witness_options(rec.trial_seed));
  if (const auto* v = std::get_if<Verdict>(&out)) {
    rec.verdict = std::string(to_string(v->status));
    rec.passed = false;
    return;
  }
  const Witness& w = std::get<Witness>(out);
  rec.witness_residual = w.epsilon;
  rec.verdict = std::string(to_string(def.status));
  const double eps = c.tolerances.witness_eps;
  rec.passed = def.status == Status::Orthogonal && w.norm_residual <= eps * norm_a &&
               w.ip_residual <= eps * norm_a * norm_b;
}

}  // namespace

std::pair<Matrix, Matrix> trial_inputs(Suite suite, int dim, std::uint64_t seed, Field field) {
  const auto n = static_cast<std::size_t>(dim);
  if (suite == Suite::WitnessQuality) {
    OrthogonalPair p = gen_orthogonal_pair(n, seed, field);
    return {std::move(p.a), std::move(p.b)};
  }
  return {gen_ginibre(n, seed, field), gen_ginibre(n, mix64(seed), field)};
}

TrialRecord run_trial(const SuiteConfig& c, Suite suite, int dim, int trial) {
  TrialRecord rec;
  rec.suite = suite;
  rec.dim = dim;
  rec.trial = trial;
  rec.trial_seed = trial_seed(c, suite, dim, trial);
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto [a, b] = trial_inputs(suite, dim, rec.trial_seed, c.field);
    switch (suite) {
      case Suite::Minimax: run_minimax(c, a, b, rec); break;
      case Suite::Agreement: run_agreement(c, a, b, rec); break;
      case Suite::WitnessQuality: run_witness_quality(c, a, b, rec); break;
    }
  } catch (const std::exception& e) {
    rec.passed = false;
    rec.verdict = "ERROR";
    rec.error = e.what();
  }
  rec.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

SuiteReport run_suite(const SuiteConfig& config) {
  struct Task {
    Suite suite;
    int dim;
    int trial;
  };
  std::vector<Task> tasks;
  for (Suite s : {Suite::Minimax, Suite::Agreement, Suite::WitnessQuality}) {
    for (int d : config.dims) {
      for (int t = 0; t < config.trials_per_dim; ++t) tasks.push_back({s, d, t});
    }
  }

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = config;
  report.records = map_indexed(tasks.size(), config.exec, [&](std::size_t i) {
    return run_trial(config, tasks[i].suite, tasks[i].dim, tasks[i].trial);
  });
  report.total_runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  SuiteAggregates& agg = report.aggregates;
  std::vector<double> gaps;
  for (const auto& r : report.records) {
    ++agg.total;
    if (r.passed) {
      ++agg.passed;
      switch (r.suite) {
        case Suite::Minimax: ++agg.minimax_passed; break;
        case Suite::Agreement: ++agg.agreement_passed; break;
        case Suite::WitnessQuality: ++agg.witness_passed; break;
      }
    }
    if (r.relative_gap) gaps.push_back(*r.relative_gap);
    if (r.suite == Suite::WitnessQuality && r.witness_residual) {
      agg.max_witness_residual = std::max(agg.max_witness_residual, *r.witness_residual);
    }
    if (r.verdict == "BOUNDARY") ++agg.boundary_count;
  }
  if (!gaps.empty()) {
    agg.max_relative_gap = *std::max_element(gaps.begin(), gaps.end());
    std::sort(gaps.begin(), gaps.end());
    const std::size_t m = gaps.size() / 2;
    agg.median_relative_gap = gaps.size() % 2 ? gaps[m] : 0.5 * (gaps[m - 1] + gaps[m]);
  }
  return report;
}

// ---------------------------------------------------------------- output

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json record_json(const TrialRecord& r) {
  json j{{"suite", std::string(to_string(r.suite))},
         {"dim", r.dim},
         {"trial", r.trial},
         {"trial_seed", r.trial_seed},
         {"passed", r.passed},
         {"verdict", r.verdict},
         {"margin", optional_number(r.margin)},
         {"gap", optional_number(r.gap)},
         {"relative_gap", optional_number(r.relative_gap)},
         {"witness_residual", optional_number(r.witness_residual)}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

}  // namespace

json to_json(const SuiteReport& r) {
  json records = json::array();
  json failures = json::array();
  json runtimes = json::array();
  for (const auto& rec : r.records) {
    records.push_back(record_json(rec));
    runtimes.push_back(rec.runtime_ms);
    if (!rec.passed) {
      json f = record_json(rec);
      const auto [a, b] = trial_inputs(rec.suite, rec.dim, rec.trial_seed, r.config.field);
      f["A"] = to_json(a);
      f["B"] = to_json(b);
      failures.push_back(std::move(f));
    }
  }
  const SuiteAggregates& a = r.aggregates;
  return json{{"schema_version", 1},
              {"config", to_json(r.config)},
              {"records", std::move(records)},
              {"aggregates",
               {{"total", a.total},
                {"passed", a.passed},
                {"all_passed", r.all_passed()},
                {"minimax_passed", a.minimax_passed},
                {"agreement_passed", a.agreement_passed},
                {"witness_passed", a.witness_passed},
                {"max_relative_gap", a.max_relative_gap},
                {"median_relative_gap", a.median_relative_gap},
                {"max_witness_residual", a.max_witness_residual},
                {"boundary_count", a.boundary_count}}},
              {"failures", std::move(failures)},
              {"runtimes", {{"total_ms", r.total_runtime_ms}, {"per_record_ms", std::move(runtimes)}}}};
}

std::string to_csv(const SuiteReport& r) {
  std::ostringstream out;
  out << "dim,trial,suite,verdict,margin,gap,witness_residual\n";
  for (const auto& rec : r.records) {
    out << rec.dim << ',' << rec.trial << ',' << to_string(rec.suite) << ',' << rec.verdict << ','
        << csv_number(rec.margin) << ',' << csv_number(rec.gap) << ','
        << csv_number(rec.witness_residual) << '\n';
  }
  return out.str();
}

}  // namespace bjorth
