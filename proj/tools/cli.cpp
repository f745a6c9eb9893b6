#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "bjorth/ensemble.hpp"
#include "bjorth/errors.hpp"
#include "bjorth/line_search.hpp"
#include "bjorth/matrix_json.hpp"
#include "bjorth/minimax.hpp"
#include "bjorth/orthogonality.hpp"
#include "bjorth/spectral.hpp"

namespace bjorth::cli {

using nlohmann::json;

namespace {

struct Flags {
  double tol = kDefaultDecisionTol;
  int restarts = 50;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool summary = false;

  std::string a_path;
  std::string b_path;
  std::string method = "both";
  std::optional<double> eps;
  std::string config_path;
  std::string csv_path;
  std::string kind = "ginibre";
  int n = 2;
  std::string field = "c";
  std::string out_a;
  std::string out_b;
};

std::uint64_t env_seed() {
  const char* s = std::getenv("BJORTH_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError("BJORTH_SEED is not an unsigned integer");
  }
}

json envelope(const char* command) { return json{{"schema_version", 1}, {"command", command}}; }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << j.dump(2) << '\n';
}

json verdict_json(const Verdict& v) {
  json j{{"status", std::string(to_string(v.status))},
         {"margin", v.margin},
         {"method", std::string(to_string(v.method))},
         {"tol", v.tol}};
  if (v.lambda_star) j["lambda"] = to_json(*v.lambda_star);
  if (v.certificate) j["certificate_theta"] = *v.certificate;
  if (v.budget_limited) j["budget_limited"] = true;
  return j;
}

json witness_json(const Witness& w) {
  return json{{"x", to_json(w.x)},
              {"norm_residual", w.norm_residual},
              {"ip_residual", w.ip_residual},
              {"epsilon", w.epsilon}};
}

int exit_for(Status s) { return s == Status::Orthogonal ? kOk : kNotOrthogonal; }

struct Output {
  json body;
  int code = kOk;
  std::string summary;
};

Output cmd_norm(const Flags& f) {
  const Matrix a = load_matrix(f.a_path);
  const SpectralData s = top_singular_subspace(a);
  Output o;
  o.body = envelope("norm");
  o.body["op_norm"] = s.op_norm;
  o.body["top_subspace_dim"] = s.top_subspace.size();
  o.body["rank_tol"] = s.rank_tol;
  o.body["field"] = std::string(to_string(a.field()));
  o.summary = "‖A‖ = " + std::to_string(s.op_norm);
  return o;
}

Output cmd_distance(const Flags& f) {
  const Matrix a = load_matrix(f.a_path);
  const Matrix b = load_matrix(f.b_path);
  const LineMinResult r = global_inf_lambda(a, b, LineMinOptions{f.tol});
  Output o;
  o.body = envelope("distance");
  o.body["value"] = r.value;
  o.body["lambda"] = to_json(r.lambda_star);
  o.body["evaluations"] = r.evaluations;
  o.body["budget_limited"] = r.budget_limited;
  o.code = r.budget_limited ? kNumericalFailure : kOk;
  o.summary = "inf ‖A+λB‖ = " + std::to_string(r.value);
  return o;
}

WitnessOptions witness_options(const Flags& f, std::uint64_t seed) {
  WitnessOptions w;
  w.tol = f.tol;
  w.eps = f.tol;
  w.seed = seed;
  return w;
}

Output cmd_check(const Flags& f, std::uint64_t seed) {
  const Matrix a = load_matrix(f.a_path);
  const Matrix b = load_matrix(f.b_path);
  Output o;
  o.body = envelope("check");
  if (f.method == "def") {
    const Verdict v = check_definitional(a, b, f.tol);
    o.body.update(verdict_json(v));
    o.code = exit_for(v.status);
  } else if (f.method == "witness") {
    const Verdict v = check_witness(a, b, f.tol, witness_options(f, seed));
    o.body.update(verdict_json(v));
    o.code = exit_for(v.status);
  } else {
    const Decision d = decide(a, b, f.tol, witness_options(f, seed));
    o.body["status"] = std::string(to_string(d.status));
    o.body["margin"] = d.definitional.margin;
    o.body["routes_agree"] = d.routes_agree;
    o.body["definitional"] = verdict_json(d.definitional);
    o.body["witness_route"] = verdict_json(d.witness_route);
    if (d.witness) o.body["witness"] = witness_json(*d.witness);
    o.code = exit_for(d.status);
    if (!d.routes_agree && d.status != Status::Boundary) o.code = kNumericalFailure;
  }
  o.summary = "status " + o.body["status"].get<std::string>();
  return o;
}

Output cmd_witness(const Flags& f, std::uint64_t seed) {
  const Matrix a = load_matrix(f.a_path);
  const Matrix b = load_matrix(f.b_path);
  Output o;
  o.body = envelope("witness");
  if (f.eps) {
    EpsilonWitnessOptions opts;
    opts.seed = seed;
    const EpsilonWitnessOutcome r = epsilon_witness(a, b, *f.eps, opts);
    o.body["mode"] = "epsilon";
    o.body["eps"] = *f.eps;
    o.body["best_value"] = r.best_value;
    o.body["found"] = r.witness.has_value();
    if (r.witness) {
      o.body["witness"] = witness_json(*r.witness);
    } else {
      o.code = kNotOrthogonal;
    }
  } else {
    const WitnessOutcome r = find_witness(a, b, witness_options(f, seed));
    o.body["mode"] = "exact";
    if (const auto* w = std::get_if<Witness>(&r)) {
      o.body["found"] = true;
      o.body["status"] = "ORTHOGONAL";
      o.body["witness"] = witness_json(*w);
    } else {
      o.body["found"] = false;
      o.body.update(verdict_json(std::get<Verdict>(r)));
      o.code = kNotOrthogonal;
    }
  }
  o.summary = o.body["found"].get<bool>() ? "witness found" : "no witness";
  return o;
}

Output cmd_minimax(const Flags& f, std::uint64_t seed) {
  const Matrix a = load_matrix(f.a_path);
  const Matrix b = load_matrix(f.b_path);
  MinimaxOptions opts;
  opts.restarts = f.restarts;
  opts.seed = seed;
  const MinimaxReport r = minimax_report(a, b, opts);
  Output o;
  o.body = envelope("minimax");
  o.body.update(to_json(r));
  o.summary = "gap " + std::to_string(r.gap);
  return o;
}

Output cmd_suite(const Flags& f, std::uint64_t seed) {
  std::ifstream in(f.config_path);
  if (!in) throw InputError("cannot open " + f.config_path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::parse_error& e) {
    throw InputError(f.config_path + ": " + e.what());
  }
  if (f.seed) cfg["seed"] = *f.seed;
  const SuiteConfig config = suite_config_from_json(cfg, seed);
  const SuiteReport report = run_suite(config);
  if (!f.csv_path.empty()) {
    std::ofstream csv(f.csv_path);
    if (!csv) throw InputError("cannot write " + f.csv_path);
    csv << to_csv(report);
  }
  Output o;
  o.body = to_json(report);
  o.body["command"] = "suite";
  o.code = report.all_passed() ? kOk : kNumericalFailure;
  o.summary = std::to_string(report.aggregates.passed) + "/" +
              std::to_string(report.aggregates.total) + " trials passed";
  return o;
}

Output cmd_gen(const Flags& f, std::uint64_t seed) {
  if (f.n < 1) throw InputError("--n must be positive");
  const Field field = field_from_string(f.field);
  Output o;
  o.body = envelope("gen");
  if (f.kind == "ginibre") {
    o.body = to_json(gen_ginibre(static_cast<std::size_t>(f.n), seed, field));
    o.body["schema_version"] = 1;
  } else {
    const OrthogonalPair p = gen_orthogonal_pair(static_cast<std::size_t>(f.n), seed, field);
    if (!f.out_a.empty()) write_json_file(f.out_a, to_json(p.a));
    if (!f.out_b.empty()) write_json_file(f.out_b, to_json(p.b));
    o.body["A"] = to_json(p.a);
    o.body["B"] = to_json(p.b);
    o.body["x0"] = to_json(p.x0);
  }
  o.summary = "generated " + f.kind;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birkhoff-James orthogonality toolkit for matrices over R or C", "bjorth"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--tol", f.tol, "decision / line-search tolerance")->capture_default_str();
  app.add_option("--restarts", f.restarts, "multi-start restarts for minimax")->capture_default_str();
  app.add_option("--seed", f.seed, "seed (default: $BJORTH_SEED, else 0)");
  app.add_option("--out", f.out, "write the JSON result to FILE instead of stdout");
  app.add_flag("--summary", f.summary, "print a one-line summary on stderr");

  auto* norm = app.add_subcommand("norm", "operator norm ‖A‖");
  norm->add_option("A", f.a_path)->required();

  auto pair = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("A", f.a_path)->required();
    s->add_option("B", f.b_path)->required();
    return s;
  };
  auto* distance = pair("distance", "inf over λ of ‖A + λB‖");
  auto* check = pair("check", "decide A ⊥ B");
  check->add_option("--method", f.method)
      ->check(CLI::IsMember({"def", "witness", "both"}))
      ->capture_default_str();
  auto* witness = pair("witness", "unit x with ‖Ax‖ = ‖A‖ and ⟨Ax,Bx⟩ = 0");
  witness->add_option("--eps", f.eps, "search for an eps-witness instead");
  auto* minimax = pair("minimax", "both sides of the sup-inf / inf-sup equality");

  auto* suite = app.add_subcommand("suite", "seeded ensemble property suites");
  suite->add_option("--config", f.config_path)->required();
  suite->add_option("--csv", f.csv_path, "also write the per-trial CSV");

  auto* gen = app.add_subcommand("gen", "random test matrices");
  gen->add_option("--kind", f.kind)->check(CLI::IsMember({"ginibre", "orthopair"}))->capture_default_str();
  gen->add_option("--n", f.n)->required();
  gen->add_option("--field", f.field)->check(CLI::IsMember({"c", "r", "complex", "real"}))->capture_default_str();
  gen->add_option("--out-a", f.out_a, "orthopair: also write A to FILE");
  gen->add_option("--out-b", f.out_b, "orthopair: also write B to FILE");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (!(f.tol > 0.0 && f.tol < 1e-2)) throw InputError("--tol must lie in (0, 1e-2)");
    const std::uint64_t seed = f.seed ? *f.seed : env_seed();
    Output o;
    if (*norm) o = cmd_norm(f);
    else if (*distance) o = cmd_distance(f);
    else if (*check) o = cmd_check(f, seed);
    else if (*witness) o = cmd_witness(f, seed);
    else if (*minimax) o = cmd_minimax(f, seed);
    else if (*suite) o = cmd_suite(f, seed);
    else o = cmd_gen(f, seed);

    if (f.out.empty()) {
      out << o.body.dump(2) << '\n';
    } else {
      write_json_file(f.out, o.body);
    }
    if (f.summary) err << o.summary << '\n';
    return o.code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << " (best residual " << e.best_residual() << ")\n";
    return kNumericalFailure;
  }
}

}  // namespace bjorth::cli
