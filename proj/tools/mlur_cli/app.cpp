#include "mlur_cli/app.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mlur/criteria.hpp"
#include "mlur/error.hpp"
#include "mlur/experiment.hpp"
#include "mlur/state_spec.hpp"
#include "mlur_cli/count_io.hpp"
#include "mlur_cli/studies.hpp"
#include "mlur_cli/table.hpp"

namespace mlur::cli {

namespace {

struct RunConfig {
  std::string state;
  std::string noise;
  std::string base = "singlet";
  double p_start = 0.0;
  double p_stop = 1.0;
  std::size_t p_steps = 11;
  std::size_t samples = 1000;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out;
  std::string per_sample_out;
  std::string counts_out;
  std::string observables;
  Format format = Format::Csv;
};

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string verdict_text(Verdict v) { return std::string(to_string(v)); }

BellKind require_bell(const std::string& name) {
  const auto kind = parse_bell_kind(name);
  if (!kind) throw InputError("expected a Bell state (singlet, psi+, phi+, phi-), got '" + name + "'");
  return *kind;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out) {
  const DensityMatrix rho = parse_state_spec(cfg.state);
  const StandardSets sets = standard_sets();
  const WitnessReport r2 = evaluate(rho, sets.l2);
  const WitnessReport r3 = evaluate(rho, sets.l3);

  Table table;
  table.columns = {"state",      "l2",         "ml2",        "l3",          "ml3",         "ppt_min_eig", "cov_0_90",
                   "cov_45_135", "cov_r_l",    "verdict_l2", "verdict_ml2", "verdict_l3",  "verdict_ml3"};
  table.add_row({cfg.state, r2.l_value, r2.ml_value, r3.l_value, r3.ml_value, ppt_min_eigenvalue(rho),
                 r3.pairs[0].covariance, r3.pairs[1].covariance, r3.pairs[2].covariance, verdict_text(r2.verdict_l),
                 verdict_text(r2.verdict_ml), verdict_text(r3.verdict_l), verdict_text(r3.verdict_ml)});
  Sink sink(cfg.out, out);
  write_table(sink.stream(), table, cfg.format, false);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  std::string family = cfg.noise.empty() ? cfg.state : cfg.noise;
  if (!cfg.noise.empty() && !cfg.state.empty() && cfg.state != cfg.noise) {
    throw InputError("--state and --noise disagree");
  }
  const auto noise = parse_noise_kind(family);
  if (!noise) throw InputError("sweep needs --noise (or --state) werner|polarized, got '" + family + "'");
  const BellKind base = require_bell(cfg.base);

  Table table;
  table.columns = {"p", "l2", "ml2", "l3", "ml3", "ppt_min_eig"};
  for (const SweepRow& r : noise_sweep(*noise, base, linear_grid(cfg.p_start, cfg.p_stop, cfg.p_steps))) {
    table.add_row({r.p, r.l2, r.ml2, r.l3, r.ml3, r.ppt_min_eig});
  }
  Sink sink(cfg.out, out);
  write_table(sink.stream(), table, cfg.format, true);
  return kExitOk;
}

int cmd_haar_study(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw InputError("--samples must be at least 1");
  const std::string state = cfg.state.empty() ? "singlet" : cfg.state;
  const BellKind bell = require_bell(state);
  const unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  const HaarStudy study = haar_study(bell, cfg.samples, cfg.seed, threads);
  const HaarSummary& s = study.summary;

  if (!cfg.per_sample_out.empty()) {
    Table samples;
    samples.columns = {"sample", "l3", "ml3", "ppt_min_eig", "cov_0_90", "cov_45_135", "cov_r_l"};
    for (std::size_t i = 0; i < study.per_sample.size(); ++i) {
      const HaarSample& h = study.per_sample[i];
      samples.add_row({static_cast<std::int64_t>(i), h.l3, h.ml3, h.ppt_min_eig, h.covariances[0],
                       h.covariances[1], h.covariances[2]});
    }
    std::ofstream file(cfg.per_sample_out);
    if (!file) throw InputError("cannot open per-sample output '" + cfg.per_sample_out + "'");
    write_table(file, samples, cfg.format, true);
  }

  Table table;
  table.columns = {"state",         "samples",        "seed",     "l3_detect_fraction", "ml3_detect_fraction",
                   "fraction_margin", "ml3_only_count", "l3_only_count", "dominance_violations", "mean_l3",
                   "mean_ml3",      "min_ppt_min_eig", "max_ppt_min_eig"};
  table.add_row({state, static_cast<std::int64_t>(s.samples), static_cast<std::int64_t>(cfg.seed), s.l3_fraction(),
                 s.ml3_fraction(), s.ml3_fraction() - s.l3_fraction(), static_cast<std::int64_t>(s.ml3_only),
                 static_cast<std::int64_t>(s.l3_only), static_cast<std::int64_t>(s.dominance_violations), s.mean_l3,
                 s.mean_ml3, s.min_ppt_min_eig, s.max_ppt_min_eig});
  Sink sink(cfg.out, out);
  write_table(sink.stream(), table, cfg.format, false);
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.shots < 2) throw InputError("--shots must be at least 2 for a variance estimate");
  const DensityMatrix rho = parse_state_spec(cfg.state);
  const SimulationResult sim = simulate_experiment(rho, cfg.shots, cfg.seed);

  if (!cfg.counts_out.empty()) {
    std::ofstream file(cfg.counts_out);
    if (!file) throw InputError("cannot open counts output '" + cfg.counts_out + "'");
    write_count_tables_csv(file, sim.tables);
  }

  Table table;
  table.columns = {"state", "shots", "seed",  "l2",         "l2_se",       "ml2",        "ml2_se",
                   "l3",    "l3_se", "ml3",   "ml3_se",     "verdict_l2",  "verdict_ml2", "verdict_l3",
                   "verdict_ml3"};
  table.add_row({cfg.state, static_cast<std::int64_t>(cfg.shots), static_cast<std::int64_t>(cfg.seed),
                 sim.l2.l_value.value, sim.l2.l_value.std_error, sim.l2.ml_value.value, sim.l2.ml_value.std_error,
                 sim.l3.l_value.value, sim.l3.l_value.std_error, sim.l3.ml_value.value, sim.l3.ml_value.std_error,
                 verdict_text(sim.l2.verdict_l), verdict_text(sim.l2.verdict_ml), verdict_text(sim.l3.verdict_l),
                 verdict_text(sim.l3.verdict_ml)});
  Sink sink(cfg.out, out);
  write_table(sink.stream(), table, cfg.format, false);
  return kExitOk;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  std::vector<ComplexMatrix> ops;
  std::stringstream list(cfg.observables);
  for (std::string name; std::getline(list, name, ',');) {
    if (name == "sx") {
      ops.push_back(pauli_x());
    } else if (name == "sy") {
      ops.push_back(pauli_y());
    } else if (name == "sz") {
      ops.push_back(pauli_z());
    } else {
      throw InputError("unknown observable '" + name + "' (expected sx, sy, sz)");
    }
  }
  if (ops.empty()) throw InputError("--observables needs at least one of sx, sy, sz");

  Table table;
  table.columns = {"observables", "bound"};
  table.add_row({cfg.observables, local_bound(ops)});
  Sink sink(cfg.out, out);
  write_table(sink.stream(), table, cfg.format, false);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Local and modified local uncertainty relations for two-qubit states", "mlur"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))->option_text("csv|json [csv]");
  };

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Evaluate L2, ML2, L3, ML3 and the PPT oracle for one state");
  evaluate_cmd->add_option("--state", cfg.state, "State spec")->required();
  add_common(evaluate_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the mixing parameter p of a noisy Bell state");
  sweep_cmd->add_option("--state", cfg.state, "Noise family (werner|polarized)");
  sweep_cmd->add_option("--noise", cfg.noise, "Noise family (werner|polarized)");
  sweep_cmd->add_option("--base", cfg.base, "Bell state mixed with the noise")->capture_default_str();
  sweep_cmd->add_option("--p-start", cfg.p_start)->capture_default_str();
  sweep_cmd->add_option("--p-stop", cfg.p_stop)->capture_default_str();
  sweep_cmd->add_option("--p-steps", cfg.p_steps)->capture_default_str();
  add_common(sweep_cmd);

  auto* haar_cmd = app.add_subcommand("haar-study", "Detection rates of L3 and ML3 under Haar-random local unitaries");
  haar_cmd->add_option("--state", cfg.state, "Bell state (default singlet)");
  haar_cmd->add_option("--samples", cfg.samples)->capture_default_str();
  haar_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  haar_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
  haar_cmd->add_option("--per-sample", cfg.per_sample_out, "Also write one row per sample to this file");
  add_common(haar_cmd);

  auto* simulate_cmd = app.add_subcommand("simulate", "Estimate the witnesses from simulated coincidence counts");
  simulate_cmd->add_option("--state", cfg.state, "State spec")->required();
  simulate_cmd->add_option("--shots", cfg.shots, "Coincidences per basis")->capture_default_str();
  simulate_cmd->add_option("--seed", cfg.seed)->capture_default_str();
  simulate_cmd->add_option("--counts-out", cfg.counts_out, "Write the sampled count tables as CSV");
  add_common(simulate_cmd);

  auto* bound_cmd = app.add_subcommand("bound", "Minimized local variance bound of a set of Pauli observables");
  bound_cmd->add_option("--observables", cfg.observables, "Comma-separated list from sx, sy, sz")->required();
  add_common(bound_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (evaluate_cmd->parsed()) return cmd_evaluate(cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
    if (haar_cmd->parsed()) return cmd_haar_study(cfg, out);
    if (simulate_cmd->parsed()) return cmd_simulate(cfg, out);
    if (bound_cmd->parsed()) return cmd_bound(cfg, out);
  } catch (const InputError& e) {
    err << "mlur: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "mlur: internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "mlur: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace mlur::cli
