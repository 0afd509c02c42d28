// ssqn: simulate and analyze sequential nonlocality sharing through noisy
// single-qubit channels, and emit the datasets behind the standard figures.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ssqn/analysis.hpp"
#include "ssqn/config.hpp"
#include "ssqn/emit.hpp"
#include "ssqn/figures.hpp"
#include "ssqn/protocol.hpp"

namespace {

using namespace ssqn;
using cli::ConfigError;
using cli::ExperimentConfig;

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raw string/number flags; parsed into an ExperimentConfig after CLI11 runs
// so that file values and flag values go through the same validation.
struct RawFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> state, strategy, channel, format, out, kind, gamma, grid;
  std::optional<double> p, theta, epsilon, tolerance;
  std::optional<int> n, draws;
  std::optional<std::uint64_t> seed;
  bool final_sharp = false;
};

void add_common_flags(CLI::App* cmd, RawFlags& raw) {
  cmd->add_option("--config", raw.config_path, "JSON config file; flags override it");
  cmd->add_option("--state", raw.state, "state family (bell|ghz|w|ghz-prime|w-prime)");
  cmd->add_option("--strategy", raw.strategy, "measurement strategy (ms1..ms6)");
  cmd->add_option("--channel", raw.channel,
                  "channel kind (phase-flip|bit-flip|depolarizing|noiseless)");
  cmd->add_option("--p", raw.p, "channel noise parameter");
  cmd->add_option("--theta", raw.theta, "measurement orientation / sharpness");
  cmd->add_option("--epsilon", raw.epsilon, "violation margin factor (1+epsilon)");
  cmd->add_option("--n", raw.n, "number of sequential observers");
  cmd->add_option("--gamma", raw.gamma, "comma list of sharpness values");
  cmd->add_option("--grid", raw.grid, "theta grid start:stop:points[:log]");
  cmd->add_option("--format", raw.format, "output format (csv|jsonl)");
  cmd->add_option("--out", raw.out, "output path");
  cmd->add_option("--seed", raw.seed, "seed for randomized verification");
  cmd->add_option("--tolerance", raw.tolerance, "verification tolerance");
  cmd->add_option("--draws", raw.draws, "random draws per verification check");
  cmd->add_flag("--final-sharp", raw.final_sharp,
                "let the last counted observer measure sharply");
}

ExperimentConfig effective_config(const RawFlags& raw) {
  ExperimentConfig cfg;
  if (raw.state) cfg.state = parse_family(*raw.state);
  if (raw.strategy) cfg.strategy = parse_strategy(*raw.strategy);
  if (raw.channel) cfg.channel = parse_channel(*raw.channel);
  cfg.p = raw.p;
  cfg.theta = raw.theta;
  cfg.epsilon = raw.epsilon;
  cfg.tolerance = raw.tolerance;
  cfg.n = raw.n;
  cfg.draws = raw.draws;
  cfg.seed = raw.seed;
  if (raw.gamma) cfg.gammas = cli::parse_gamma_list(*raw.gamma);
  if (raw.grid) cfg.grid = cli::parse_grid(*raw.grid);
  cfg.format = raw.format;
  cfg.out = raw.out;
  cfg.kind = raw.kind;
  if (raw.final_sharp) cfg.final_sharp = true;
  if (raw.config_path) cfg.merge_defaults(cli::load_config_file(*raw.config_path));
  return cfg;
}

template <class T>
T need(const std::optional<T>& v, const char* what) {
  if (!v) throw ConfigError(std::string("missing required parameter: ") + what);
  return *v;
}

double noise_for(const ExperimentConfig& cfg) {
  const ChannelKind kind = need(cfg.channel, "channel");
  if (kind == ChannelKind::Noiseless) return 1.0;
  return need(cfg.p, "p");
}

void emit(const Table& t, const ExperimentConfig& cfg) {
  const std::string format = cfg.format.value_or("csv");
  if (cfg.out) {
    std::ofstream os(*cfg.out);
    if (!os) throw ConfigError("cannot open output file: " + *cfg.out);
    cli::write_table(t, os, format);
  } else {
    cli::write_table(t, std::cout, format);
  }
}

int cmd_simulate(const ExperimentConfig& cfg) {
  const StrategyTag tag = need(cfg.strategy, "strategy");
  const ChannelKind kind = need(cfg.channel, "channel");
  const double p = noise_for(cfg);
  const double theta = need(cfg.theta, "theta");
  const StateFamily family = cfg.state.value_or(base_family_for(tag));

  std::vector<double> gammas;
  int n;
  if (cfg.gammas) {
    gammas = *cfg.gammas;
    n = cfg.n.value_or(static_cast<int>(gammas.size()));
  } else {
    n = cfg.n.value_or(5);
    const double eps = need(cfg.epsilon, "epsilon (or an explicit --gamma list)");
    const SharpnessSequence seq = gamma_sequence({tag, kind}, theta, eps, p, n);
    if (seq.feasible_count() < n)
      throw InfeasibleError("gamma sequence infeasible at observer " +
                            std::to_string(seq.feasible_count() + 1) +
                            "; lower epsilon, adjust theta, or reduce n");
    for (const auto& g : seq.gammas) gammas.push_back(*g);
  }

  const Scenario sc(family, Strategy(tag, theta, gammas), NoisyChannel{kind, p}, n);
  const WitnessTrace trace = run_protocol(sc);

  Table t;
  t.columns = {"k", "gamma", "witness_sim", "witness_closed"};
  for (int k = 1; k <= n; ++k) {
    auto& row = t.add_row();
    row.emplace_back(static_cast<long long>(k));
    row.emplace_back(gammas[k - 1]);
    row.emplace_back(trace.values[k - 1]);
    row.emplace_back(closed_witness({tag, kind}, k, theta, gammas, p));
  }
  emit(t, cfg);
  return 0;
}

int cmd_count(const ExperimentConfig& cfg) {
  const StrategyTag tag = need(cfg.strategy, "strategy");
  const ChannelKind kind = need(cfg.channel, "channel");
  const double p = noise_for(cfg);
  const double theta = need(cfg.theta, "theta");
  const double eps = need(cfg.epsilon, "epsilon");
  const int n_max = cfg.n.value_or(5);
  const CountResult res = count_violating_observers({tag, kind}, theta, eps, p, n_max,
                                                    cfg.final_sharp.value_or(false));
  Table t;
  t.columns = {"theta", "epsilon", "p", "strategy", "channel", "count"};
  auto& row = t.add_row();
  row.emplace_back(theta);
  row.emplace_back(eps);
  row.emplace_back(p);
  row.emplace_back(std::string(strategy_name(tag)));
  row.emplace_back(std::string(channel_name(kind)));
  row.emplace_back(static_cast<long long>(res.count));
  emit(t, cfg);
  return 0;
}

int cmd_double_violation(const ExperimentConfig& cfg) {
  const StrategyTag tag = need(cfg.strategy, "strategy");
  const ChannelKind kind = need(cfg.channel, "channel");
  const double p = noise_for(cfg);
  const double theta = need(cfg.theta, "theta");
  const auto sol = solve_double_violation({tag, kind}, theta, p);
  if (!sol)
    throw InfeasibleError("no double-violation solution: gamma_2(epsilon) = 1 has no "
                          "root for this theta/p");
  Table t;
  t.columns = {"theta",   "p",      "strategy", "channel",
               "epsilon", "gamma1", "witness1", "witness2"};
  auto& row = t.add_row();
  row.emplace_back(theta);
  row.emplace_back(p);
  row.emplace_back(std::string(strategy_name(tag)));
  row.emplace_back(std::string(channel_name(kind)));
  row.emplace_back(sol->epsilon);
  row.emplace_back(sol->gamma1);
  row.emplace_back(sol->witness1);
  row.emplace_back(sol->witness2);
  emit(t, cfg);
  return 0;
}

int cmd_sweep(const ExperimentConfig& cfg) {
  const std::string kind_name = need(cfg.kind, "kind");
  SweepConfig sw;
  if (kind_name == "count")
    sw.kind = SweepKind::Count;
  else if (kind_name == "double-violation")
    sw.kind = SweepKind::DoubleViolation;
  else
    throw ConfigError("sweep kind must be 'count' or 'double-violation'");
  sw.cls = {need(cfg.strategy, "strategy"), need(cfg.channel, "channel")};
  sw.theta_grid = need(cfg.grid, "grid");
  sw.p = noise_for(cfg);
  if (sw.kind == SweepKind::Count) {
    sw.epsilon = need(cfg.epsilon, "epsilon");
    sw.n_max = cfg.n.value_or(5);
    sw.final_sharp = cfg.final_sharp.value_or(false);
  }
  emit(sweep(sw), cfg);
  return 0;
}

int cmd_reproduce(const std::string& name, const ExperimentConfig& cfg) {
  const auto tables = reproduce_dataset(name);
  const std::string format = cfg.format.value_or("csv");
  const std::string ext = format == "jsonl" ? ".jsonl" : ".csv";
  const std::filesystem::path dir(cfg.out.value_or("."));
  std::filesystem::create_directories(dir);
  for (const auto& nt : tables) {
    const std::filesystem::path path = dir / (nt.name + ext);
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open output file: " + path.string());
    cli::write_table(nt.table, os, format);
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

int cmd_verify(const ExperimentConfig& cfg) {
  const double tolerance = cfg.tolerance.value_or(oracle_tol);
  const int draws = cfg.draws.value_or(200);
  const std::uint64_t seed = cfg.seed.value_or(12345);
  const VerificationReport report = run_full_verification(draws, tolerance, seed);

  std::ostringstream text;
  text << "verify: seed=" << seed << " draws=" << draws
       << " tolerance=" << cli::format_double(tolerance) << "\n";
  int passed = 0;
  for (const auto& c : report.checks) {
    text << (c.pass ? "PASS " : "FAIL ") << c.name
         << " max_dev=" << cli::format_double(c.max_deviation)
         << " tol=" << cli::format_double(c.tolerance) << "\n";
    if (c.pass) ++passed;
  }
  text << "verify: " << passed << "/" << report.checks.size() << " checks passed\n";

  if (cfg.out) {
    std::ofstream os(*cfg.out);
    if (!os) throw ConfigError("cannot open output file: " + *cfg.out);
    os << text.str();
  }
  std::cout << text.str();
  return report.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequential nonlocality sharing under noisy channels"};
  app.require_subcommand(1);

  RawFlags raw;
  std::string reproduce_name;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "run the sequential protocol and report witness values");
  CLI::App* count = app.add_subcommand(
      "count", "number of sequential observers with a strict violation");
  CLI::App* dv = app.add_subcommand(
      "double-violation", "optimal-margin two-observer violation at fixed theta");
  CLI::App* sw = app.add_subcommand("sweep", "evaluate over a theta grid");
  CLI::App* rep = app.add_subcommand("reproduce", "emit a named standard dataset");
  rep->add_option("name", reproduce_name, "fig2|fig4|fig5|fig6|fig7|table1|table2")
      ->required();
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check closed forms against direct simulation");

  for (CLI::App* cmd : {simulate, count, dv, sw, rep, verify})
    add_common_flags(cmd, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const ExperimentConfig cfg = effective_config(raw);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (count->parsed()) return cmd_count(cfg);
    if (dv->parsed()) return cmd_double_violation(cfg);
    if (sw->parsed()) return cmd_sweep(cfg);
    if (rep->parsed()) return cmd_reproduce(reproduce_name, cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    std::cerr << "error: no command\n";
    return 1;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
