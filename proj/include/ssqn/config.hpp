#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssqn/analysis.hpp"
#include "ssqn/channels.hpp"
#include "ssqn/measurements.hpp"
#include "ssqn/states.hpp"

namespace ssqn::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Union of everything the subcommands accept; each command validates the
// subset it needs. Flags parsed by the CLI override file values.
struct ExperimentConfig {
  std::optional<StateFamily> state;
  std::optional<StrategyTag> strategy;
  std::optional<ChannelKind> channel;
  std::optional<double> p;
  std::optional<double> theta;
  std::optional<double> epsilon;
  std::optional<double> tolerance;
  std::optional<int> n;
  std::optional<int> draws;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<double>> gammas;
  std::optional<GridSpec> grid;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> kind;
  std::optional<bool> final_sharp;

  // Fill any unset field from `base` (file-level defaults).
  void merge_defaults(const ExperimentConfig& base);
};

// Parses a JSON config file; throws ConfigError naming the offending field.
ExperimentConfig load_config_file(const std::string& path);

// "start:stop:points[:log]"
GridSpec parse_grid(const std::string& text);

// Comma-separated list, e.g. "0.33,1"
std::vector<double> parse_gamma_list(const std::string& text);

}  // namespace ssqn::cli
