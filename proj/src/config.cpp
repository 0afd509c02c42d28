#include "ssqn/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ssqn::cli {

void ExperimentConfig::merge_defaults(const ExperimentConfig& base) {
  const auto fill = [](auto& dst, const auto& src) {
    if (!dst && src) dst = src;
  };
  fill(state, base.state);
  fill(strategy, base.strategy);
  fill(channel, base.channel);
  fill(p, base.p);
  fill(theta, base.theta);
  fill(epsilon, base.epsilon);
  fill(tolerance, base.tolerance);
  fill(n, base.n);
  fill(draws, base.draws);
  fill(seed, base.seed);
  fill(gammas, base.gammas);
  fill(grid, base.grid);
  fill(format, base.format);
  fill(out, base.out);
  fill(kind, base.kind);
  fill(final_sharp, base.final_sharp);
}

namespace {

using nlohmann::json;

double require_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError("config field '" + field + "': expected a number");
  return v.get<double>();
}

int require_int(const json& v, const std::string& field) {
  if (!v.is_number_integer())
    throw ConfigError("config field '" + field + "': expected an integer");
  return v.get<int>();
}

std::string require_string(const json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigError("config field '" + field + "': expected a string");
  return v.get<std::string>();
}

}  // namespace

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file " + path + ": expected an object");

  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "state")
        cfg.state = parse_family(require_string(value, key));
      else if (key == "strategy")
        cfg.strategy = parse_strategy(require_string(value, key));
      else if (key == "channel")
        cfg.channel = parse_channel(require_string(value, key));
      else if (key == "p")
        cfg.p = require_number(value, key);
      else if (key == "theta")
        cfg.theta = require_number(value, key);
      else if (key == "epsilon")
        cfg.epsilon = require_number(value, key);
      else if (key == "tolerance")
        cfg.tolerance = require_number(value, key);
      else if (key == "n")
        cfg.n = require_int(value, key);
      else if (key == "draws")
        cfg.draws = require_int(value, key);
      else if (key == "seed")
        cfg.seed = static_cast<std::uint64_t>(require_int(value, key));
      else if (key == "gamma") {
        if (!value.is_array())
          throw ConfigError("config field 'gamma': expected an array of numbers");
        std::vector<double> gs;
        for (const auto& g : value) gs.push_back(require_number(g, key));
        cfg.gammas = std::move(gs);
      } else if (key == "grid")
        cfg.grid = parse_grid(require_string(value, key));
      else if (key == "format")
        cfg.format = require_string(value, key);
      else if (key == "out")
        cfg.out = require_string(value, key);
      else if (key == "kind")
        cfg.kind = require_string(value, key);
      else if (key == "final_sharp") {
        if (!value.is_boolean())
          throw ConfigError("config field 'final_sharp': expected a boolean");
        cfg.final_sharp = value.get<bool>();
      } else {
        throw ConfigError("config file " + path + ": unknown field '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError("config field '" + key + "': " + e.what());
    }
  }
  return cfg;
}

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4)
    throw ConfigError("grid: expected start:stop:points[:log], got '" + text + "'");
  GridSpec g;
  try {
    g.start = std::stod(parts[0]);
    g.stop = std::stod(parts[1]);
    g.points = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw ConfigError("grid: bad numeric component in '" + text + "'");
  }
  if (parts.size() == 4) {
    if (parts[3] == "log")
      g.log = true;
    else if (parts[3] == "lin")
      g.log = false;
    else
      throw ConfigError("grid: scale must be 'log' or 'lin', got '" + parts[3] + "'");
  }
  if (g.points < 1) throw ConfigError("grid: points must be >= 1");
  return g;
}

std::vector<double> parse_gamma_list(const std::string& text) {
  std::vector<double> gs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      gs.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("gamma: bad list entry '" + item + "'");
    }
  }
  if (gs.empty()) throw ConfigError("gamma: empty list");
  return gs;
}

}  // namespace ssqn::cli
