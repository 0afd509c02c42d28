#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ssqn/closed_form.hpp"
#include "ssqn/table.hpp"

namespace ssqn {

// Largest n such that gamma_1..gamma_n are all feasible under the
// (1+epsilon)-margin recursion, capped at n_max.
struct CountResult {
  double theta = 0.0;
  double epsilon = 0.0;
  double p = 1.0;
  ScenarioClass cls{StrategyTag::MS1, ChannelKind::Noiseless};
  int count = 0;
};

// final_sharp lets the last counted observer measure sharply (gamma = 1)
// instead of taking the recursion value; off by default.
CountResult count_violating_observers(ScenarioClass cls, double theta, double epsilon,
                                      double p, int n_max, bool final_sharp = false);

// Double-violation optimum at fixed theta: epsilon solving gamma_2 = 1, the
// implied gamma_1, and the witnesses at k = 1, 2 (gamma_2 = 1) under the
// class's own channel.
struct DoubleViolationSolution {
  double theta = 0.0;
  double epsilon = 0.0;
  double gamma1 = 0.0;
  double witness1 = 0.0;
  double witness2 = 0.0;
};

// Empty when gamma_2(epsilon) = 1 has no root for epsilon in (0, 1e4].
std::optional<DoubleViolationSolution> solve_double_violation(ScenarioClass cls,
                                                              double theta, double p);

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  bool log = false;
};

std::vector<double> grid_points(const GridSpec& g);

enum class SweepKind { Count, DoubleViolation };

struct SweepConfig {
  SweepKind kind = SweepKind::Count;
  ScenarioClass cls{StrategyTag::MS1, ChannelKind::Noiseless};
  GridSpec theta_grid;
  double epsilon = 0.1;  // Count only
  double p = 1.0;
  int n_max = 5;  // Count only
  bool final_sharp = false;
};

// One row per grid point, in grid order.
Table sweep(const SweepConfig& cfg);

struct VerificationCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int draws = 0;
  double tolerance = 0.0;
  std::vector<VerificationCheck> checks;

  bool all_pass() const;
};

std::vector<ScenarioClass> all_scenario_classes();  // 6 strategies x 4 kinds

// Per-class max |closed form - direct simulation| over seeded random draws,
// k = 1..5 each.
VerificationReport verify_closed_vs_sim(std::span<const ScenarioClass> classes,
                                        int draws, double tolerance,
                                        std::uint64_t seed);

// verify_closed_vs_sim over all classes plus the module invariant suites
// (channel laws, Luders map, sequence properties, equivalences).
VerificationReport run_full_verification(int draws, double tolerance,
                                         std::uint64_t seed);

}  // namespace ssqn
