#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ssqn/channels.hpp"
#include "ssqn/measurements.hpp"

namespace ssqn {

// A (strategy, channel) pair selects exactly one closed-form witness
// expression. Phase/bit formulas are defined for p >= 1/2; Noiseless ignores
// p. Strategies pair up: (MS1, phase-flip) and (MS2, bit-flip) share one
// formula, and so on.
struct ScenarioClass {
  StrategyTag strategy;
  ChannelKind channel;
};

// Expected CHSH value between Alice and sequential observer k. gammas must
// provide at least k entries; entries beyond k are ignored.
double chsh_closed(ScenarioClass cls, int k, double theta, std::span<const double> gammas,
                   double p);

// Expected Mermin value for a GHZ-class scenario (MS3/MS4).
double mermin_ghz_closed(ScenarioClass cls, int k, double theta,
                         std::span<const double> gammas, double p);

// Expected Mermin value for a W-class scenario (MS5/MS6).
double mermin_w_closed(ScenarioClass cls, int k, double theta,
                       std::span<const double> gammas, double p);

// Dispatch on the strategy family.
double closed_witness(ScenarioClass cls, int k, double theta,
                      std::span<const double> gammas, double p);

// Sharpness sequence built from the (1+epsilon)-margin recursion; an entry is
// empty once the required sharpness leaves (0, 1], and stays empty after.
struct SharpnessSequence {
  std::vector<std::optional<double>> gammas;
  double theta = 0.0;
  double epsilon = 0.0;
  double p = 1.0;

  int feasible_count() const;
};

SharpnessSequence gamma_sequence(ScenarioClass cls, double theta, double epsilon,
                                 double p, int n);

// Upper-bound sequence q_k for the MS1 / phase-flip class, q_1 = (1+eps)*theta.
// Dominates gamma_sequence entrywise where both are finite.
std::vector<std::optional<double>> q_sequence(double theta, double epsilon, double p,
                                              int n);

}  // namespace ssqn
