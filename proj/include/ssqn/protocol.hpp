#pragma once

#include <vector>

#include "ssqn/channels.hpp"
#include "ssqn/measurements.hpp"
#include "ssqn/states.hpp"

namespace ssqn {

// Canonical initial family of a strategy: Bell for MS1/MS2, GHZ for MS3/MS4,
// W for MS5/MS6.
StateFamily base_family_for(StrategyTag tag);

// Complete description of one sequential-sharing experiment. The sequential
// observer's qubit is the last tensor factor; channels act only on it,
// between consecutive sequential observers.
class Scenario {
 public:
  Scenario(StateFamily family, Strategy strategy, NoisyChannel channel,
           int n_observers);

  StateFamily family() const { return family_; }
  const Strategy& strategy() const { return strategy_; }
  const NoisyChannel& channel() const { return channel_; }
  int n_observers() const { return n_observers_; }
  int sequential_qubit() const { return strategy_.arity() - 1; }

  // The base family state, Hadamard-transformed when the strategy calls for
  // local unitaries (MS4 on GHZ -> GHZPrime, MS6 on W -> WPrime).
  DensityMatrix initial_state() const;

 private:
  StateFamily family_;
  Strategy strategy_;
  NoisyChannel channel_;
  int n_observers_;
};

// witness values[k-1] between the fixed parties and sequential observer k.
struct WitnessTrace {
  std::vector<double> values;
};

// Input-and-outcome averaged state update of observer k:
// (1/2) sum_{b,y} (I (x) ... (x) sqrt(E_{b|y})) rho (same), on the last qubit.
DensityMatrix luders_step(const DensityMatrix& rho, const Strategy& s, int observer_k);

// luders_step followed by the scenario's channel on the sequential qubit.
DensityMatrix advance(const DensityMatrix& rho, const Scenario& sc, int observer_k);

// CHSH (arity 2) or Mermin (arity 3) combination evaluated by trace against
// the state jointly held with sequential observer k.
double witness(const DensityMatrix& rho, const Scenario& sc, int observer_k);

// values[k-1] = witness of the state after k-1 advance steps.
WitnessTrace run_protocol(const Scenario& sc);

}  // namespace ssqn
