#pragma once

#include <string_view>
#include <vector>

#include "ssqn/matrix.hpp"
#include "ssqn/states.hpp"

namespace ssqn {

enum class ChannelKind { PhaseFlip, BitFlip, Depolarizing, Noiseless };

std::string_view channel_name(ChannelKind k);  // "phase-flip" etc.
ChannelKind parse_channel(std::string_view name);

// One-qubit noisy channel. p is the probability that the qubit is unaffected;
// p = 1 is noiseless for every kind, and Noiseless ignores p entirely.
struct NoisyChannel {
  ChannelKind kind = ChannelKind::Noiseless;
  double p = 1.0;
};

// Kraus operators of the channel; completeness sum E^dag E = I holds for all
// kinds and all p in [0,1].
std::vector<ComplexMatrix> kraus_set(const NoisyChannel& ch);

// sum_m (embedded E_m) rho (embedded E_m)^dag on the given qubit.
DensityMatrix apply_channel_qubit(const DensityMatrix& rho, const NoisyChannel& ch,
                                  int qubit_index);

}  // namespace ssqn
