#include "ssqn/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ssqn {

std::string_view channel_name(ChannelKind k) {
  switch (k) {
    case ChannelKind::PhaseFlip: return "phase-flip";
    case ChannelKind::BitFlip: return "bit-flip";
    case ChannelKind::Depolarizing: return "depolarizing";
    case ChannelKind::Noiseless: return "noiseless";
  }
  throw std::logic_error("channel_name: bad enum");
}

ChannelKind parse_channel(std::string_view name) {
  if (name == "phase-flip") return ChannelKind::PhaseFlip;
  if (name == "bit-flip") return ChannelKind::BitFlip;
  if (name == "depolarizing") return ChannelKind::Depolarizing;
  if (name == "noiseless") return ChannelKind::Noiseless;
  throw std::invalid_argument("unknown channel kind: " + std::string(name));
}

std::vector<ComplexMatrix> kraus_set(const NoisyChannel& ch) {
  if (ch.kind == ChannelKind::Noiseless) return {identity2()};
  const double p = ch.p;
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("kraus_set: p must lie in [0, 1]");
  switch (ch.kind) {
    case ChannelKind::PhaseFlip:
      return {std::sqrt(p) * identity2(), std::sqrt(1.0 - p) * pauli_z()};
    case ChannelKind::BitFlip:
      return {std::sqrt(p) * identity2(), std::sqrt(1.0 - p) * pauli_x()};
    case ChannelKind::Depolarizing: {
      const double w = 0.5 * std::sqrt(1.0 - p);
      return {std::sqrt((1.0 + 3.0 * p) / 4.0) * identity2(), w * pauli_x(),
              w * pauli_y(), w * pauli_z()};
    }
    case ChannelKind::Noiseless: break;
  }
  throw std::logic_error("kraus_set: bad enum");
}

DensityMatrix apply_channel_qubit(const DensityMatrix& rho, const NoisyChannel& ch,
                                  int qubit_index) {
  if (qubit_index < 0 || qubit_index >= rho.nqubits())
    throw std::out_of_range("apply_channel_qubit: qubit index out of range");
  ComplexMatrix out(rho.dim());
  for (const auto& e : kraus_set(ch)) {
    const ComplexMatrix emb = embed_on_qubit(e, qubit_index, rho.nqubits());
    out += emb * rho.mat() * emb.dagger();
  }
  return DensityMatrix(std::move(out));
}

}  // namespace ssqn
