#include "ssqn/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace ssqn {

StateFamily base_family_for(StrategyTag tag) {
  switch (tag) {
    case StrategyTag::MS1:
    case StrategyTag::MS2:
      return StateFamily::Bell;
    case StrategyTag::MS3:
    case StrategyTag::MS4:
      return StateFamily::GHZ;
    case StrategyTag::MS5:
    case StrategyTag::MS6:
      return StateFamily::W;
  }
  throw std::logic_error("base_family_for: bad enum");
}

namespace {

bool family_matches_strategy(StateFamily f, StrategyTag t) {
  switch (f) {
    case StateFamily::Bell:
      return t == StrategyTag::MS1 || t == StrategyTag::MS2;
    case StateFamily::GHZ:
    case StateFamily::GHZPrime:
      return t == StrategyTag::MS3 || t == StrategyTag::MS4;
    case StateFamily::W:
    case StateFamily::WPrime:
      return t == StrategyTag::MS5 || t == StrategyTag::MS6;
  }
  return false;
}

}  // namespace

Scenario::Scenario(StateFamily family, Strategy strategy, NoisyChannel channel,
                   int n_observers)
    : family_(family),
      strategy_(std::move(strategy)),
      channel_(channel),
      n_observers_(n_observers) {
  if (!family_matches_strategy(family_, strategy_.tag()))
    throw std::invalid_argument("Scenario: state family does not match strategy");
  if (n_observers_ < 1)
    throw std::invalid_argument("Scenario: need at least one observer");
  if (static_cast<int>(strategy_.gammas().size()) < n_observers_)
    throw std::invalid_argument("Scenario: fewer gammas than observers");
  if (channel_.kind != ChannelKind::Noiseless &&
      !(channel_.p >= 0.0 && channel_.p <= 1.0))
    throw std::invalid_argument("Scenario: channel p out of [0, 1]");
}

DensityMatrix Scenario::initial_state() const {
  DensityMatrix base = make_state(family_);
  return strategy_.applies_local_unitary() ? apply_local_hadamards(base) : base;
}

DensityMatrix luders_step(const DensityMatrix& rho, const Strategy& s, int observer_k) {
  if (rho.nqubits() != s.arity())
    throw std::invalid_argument("luders_step: state arity does not match strategy");
  const int target = s.arity() - 1;
  ComplexMatrix out(rho.dim());
  for (const ComplexMatrix& root : sqrt_effects_for_sequential(s, observer_k)) {
    const ComplexMatrix emb = embed_on_qubit(root, target, s.arity());
    out += emb * rho.mat() * emb;  // roots are Hermitian
  }
  out *= cplx{0.5, 0.0};
  return DensityMatrix(std::move(out));
}

DensityMatrix advance(const DensityMatrix& rho, const Scenario& sc, int observer_k) {
  return apply_channel_qubit(luders_step(rho, sc.strategy(), observer_k), sc.channel(),
                             sc.sequential_qubit());
}

double witness(const DensityMatrix& rho, const Scenario& sc, int observer_k) {
  const Strategy& s = sc.strategy();
  if (rho.nqubits() != s.arity())
    throw std::invalid_argument("witness: state arity does not match strategy");

  ComplexMatrix comb(rho.dim());
  if (s.arity() == 2) {
    // X0Y0 + X1Y0 + X0Y1 - X1Y1
    const ComplexMatrix x[2] = {observable_for(s, Role::Alice, 0, 0),
                                observable_for(s, Role::Alice, 0, 1)};
    const ComplexMatrix y[2] = {observable_for(s, Role::Bob, observer_k, 0),
                                observable_for(s, Role::Bob, observer_k, 1)};
    comb += kron(x[0], y[0]);
    comb += kron(x[1], y[0]);
    comb += kron(x[0], y[1]);
    comb -= kron(x[1], y[1]);
  } else {
    // X1Y0Z0 + X0Y1Z0 + X0Y0Z1 - X1Y1Z1
    const ComplexMatrix x[2] = {observable_for(s, Role::Alice, 0, 0),
                                observable_for(s, Role::Alice, 0, 1)};
    const ComplexMatrix y[2] = {observable_for(s, Role::Bob, 0, 0),
                                observable_for(s, Role::Bob, 0, 1)};
    const ComplexMatrix z[2] = {observable_for(s, Role::Charlie, observer_k, 0),
                                observable_for(s, Role::Charlie, observer_k, 1)};
    comb += kron(kron(x[1], y[0]), z[0]);
    comb += kron(kron(x[0], y[1]), z[0]);
    comb += kron(kron(x[0], y[0]), z[1]);
    comb -= kron(kron(x[1], y[1]), z[1]);
  }
  return real_trace_product(rho.mat(), comb);
}

WitnessTrace run_protocol(const Scenario& sc) {
  const double bound = (sc.strategy().arity() == 2 ? 2.0 * std::sqrt(2.0) : 4.0) + 1e-10;
  WitnessTrace trace;
  trace.values.reserve(sc.n_observers());
  DensityMatrix rho = sc.initial_state();
  for (int k = 1; k <= sc.n_observers(); ++k) {
    const double v = witness(rho, sc, k);
    if (std::abs(v) > bound)
      throw std::logic_error("run_protocol: witness exceeds quantum bound");
    trace.values.push_back(v);
    if (k < sc.n_observers()) rho = advance(rho, sc, k);
  }
  return trace;
}

}  // namespace ssqn
