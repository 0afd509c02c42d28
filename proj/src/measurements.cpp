#include "ssqn/measurements.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ssqn {

std::string_view strategy_name(StrategyTag t) {
  switch (t) {
    case StrategyTag::MS1: return "ms1";
    case StrategyTag::MS2: return "ms2";
    case StrategyTag::MS3: return "ms3";
    case StrategyTag::MS4: return "ms4";
    case StrategyTag::MS5: return "ms5";
    case StrategyTag::MS6: return "ms6";
  }
  throw std::logic_error("strategy_name: bad enum");
}

StrategyTag parse_strategy(std::string_view name) {
  if (name == "ms1") return StrategyTag::MS1;
  if (name == "ms2") return StrategyTag::MS2;
  if (name == "ms3") return StrategyTag::MS3;
  if (name == "ms4") return StrategyTag::MS4;
  if (name == "ms5") return StrategyTag::MS5;
  if (name == "ms6") return StrategyTag::MS6;
  throw std::invalid_argument("unknown strategy: " + std::string(name));
}

namespace {

constexpr double domain_slack = 1e-12;

void check_theta_domain(StrategyTag tag, double theta) {
  using std::numbers::pi;
  bool ok = false;
  switch (tag) {
    case StrategyTag::MS1:
    case StrategyTag::MS2:
      ok = theta > 0.0 && theta <= pi / 4 + domain_slack;
      break;
    case StrategyTag::MS3:
    case StrategyTag::MS4:
      ok = theta > 0.0 && theta <= 1.0;
      break;
    case StrategyTag::MS5:
    case StrategyTag::MS6:
      ok = theta >= 0.0 && theta <= pi / 2 + domain_slack;
      break;
  }
  if (!ok)
    throw std::invalid_argument("Strategy: theta out of domain for " +
                                std::string(strategy_name(tag)));
}

}  // namespace

Strategy::Strategy(StrategyTag tag, double theta, std::vector<double> gammas)
    : tag_(tag), theta_(theta), gammas_(std::move(gammas)) {
  check_theta_domain(tag, theta);
  for (double g : gammas_)
    if (!(g >= 0.0 && g <= 1.0))
      throw std::invalid_argument("Strategy: gamma out of [0, 1]");
}

double Strategy::gamma(int observer_k) const {
  if (observer_k < 1 || observer_k > static_cast<int>(gammas_.size()))
    throw std::out_of_range("Strategy: observer index out of range");
  return gammas_[observer_k - 1];
}

Effect::Effect(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.dim() != 2) throw std::invalid_argument("Effect: must be 2x2");
  if (!mat_.is_hermitian(struct_tol))
    throw std::invalid_argument("Effect: not Hermitian");
  const auto eig = hermitian_eigenvalues(mat_);
  if (eig.front() < -struct_tol || eig.back() > 1.0 + struct_tol)
    throw std::invalid_argument("Effect: spectrum outside [0, 1]");
}

Effect Effect::complement() const { return Effect(identity2() - mat_); }

namespace {

// (I + cx*sx + cy*sy + cz*sz) / 2
ComplexMatrix bloch_effect(double cx, double cy, double cz) {
  ComplexMatrix m = identity2();
  if (cx != 0.0) m += cx * pauli_x();
  if (cy != 0.0) m += cy * pauli_y();
  if (cz != 0.0) m += cz * pauli_z();
  return 0.5 * m;
}

// Outcome-0 effect per strategy / role / input. gamma is only read for the
// sequential role.
ComplexMatrix outcome0_effect(StrategyTag tag, Role role, int input, double theta,
                              double gamma) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double in_sign = input == 0 ? 1.0 : -1.0;
  switch (tag) {
    case StrategyTag::MS1:
      if (role == Role::Alice) return bloch_effect(in_sign * s, 0, c);
      return input == 0 ? bloch_effect(0, 0, 1) : bloch_effect(gamma, 0, 0);
    case StrategyTag::MS2:
      if (role == Role::Alice) return bloch_effect(c, 0, in_sign * s);
      return input == 0 ? bloch_effect(1, 0, 0) : bloch_effect(0, 0, gamma);
    case StrategyTag::MS3:
      if (role == Role::Alice)
        return input == 0 ? bloch_effect(1, 0, 0) : bloch_effect(0, 1, 0);
      if (role == Role::Bob)
        return input == 0 ? bloch_effect(0, -theta, 0) : bloch_effect(theta, 0, 0);
      return input == 0 ? bloch_effect(1, 0, 0) : bloch_effect(0, gamma, 0);
    case StrategyTag::MS4:
      if (role == Role::Alice)
        return input == 0 ? bloch_effect(0, 0, 1) : bloch_effect(0, -1, 0);
      if (role == Role::Bob)
        return input == 0 ? bloch_effect(0, theta, 0) : bloch_effect(0, 0, theta);
      return input == 0 ? bloch_effect(0, 0, 1) : bloch_effect(0, -gamma, 0);
    case StrategyTag::MS5:
      if (role != Role::Charlie) return bloch_effect(s, 0, in_sign * c);
      return input == 0 ? bloch_effect(0, 0, 1) : bloch_effect(gamma, 0, 0);
    case StrategyTag::MS6:
      if (role != Role::Charlie) return bloch_effect(in_sign * c, 0, s);
      return input == 0 ? bloch_effect(1, 0, 0) : bloch_effect(0, 0, gamma);
  }
  throw std::logic_error("outcome0_effect: bad enum");
}

void check_measurement_args(const Strategy& s, Role role, int observer_k, int input) {
  if (input != 0 && input != 1)
    throw std::invalid_argument("measurement input must be 0 or 1");
  const bool sequential = role == s.sequential_role();
  if (role == Role::Charlie && s.arity() == 2)
    throw std::invalid_argument("Charlie has no role in a bipartite strategy");
  if (sequential) {
    if (observer_k < 1 || observer_k > static_cast<int>(s.gammas().size()))
      throw std::out_of_range("sequential observer index out of range");
  } else if (observer_k != 0) {
    throw std::invalid_argument("observer_k must be 0 for non-sequential roles");
  }
}

}  // namespace

Effect effect_for(const Strategy& s, Role role, int observer_k, int input, int outcome) {
  check_measurement_args(s, role, observer_k, input);
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("measurement outcome must be 0 or 1");
  const bool sequential = role == s.sequential_role();
  const double gamma = sequential ? s.gamma(observer_k) : 0.0;
  ComplexMatrix e0 = outcome0_effect(s.tag(), role, input, s.theta(), gamma);
  return outcome == 0 ? Effect(std::move(e0)) : Effect(identity2() - e0);
}

ComplexMatrix observable_for(const Strategy& s, Role role, int observer_k, int input) {
  check_measurement_args(s, role, observer_k, input);
  const bool sequential = role == s.sequential_role();
  const double gamma = sequential ? s.gamma(observer_k) : 0.0;
  return 2.0 * outcome0_effect(s.tag(), role, input, s.theta(), gamma) - identity2();
}

std::array<ComplexMatrix, 4> sqrt_effects_for_sequential(const Strategy& s,
                                                         int observer_k) {
  const Role role = s.sequential_role();
  std::array<ComplexMatrix, 4> out = {ComplexMatrix(2), ComplexMatrix(2),
                                      ComplexMatrix(2), ComplexMatrix(2)};
  for (int input = 0; input < 2; ++input)
    for (int outcome = 0; outcome < 2; ++outcome)
      out[2 * input + outcome] =
          mat_sqrt_psd(effect_for(s, role, observer_k, input, outcome).mat());
  return out;
}

}  // namespace ssqn
