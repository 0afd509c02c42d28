#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "ssqn/matrix.hpp"

namespace ssqn {

enum class Role { Alice, Bob, Charlie };

// MS1/MS2 are bipartite (Bob is the sequential observer), MS3..MS6 tripartite
// (Charlie is sequential). MS4/MS6 conjugate everything by local Hadamards,
// which the protocol realizes by transforming the initial state.
enum class StrategyTag { MS1, MS2, MS3, MS4, MS5, MS6 };

std::string_view strategy_name(StrategyTag t);  // "ms1" .. "ms6"
StrategyTag parse_strategy(std::string_view name);

class Strategy {
 public:
  // theta is an angle (radians) for MS1/MS2 in (0, pi/4] and MS5/MS6 in
  // [0, pi/2], and a dimensionless sharpness multiplier in (0, 1] for
  // MS3/MS4. gammas[k-1] is the sharpness of sequential observer k.
  Strategy(StrategyTag tag, double theta, std::vector<double> gammas);

  StrategyTag tag() const { return tag_; }
  double theta() const { return theta_; }
  const std::vector<double>& gammas() const { return gammas_; }
  double gamma(int observer_k) const;  // observer_k is 1-based

  int arity() const { return tag_ <= StrategyTag::MS2 ? 2 : 3; }
  bool applies_local_unitary() const {
    return tag_ == StrategyTag::MS4 || tag_ == StrategyTag::MS6;
  }
  Role sequential_role() const { return arity() == 2 ? Role::Bob : Role::Charlie; }

 private:
  StrategyTag tag_;
  double theta_;
  std::vector<double> gammas_;
};

// Valid two-outcome POVM element: Hermitian 2x2 with spectrum inside [0, 1].
class Effect {
 public:
  explicit Effect(ComplexMatrix m);
  const ComplexMatrix& mat() const { return mat_; }
  Effect complement() const;

 private:
  ComplexMatrix mat_;
};

// The POVM element for (role, input, outcome). observer_k must be >= 1 for
// the sequential role and 0 for the fixed roles.
Effect effect_for(const Strategy& s, Role role, int observer_k, int input, int outcome);

// Dichotomic +-1 observable of the two-outcome POVM: 2*E_0 - I.
ComplexMatrix observable_for(const Strategy& s, Role role, int observer_k, int input);

// Square roots of the sequential observer's four effects, ordered
// (input, outcome) = (0,0), (0,1), (1,0), (1,1).
std::array<ComplexMatrix, 4> sqrt_effects_for_sequential(const Strategy& s,
                                                         int observer_k);

}  // namespace ssqn
