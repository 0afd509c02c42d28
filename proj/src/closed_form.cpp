#include "ssqn/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ssqn {

namespace {

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_gammas(std::span<const double> gammas, int k) {
  if (k < 1) throw std::invalid_argument("closed form: k must be >= 1");
  if (static_cast<int>(gammas.size()) < k)
    throw std::invalid_argument("closed form: need gamma_1..gamma_k");
  for (int j = 0; j < k; ++j)
    if (!(gammas[j] >= 0.0 && gammas[j] <= 1.0))
      throw std::invalid_argument("closed form: gamma out of [0, 1]");
}

void check_noise(ScenarioClass cls, double p) {
  switch (cls.channel) {
    case ChannelKind::PhaseFlip:
    case ChannelKind::BitFlip:
      // p = 1/2 is the degenerate separable boundary; accepted so the
      // analysis layer can report it.
      if (!(p >= 0.5 && p <= 1.0))
        throw std::invalid_argument("closed form: phase/bit requires p in [1/2, 1]");
      break;
    case ChannelKind::Depolarizing:
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("closed form: depolarizing requires p in [0, 1]");
      break;
    case ChannelKind::Noiseless:
      break;
  }
}

// prod_{j<k} (1 + sqrt(1 - gamma_j^2))
double sharpness_product(std::span<const double> gammas, int k) {
  double prod = 1.0;
  for (int j = 0; j + 1 < k; ++j)
    prod *= 1.0 + std::sqrt(1.0 - gammas[j] * gammas[j]);
  return prod;
}

enum class NoiseRoute { Immune, Crossed, Depolarizing };

// Which of the three expressions applies: Immune pairs (strategy, its
// noise-immune channel), Crossed the swapped channel, Depolarizing itself.
// Noiseless follows the Immune expression with p = 1 (all three coincide).
NoiseRoute route_for(ScenarioClass cls, bool phase_immune) {
  switch (cls.channel) {
    case ChannelKind::Noiseless:
      return NoiseRoute::Immune;
    case ChannelKind::Depolarizing:
      return NoiseRoute::Depolarizing;
    case ChannelKind::PhaseFlip:
      return phase_immune ? NoiseRoute::Immune : NoiseRoute::Crossed;
    case ChannelKind::BitFlip:
      return phase_immune ? NoiseRoute::Crossed : NoiseRoute::Immune;
  }
  throw std::logic_error("route_for: bad enum");
}

}  // namespace

double chsh_closed(ScenarioClass cls, int k, double theta, std::span<const double> gammas,
                   double p) {
  using std::numbers::pi;
  if (cls.strategy != StrategyTag::MS1 && cls.strategy != StrategyTag::MS2)
    throw std::invalid_argument("chsh_closed: strategy must be MS1 or MS2");
  if (!(theta > 0.0 && theta <= pi / 4 + 1e-12))
    throw std::invalid_argument("chsh_closed: theta out of (0, pi/4]");
  check_gammas(gammas, k);
  check_noise(cls, p);

  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double prod = sharpness_product(gammas, k);
  const double g = gammas[k - 1];
  const double pref = std::ldexp(1.0, 2 - k);  // 2^(2-k)

  // MS1's immune channel is phase-flip, MS2's is bit-flip.
  switch (route_for(cls, cls.strategy == StrategyTag::MS1)) {
    case NoiseRoute::Immune: {
      const double f = cls.channel == ChannelKind::Noiseless ? 1.0 : 2.0 * p - 1.0;
      return pref * (g * s * ipow(f, k - 1) + c * prod);
    }
    case NoiseRoute::Crossed:
      return pref * (g * s + c * ipow(2.0 * p - 1.0, k - 1) * prod);
    case NoiseRoute::Depolarizing:
      return pref * ipow(p, k - 1) * (g * s + c * prod);
  }
  throw std::logic_error("chsh_closed: unreachable");
}

double mermin_ghz_closed(ScenarioClass cls, int k, double theta,
                         std::span<const double> gammas, double p) {
  if (cls.strategy != StrategyTag::MS3 && cls.strategy != StrategyTag::MS4)
    throw std::invalid_argument("mermin_ghz_closed: strategy must be MS3 or MS4");
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::invalid_argument("mermin_ghz_closed: theta out of (0, 1]");
  check_gammas(gammas, k);
  check_noise(cls, p);

  const double prod = sharpness_product(gammas, k);
  const double g = gammas[k - 1];
  const double half_pow = std::ldexp(1.0, 1 - k);  // 2^(1-k)

  // MS3's immune channel is bit-flip, MS4's is phase-flip.
  switch (route_for(cls, cls.strategy == StrategyTag::MS4)) {
    case NoiseRoute::Immune: {
      const double f = cls.channel == ChannelKind::Noiseless ? 0.5 : p - 0.5;
      return 2.0 * theta * (g * ipow(f, k - 1) + half_pow * prod);
    }
    case NoiseRoute::Crossed:
      return 2.0 * theta * ipow(p - 0.5, k - 1) * (g + prod);
    case NoiseRoute::Depolarizing:
      return 2.0 * theta * ipow(0.5 * p, k - 1) * (g + prod);
  }
  throw std::logic_error("mermin_ghz_closed: unreachable");
}

double mermin_w_closed(ScenarioClass cls, int k, double theta,
                       std::span<const double> gammas, double p) {
  using std::numbers::pi;
  if (cls.strategy != StrategyTag::MS5 && cls.strategy != StrategyTag::MS6)
    throw std::invalid_argument("mermin_w_closed: strategy must be MS5 or MS6");
  if (!(theta >= 0.0 && theta <= pi / 2 + 1e-12))
    throw std::invalid_argument("mermin_w_closed: theta out of [0, pi/2]");
  check_gammas(gammas, k);
  check_noise(cls, p);

  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double q = c * c + 2.0 * s * s / 3.0;
  const double r = 4.0 * s * c / 3.0;
  const double prod = sharpness_product(gammas, k);
  const double g = gammas[k - 1];
  const double pref = std::ldexp(1.0, 2 - k);  // 1 / 2^(k-2)

  // MS5's immune channel is phase-flip, MS6's is bit-flip.
  switch (route_for(cls, cls.strategy == StrategyTag::MS5)) {
    case NoiseRoute::Immune: {
      const double f = cls.channel == ChannelKind::Noiseless ? 1.0 : 2.0 * p - 1.0;
      return pref * (prod * q + g * ipow(f, k - 1) * r);
    }
    case NoiseRoute::Crossed:
      return pref * (ipow(2.0 * p - 1.0, k - 1) * prod * q + g * r);
    case NoiseRoute::Depolarizing:
      return pref * ipow(p, k - 1) * (prod * q + g * r);
  }
  throw std::logic_error("mermin_w_closed: unreachable");
}

double closed_witness(ScenarioClass cls, int k, double theta,
                      std::span<const double> gammas, double p) {
  switch (cls.strategy) {
    case StrategyTag::MS1:
    case StrategyTag::MS2:
      return chsh_closed(cls, k, theta, gammas, p);
    case StrategyTag::MS3:
    case StrategyTag::MS4:
      return mermin_ghz_closed(cls, k, theta, gammas, p);
    case StrategyTag::MS5:
    case StrategyTag::MS6:
      return mermin_w_closed(cls, k, theta, gammas, p);
  }
  throw std::logic_error("closed_witness: bad enum");
}

int SharpnessSequence::feasible_count() const {
  int n = 0;
  for (const auto& g : gammas) {
    if (!g) break;
    ++n;
  }
  return n;
}

SharpnessSequence gamma_sequence(ScenarioClass cls, double theta, double epsilon,
                                 double p, int n) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("gamma_sequence: epsilon must be > 0");
  if (n < 1) throw std::invalid_argument("gamma_sequence: n must be >= 1");

  SharpnessSequence seq;
  seq.theta = theta;
  seq.epsilon = epsilon;
  seq.p = p;

  // Every closed-form witness is linear in gamma_k, so the recursion is the
  // inversion of witness = 2 scaled by (1 + epsilon). The slope and offset
  // are read off the closed form at gamma_k = 1 and 0.
  std::vector<double> prefix;
  bool dead = false;
  for (int k = 1; k <= n; ++k) {
    if (dead) {
      seq.gammas.emplace_back(std::nullopt);
      continue;
    }
    prefix.push_back(0.0);
    const double offset = closed_witness(cls, k, theta, prefix, p);
    prefix.back() = 1.0;
    const double slope = closed_witness(cls, k, theta, prefix, p) - offset;
    bool ok = slope > 0.0;
    double g = 0.0;
    if (ok) {
      g = (1.0 + epsilon) * (2.0 - offset) / slope;
      ok = g > 0.0 && g <= 1.0;
    }
    if (!ok) {
      prefix.pop_back();
      dead = true;
      seq.gammas.emplace_back(std::nullopt);
    } else {
      prefix.back() = g;
      seq.gammas.emplace_back(g);
    }
  }
  return seq;
}

std::vector<std::optional<double>> q_sequence(double theta, double epsilon, double p,
                                              int n) {
  using std::numbers::pi;
  if (!(theta > 0.0 && theta <= pi / 4 + 1e-12))
    throw std::invalid_argument("q_sequence: theta out of (0, pi/4]");
  if (!(epsilon > 0.0)) throw std::invalid_argument("q_sequence: epsilon must be > 0");
  if (!(p > 0.5 && p <= 1.0))
    throw std::invalid_argument("q_sequence: p must lie in (1/2, 1]");
  if (n < 1) throw std::invalid_argument("q_sequence: n must be >= 1");

  std::vector<std::optional<double>> q;
  std::vector<double> finite;
  bool dead = false;
  for (int k = 1; k <= n; ++k) {
    if (dead) {
      q.emplace_back(std::nullopt);
      continue;
    }
    double value;
    if (k == 1) {
      value = (1.0 + epsilon) * theta;
    } else {
      double prod = 1.0;
      for (double qj : finite) prod *= 1.0 - 0.5 * qj * qj;
      value = (1.0 + epsilon) * std::ldexp(1.0, k) *
              (1.0 - (1.0 - 0.5 * theta * theta) * prod) /
              (theta * ipow(2.0 * p - 1.0, k - 1));
    }
    if (value > 0.0 && value <= 1.0) {
      finite.push_back(value);
      q.emplace_back(value);
    } else {
      dead = true;
      q.emplace_back(std::nullopt);
    }
  }
  return q;
}

}  // namespace ssqn
