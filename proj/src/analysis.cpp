#include "ssqn/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ssqn/protocol.hpp"

namespace ssqn {

namespace {

// Linear coefficients of the closed form in gamma_k given a fixed feasible
// prefix: witness = slope * gamma_k + offset.
struct WitnessLine {
  double slope;
  double offset;
};

WitnessLine witness_line(ScenarioClass cls, int k, double theta,
                         std::vector<double>& scratch, double p) {
  scratch.push_back(0.0);
  const double offset = closed_witness(cls, k, theta, scratch, p);
  scratch.back() = 1.0;
  const double slope = closed_witness(cls, k, theta, scratch, p) - offset;
  scratch.pop_back();
  return {slope, offset};
}

}  // namespace

CountResult count_violating_observers(ScenarioClass cls, double theta, double epsilon,
                                      double p, int n_max, bool final_sharp) {
  if (n_max < 1)
    throw std::invalid_argument("count_violating_observers: n_max must be >= 1");
  const SharpnessSequence seq = gamma_sequence(cls, theta, epsilon, p, n_max);
  CountResult res{theta, epsilon, p, cls, seq.feasible_count()};
  if (final_sharp && res.count < n_max) {
    // One more observer may fit if it measures sharply instead of following
    // the margin recursion.
    std::vector<double> prefix;
    for (int j = 0; j < res.count; ++j) prefix.push_back(*seq.gammas[j]);
    prefix.push_back(1.0);
    if (closed_witness(cls, res.count + 1, theta, prefix, p) > 2.0) res.count += 1;
  }
  return res;
}

std::optional<DoubleViolationSolution> solve_double_violation(ScenarioClass cls,
                                                              double theta, double p) {
  std::vector<double> scratch;
  const WitnessLine l1 = witness_line(cls, 1, theta, scratch, p);
  if (l1.slope <= 0.0) return std::nullopt;

  const auto gamma1_at = [&](double eps) {
    return (1.0 + eps) * (2.0 - l1.offset) / l1.slope;
  };
  // gamma_2 as a function of epsilon; +inf once gamma_1 leaves [0, 1].
  const auto gamma2_at = [&](double eps) {
    const double g1 = gamma1_at(eps);
    if (!(g1 >= 0.0 && g1 <= 1.0)) return std::numeric_limits<double>::infinity();
    std::vector<double> pre{g1};
    const WitnessLine l2 = witness_line(cls, 2, theta, pre, p);
    if (l2.slope <= 0.0) return std::numeric_limits<double>::infinity();
    return (1.0 + eps) * (2.0 - l2.offset) / l2.slope;
  };

  // gamma_2 is monotone increasing in epsilon on the feasible branch, so a
  // sign change of gamma_2 - 1 brackets the root.
  constexpr double eps_lo_init = 1e-12;
  constexpr double eps_cap = 1e4;
  if (gamma2_at(eps_lo_init) >= 1.0) return std::nullopt;
  double lo = eps_lo_init;
  double hi = 1.0;
  while (gamma2_at(hi) < 1.0) {
    hi *= 2.0;
    if (hi > eps_cap) return std::nullopt;
  }

  double mid = hi;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double g2 = gamma2_at(mid);
    residual = std::abs(g2 - 1.0);
    if (residual <= 1e-10) break;
    (g2 < 1.0 ? lo : hi) = mid;
  }
  if (residual > 1e-10) return std::nullopt;

  DoubleViolationSolution sol;
  sol.theta = theta;
  sol.epsilon = mid;
  sol.gamma1 = gamma1_at(mid);
  const std::vector<double> gs{sol.gamma1, 1.0};
  sol.witness1 = closed_witness(cls, 1, theta, gs, p);
  sol.witness2 = closed_witness(cls, 2, theta, gs, p);
  return sol;
}

std::vector<double> grid_points(const GridSpec& g) {
  if (g.points < 1) throw std::invalid_argument("grid: points must be >= 1");
  if (g.log && !(g.start > 0.0 && g.stop > 0.0))
    throw std::invalid_argument("grid: log grid requires positive bounds");
  std::vector<double> pts;
  pts.reserve(g.points);
  if (g.points == 1) {
    pts.push_back(g.start);
    return pts;
  }
  if (g.log) {
    const double la = std::log(g.start), lb = std::log(g.stop);
    for (int i = 0; i < g.points; ++i)
      pts.push_back(std::exp(la + (lb - la) * i / (g.points - 1)));
  } else {
    for (int i = 0; i < g.points; ++i)
      pts.push_back(g.start + (g.stop - g.start) * i / (g.points - 1));
  }
  return pts;
}

Table sweep(const SweepConfig& cfg) {
  Table t;
  const auto thetas = grid_points(cfg.theta_grid);
  const std::string strat{strategy_name(cfg.cls.strategy)};
  const std::string chan{channel_name(cfg.cls.channel)};

  if (cfg.kind == SweepKind::Count) {
    t.columns = {"theta", "epsilon", "p", "strategy", "channel", "count"};
    for (int j = 1; j <= cfg.n_max; ++j) t.columns.push_back("gamma" + std::to_string(j));
    for (double theta : thetas) {
      const SharpnessSequence seq =
          gamma_sequence(cfg.cls, theta, cfg.epsilon, cfg.p, cfg.n_max);
      const CountResult cr = count_violating_observers(cfg.cls, theta, cfg.epsilon,
                                                       cfg.p, cfg.n_max, cfg.final_sharp);
      auto& row = t.add_row();
      row.emplace_back(theta);
      row.emplace_back(cfg.epsilon);
      row.emplace_back(cfg.p);
      row.emplace_back(strat);
      row.emplace_back(chan);
      row.emplace_back(static_cast<long long>(cr.count));
      for (const auto& g : seq.gammas) {
        if (g)
          row.emplace_back(*g);
        else
          row.emplace_back(std::string("infeasible"));
      }
    }
  } else {
    t.columns = {"theta",  "p",        "strategy", "channel",
                 "epsilon", "gamma1",  "witness1", "witness2"};
    for (double theta : thetas) {
      auto& row = t.add_row();
      row.emplace_back(theta);
      row.emplace_back(cfg.p);
      row.emplace_back(strat);
      row.emplace_back(chan);
      if (const auto sol = solve_double_violation(cfg.cls, theta, cfg.p)) {
        row.emplace_back(sol->epsilon);
        row.emplace_back(sol->gamma1);
        row.emplace_back(sol->witness1);
        row.emplace_back(sol->witness2);
      } else {
        for (int i = 0; i < 4; ++i) row.emplace_back(std::string("no-root"));
      }
    }
  }
  return t;
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerificationCheck& c) { return c.pass; });
}

std::vector<ScenarioClass> all_scenario_classes() {
  std::vector<ScenarioClass> out;
  for (StrategyTag s : {StrategyTag::MS1, StrategyTag::MS2, StrategyTag::MS3,
                        StrategyTag::MS4, StrategyTag::MS5, StrategyTag::MS6})
    for (ChannelKind c : {ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                          ChannelKind::Depolarizing, ChannelKind::Noiseless})
      out.push_back({s, c});
  return out;
}

namespace {

struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng); }
  int uniform_int(int a, int b) {
    return std::uniform_int_distribution<int>(a, b)(rng);
  }
};

double draw_theta(Draw& d, StrategyTag tag) {
  using std::numbers::pi;
  switch (tag) {
    case StrategyTag::MS1:
    case StrategyTag::MS2:
      return d.uniform(0.05, pi / 4);
    case StrategyTag::MS3:
    case StrategyTag::MS4:
      return d.uniform(0.1, 1.0);
    case StrategyTag::MS5:
    case StrategyTag::MS6:
      return d.uniform(0.05, pi / 2 - 0.05);
  }
  throw std::logic_error("draw_theta: bad enum");
}

double draw_noise(Draw& d, ChannelKind kind) {
  switch (kind) {
    case ChannelKind::PhaseFlip:
    case ChannelKind::BitFlip:
      return d.uniform(0.55, 1.0);
    case ChannelKind::Depolarizing:
      return d.uniform(0.05, 1.0);
    case ChannelKind::Noiseless:
      return 1.0;
  }
  throw std::logic_error("draw_noise: bad enum");
}

std::vector<double> draw_gammas(Draw& d, int n) {
  std::vector<double> g(n);
  for (auto& v : g) v = d.uniform(0.0, 1.0);
  return g;
}

DensityMatrix random_density(Draw& d, int dim) {
  ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = cplx{d.normal(), d.normal()};
  ComplexMatrix rho = g * g.dagger();
  const double tr = rho.trace().real();
  rho *= cplx{1.0 / tr, 0.0};
  return DensityMatrix(std::move(rho));
}

// Seeds per check are decorrelated from insertion order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

VerificationCheck closed_vs_sim_check(ScenarioClass cls, int draws, double tolerance,
                                      std::uint64_t seed) {
  constexpr int depth = 5;
  Draw d(seed);
  double max_dev = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double theta = draw_theta(d, cls.strategy);
    const double p = draw_noise(d, cls.channel);
    const std::vector<double> gammas = draw_gammas(d, depth);
    const Scenario sc(base_family_for(cls.strategy),
                      Strategy(cls.strategy, theta, gammas),
                      NoisyChannel{cls.channel, p}, depth);
    const WitnessTrace trace = run_protocol(sc);
    for (int k = 1; k <= depth; ++k) {
      const double closed = closed_witness(cls, k, theta, gammas, p);
      max_dev = std::max(max_dev, std::abs(closed - trace.values[k - 1]));
    }
  }
  std::string name = "closed_vs_sim/";
  name += strategy_name(cls.strategy);
  name += "/";
  name += channel_name(cls.channel);
  return {name, max_dev, tolerance, max_dev <= tolerance};
}

VerificationCheck trace_equivalence_check(std::string name, StrategyTag tag_a,
                                          ChannelKind chan_a, StrategyTag tag_b,
                                          ChannelKind chan_b, int draws,
                                          std::uint64_t seed) {
  constexpr int depth = 5;
  constexpr double tol = 1e-12;
  Draw d(seed);
  double max_dev = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double theta = draw_theta(d, tag_a);
    const double p = draw_noise(d, chan_a);
    const std::vector<double> gammas = draw_gammas(d, depth);
    const auto run = [&](StrategyTag t, ChannelKind c) {
      return run_protocol(Scenario(base_family_for(t), Strategy(t, theta, gammas),
                                   NoisyChannel{c, p}, depth));
    };
    const WitnessTrace a = run(tag_a, chan_a);
    const WitnessTrace b = run(tag_b, chan_b);
    for (int k = 0; k < depth; ++k)
      max_dev = std::max(max_dev, std::abs(a.values[k] - b.values[k]));
  }
  return {std::move(name), max_dev, tol, max_dev <= tol};
}

VerificationCheck p1_degeneracy_check(StrategyTag tag, int draws, std::uint64_t seed) {
  constexpr int depth = 5;
  constexpr double tol = 1e-12;
  Draw d(seed);
  double max_dev = 0.0;
  const ChannelKind kinds[] = {ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                               ChannelKind::Depolarizing, ChannelKind::Noiseless};
  for (int i = 0; i < draws; ++i) {
    const double theta = draw_theta(d, tag);
    const std::vector<double> gammas = draw_gammas(d, depth);
    for (int k = 1; k <= depth; ++k) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (ChannelKind c : kinds) {
        const double v = closed_witness({tag, c}, k, theta, gammas, 1.0);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      max_dev = std::max(max_dev, hi - lo);
    }
  }
  std::string name = "p1_degeneracy/";
  name += strategy_name(tag);
  return {std::move(name), max_dev, tol, max_dev <= tol};
}

VerificationCheck kraus_completeness_check() {
  constexpr double tol = 1e-12;
  double max_dev = 0.0;
  for (ChannelKind kind : {ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                           ChannelKind::Depolarizing, ChannelKind::Noiseless}) {
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      ComplexMatrix sum(2);
      for (const auto& e : kraus_set(NoisyChannel{kind, p})) sum += e.dagger() * e;
      max_dev = std::max(max_dev, sum.max_abs_diff(identity2()));
    }
  }
  return {"kraus_completeness", max_dev, tol, max_dev <= tol};
}

VerificationCheck channel_output_check(std::uint64_t seed) {
  constexpr double tol = 1e-12;
  Draw d(seed);
  double max_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int nq = d.uniform_int(1, 3);
    const DensityMatrix rho = random_density(d, 1 << nq);
    const ChannelKind kind = static_cast<ChannelKind>(d.uniform_int(0, 3));
    const NoisyChannel ch{kind, d.uniform(0.0, 1.0)};
    const int target = d.uniform_int(0, nq - 1);
    // Constructing the output re-validates hermiticity and PSD.
    const DensityMatrix out = apply_channel_qubit(rho, ch, target);
    max_dev = std::max(max_dev, std::abs(out.mat().trace().real() - 1.0));
    max_dev = std::max(max_dev, std::abs(out.mat().trace().imag()));
  }
  return {"channel_trace_preservation", max_dev, tol, max_dev <= tol};
}

VerificationCheck channel_composition_check(std::uint64_t seed) {
  constexpr double tol = 1e-12;
  Draw d(seed);
  double max_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_density(d, 2);
    const double p1 = d.uniform(0.0, 1.0), p2 = d.uniform(0.0, 1.0);
    const double pc = 0.5 * (1.0 + (2.0 * p1 - 1.0) * (2.0 * p2 - 1.0));
    for (ChannelKind kind : {ChannelKind::PhaseFlip, ChannelKind::BitFlip}) {
      const DensityMatrix two =
          apply_channel_qubit(apply_channel_qubit(rho, {kind, p1}, 0), {kind, p2}, 0);
      const DensityMatrix one = apply_channel_qubit(rho, {kind, pc}, 0);
      max_dev = std::max(max_dev, two.mat().max_abs_diff(one.mat()));
    }
  }
  return {"channel_composition_law", max_dev, tol, max_dev <= tol};
}

VerificationCheck channel_commutation_check(std::uint64_t seed) {
  constexpr double tol = 1e-12;
  Draw d(seed);
  double max_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_density(d, 8);
    const NoisyChannel a{static_cast<ChannelKind>(d.uniform_int(0, 3)),
                         d.uniform(0.0, 1.0)};
    const NoisyChannel b{static_cast<ChannelKind>(d.uniform_int(0, 3)),
                         d.uniform(0.0, 1.0)};
    int qa = d.uniform_int(0, 2), qb = d.uniform_int(0, 2);
    if (qa == qb) qb = (qb + 1) % 3;
    const DensityMatrix ab = apply_channel_qubit(apply_channel_qubit(rho, a, qa), b, qb);
    const DensityMatrix ba = apply_channel_qubit(apply_channel_qubit(rho, b, qb), a, qa);
    max_dev = std::max(max_dev, ab.mat().max_abs_diff(ba.mat()));
  }
  return {"channel_commutation", max_dev, tol, max_dev <= tol};
}

// Averaged MS1 update against its three-term conjugation form.
VerificationCheck luders_map_check(std::uint64_t seed) {
  constexpr double tol = 1e-12;
  Draw d(seed);
  double max_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double gamma = d.uniform(0.0, 1.0);
    const Strategy s(StrategyTag::MS1, 0.4, {gamma});
    const DensityMatrix rho = random_density(d, 4);
    const DensityMatrix stepped = luders_step(rho, s, 1);

    const double root = std::sqrt(1.0 - gamma * gamma);
    const ComplexMatrix z2 = embed_on_qubit(pauli_z(), 1, 2);
    const ComplexMatrix x2 = embed_on_qubit(pauli_x(), 1, 2);
    ComplexMatrix expect = (0.25 * (2.0 + root)) * rho.mat();
    expect += 0.25 * (z2 * rho.mat() * z2);
    expect += (0.25 * (1.0 - root)) * (x2 * rho.mat() * x2);
    max_dev = std::max(max_dev, stepped.mat().max_abs_diff(expect));
  }
  return {"luders_map_vs_three_term_form", max_dev, tol, max_dev <= tol};
}

VerificationCheck sqrt_roundtrip_check(std::uint64_t seed) {
  constexpr double tol = 1e-12;
  Draw d(seed);
  double max_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    ComplexMatrix g(2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) g(r, c) = cplx{d.normal(), d.normal()};
    ComplexMatrix psd = g * g.dagger();
    psd *= cplx{1.0 / (1.0 + psd.trace().real()), 0.0};
    const ComplexMatrix root = mat_sqrt_psd(psd);
    max_dev = std::max(max_dev, (root * root).max_abs_diff(psd));
  }
  return {"mat_sqrt_psd_roundtrip", max_dev, tol, max_dev <= tol};
}

// Removing the (1 + eps) margin from any feasible entry must solve
// witness = 2 exactly; with the margin kept the witness must exceed 2.
VerificationCheck sequence_solves_witness_check(int draws, std::uint64_t seed) {
  constexpr double tol = 1e-12;
  double max_dev = 0.0;
  bool margin_ok = true;
  const auto classes = all_scenario_classes();
  Draw d(seed);
  for (int i = 0; i < draws; ++i) {
    const ScenarioClass cls = classes[d.uniform_int(0, static_cast<int>(classes.size()) - 1)];
    const double theta = draw_theta(d, cls.strategy);
    const double p = draw_noise(d, cls.channel);
    const double eps = d.uniform(0.01, 1.5);
    const SharpnessSequence seq = gamma_sequence(cls, theta, eps, p, 5);
    std::vector<double> prefix;
    for (const auto& entry : seq.gammas) {
      if (!entry) break;
      const int k = static_cast<int>(prefix.size()) + 1;
      prefix.push_back(*entry / (1.0 + eps));
      max_dev = std::max(max_dev,
                         std::abs(closed_witness(cls, k, theta, prefix, p) - 2.0));
      prefix.back() = *entry;
      if (closed_witness(cls, k, theta, prefix, p) <= 2.0) margin_ok = false;
    }
  }
  return {"gamma_sequence_solves_witness_eq_2", max_dev, tol,
          margin_ok && max_dev <= tol};
}

VerificationCheck gamma_ratio_check(int draws, std::uint64_t seed) {
  double worst = 0.0;  // max of (2 - ratio), positive would be a violation
  const auto classes = all_scenario_classes();
  Draw d(seed);
  for (int i = 0; i < draws; ++i) {
    const ScenarioClass cls = classes[d.uniform_int(0, static_cast<int>(classes.size()) - 1)];
    const double theta = draw_theta(d, cls.strategy);
    const double p = draw_noise(d, cls.channel);
    const double eps = d.uniform(0.01, 1.5);
    const SharpnessSequence seq = gamma_sequence(cls, theta, eps, p, 5);
    for (size_t k = 1; k < seq.gammas.size(); ++k) {
      if (!seq.gammas[k - 1] || !seq.gammas[k]) break;
      worst = std::max(worst, 2.0 - *seq.gammas[k] / *seq.gammas[k - 1]);
    }
  }
  return {"gamma_ratio_exceeds_2", worst, 0.0, worst <= 0.0};
}

VerificationCheck absorption_check(int draws, std::uint64_t seed) {
  double violations = 0.0;
  const auto classes = all_scenario_classes();
  Draw d(seed);
  for (int i = 0; i < draws; ++i) {
    const ScenarioClass cls = classes[d.uniform_int(0, static_cast<int>(classes.size()) - 1)];
    const SharpnessSequence seq =
        gamma_sequence(cls, draw_theta(d, cls.strategy), d.uniform(0.5, 40.0),
                       draw_noise(d, cls.channel), 6);
    bool dead = false;
    for (const auto& g : seq.gammas) {
      if (!g) dead = true;
      if (dead && g) violations += 1.0;
    }
  }
  return {"infeasible_absorption", violations, 0.0, violations == 0.0};
}

VerificationCheck limit_trend_check(std::string name, ScenarioClass cls, double p,
                                    const std::vector<double>& thetas, int n) {
  // gamma_n must shrink monotonically along the grid once feasible.
  double worst = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  int feasible = 0;
  for (double theta : thetas) {
    const SharpnessSequence seq = gamma_sequence(cls, theta, 0.1, p, n);
    if (seq.feasible_count() < n) continue;
    const double g = *seq.gammas[n - 1];
    if (feasible > 0) worst = std::max(worst, g - prev);
    prev = g;
    ++feasible;
  }
  const bool pass = feasible >= 3 && worst <= 0.0 && prev < 0.05;
  return {std::move(name), worst, 0.0, pass};
}

VerificationCheck q_dominance_check(std::uint64_t seed) {
  double worst = 0.0;  // max of (gamma_k - q_k) over finite pairs
  bool monotone = true;
  Draw d(seed);
  for (int i = 0; i < 200; ++i) {
    const double theta = d.uniform(1e-4, 0.3);
    const double eps = d.uniform(0.01, 1.0);
    const double p = d.uniform(0.55, 1.0);
    const auto q = q_sequence(theta, eps, p, 5);
    const SharpnessSequence g =
        gamma_sequence({StrategyTag::MS1, ChannelKind::PhaseFlip}, theta, eps, p, 5);
    double prev_q = 0.0;
    for (int k = 0; k < 5; ++k) {
      if (q[k] && g.gammas[k]) worst = std::max(worst, *g.gammas[k] - *q[k]);
      if (q[k]) {
        if (*q[k] <= prev_q) monotone = false;
        prev_q = *q[k];
      }
    }
  }
  return {"q_sequence_dominates_gamma", worst, 1e-15, monotone && worst <= 1e-15};
}

VerificationCheck nonimmune_saturation_check(ScenarioClass cls, std::string name,
                                             double p, double eps, int cap) {
  const auto thetas = grid_points({1e-9, 0.785, 160, true});
  long long worst = 0;
  for (double theta : thetas) {
    const auto cr = count_violating_observers(cls, theta, eps, p, 5);
    worst = std::max<long long>(worst, cr.count);
  }
  const double over = static_cast<double>(worst - cap);
  return {std::move(name), std::max(over, 0.0), 0.0, worst <= cap};
}

VerificationCheck count_monotone_check(std::uint64_t seed) {
  double violations = 0.0;
  const auto classes = all_scenario_classes();
  Draw d(seed);
  for (int i = 0; i < 200; ++i) {
    const ScenarioClass cls = classes[d.uniform_int(0, static_cast<int>(classes.size()) - 1)];
    const double theta = draw_theta(d, cls.strategy);
    const double p = draw_noise(d, cls.channel);
    double e1 = d.uniform(0.01, 3.0), e2 = d.uniform(0.01, 3.0);
    if (e1 > e2) std::swap(e1, e2);
    const int c1 = count_violating_observers(cls, theta, e1, p, 5).count;
    const int c2 = count_violating_observers(cls, theta, e2, p, 5).count;
    if (c1 < c2) violations += 1.0;
  }
  return {"count_monotone_in_epsilon", violations, 0.0, violations == 0.0};
}

}  // namespace

VerificationReport verify_closed_vs_sim(std::span<const ScenarioClass> classes,
                                        int draws, double tolerance,
                                        std::uint64_t seed) {
  if (draws < 1) throw std::invalid_argument("verify: draws must be >= 1");
  VerificationReport report;
  report.seed = seed;
  report.draws = draws;
  report.tolerance = tolerance;
  std::uint64_t salt = 0;
  for (const ScenarioClass& cls : classes)
    report.checks.push_back(
        closed_vs_sim_check(cls, draws, tolerance, mix_seed(seed, salt++)));
  return report;
}

VerificationReport run_full_verification(int draws, double tolerance,
                                         std::uint64_t seed) {
  const auto classes = all_scenario_classes();
  VerificationReport report = verify_closed_vs_sim(classes, draws, tolerance, seed);

  std::uint64_t salt = 1000;
  const int eq_draws = std::max(10, draws / 8);
  report.checks.push_back(trace_equivalence_check(
      "swap_equivalence/ms1_phase_vs_ms2_bit", StrategyTag::MS1, ChannelKind::PhaseFlip,
      StrategyTag::MS2, ChannelKind::BitFlip, eq_draws, mix_seed(seed, salt++)));
  report.checks.push_back(trace_equivalence_check(
      "swap_equivalence/ms3_bit_vs_ms4_phase", StrategyTag::MS3, ChannelKind::BitFlip,
      StrategyTag::MS4, ChannelKind::PhaseFlip, eq_draws, mix_seed(seed, salt++)));
  report.checks.push_back(trace_equivalence_check(
      "swap_equivalence/ms5_phase_vs_ms6_bit", StrategyTag::MS5, ChannelKind::PhaseFlip,
      StrategyTag::MS6, ChannelKind::BitFlip, eq_draws, mix_seed(seed, salt++)));
  report.checks.push_back(trace_equivalence_check(
      "swap_equivalence/ms1_depol_vs_ms2_depol", StrategyTag::MS1,
      ChannelKind::Depolarizing, StrategyTag::MS2, ChannelKind::Depolarizing, eq_draws,
      mix_seed(seed, salt++)));

  for (StrategyTag tag : {StrategyTag::MS1, StrategyTag::MS2, StrategyTag::MS3,
                          StrategyTag::MS4, StrategyTag::MS5, StrategyTag::MS6})
    report.checks.push_back(
        p1_degeneracy_check(tag, std::max(5, draws / 10), mix_seed(seed, salt++)));

  report.checks.push_back(kraus_completeness_check());
  report.checks.push_back(channel_output_check(mix_seed(seed, salt++)));
  report.checks.push_back(channel_composition_check(mix_seed(seed, salt++)));
  report.checks.push_back(channel_commutation_check(mix_seed(seed, salt++)));
  report.checks.push_back(luders_map_check(mix_seed(seed, salt++)));
  report.checks.push_back(sqrt_roundtrip_check(mix_seed(seed, salt++)));
  report.checks.push_back(sequence_solves_witness_check(400, mix_seed(seed, salt++)));
  report.checks.push_back(gamma_ratio_check(400, mix_seed(seed, salt++)));
  report.checks.push_back(absorption_check(400, mix_seed(seed, salt++)));

  report.checks.push_back(limit_trend_check(
      "limit_trend/ms1_phase", {StrategyTag::MS1, ChannelKind::PhaseFlip}, 0.95,
      grid_points({1e-1, 1e-7, 7, true}), 3));
  report.checks.push_back(limit_trend_check(
      "limit_trend/ms3_bit", {StrategyTag::MS3, ChannelKind::BitFlip}, 0.85,
      {0.9, 0.99, 0.999, 0.9999}, 3));
  report.checks.push_back(limit_trend_check(
      "limit_trend/ms5_phase", {StrategyTag::MS5, ChannelKind::PhaseFlip}, 0.9,
      grid_points({1e-1, 1e-7, 7, true}), 3));

  report.checks.push_back(q_dominance_check(mix_seed(seed, salt++)));
  report.checks.push_back(nonimmune_saturation_check(
      {StrategyTag::MS1, ChannelKind::BitFlip}, "nonimmune_saturation/ms1_bit", 0.95,
      0.1, 4));
  report.checks.push_back(nonimmune_saturation_check(
      {StrategyTag::MS1, ChannelKind::Depolarizing}, "depolarizing_count_cap/ms1", 0.95,
      0.1, 4));
  report.checks.push_back(count_monotone_check(mix_seed(seed, salt++)));
  return report;
}

}  // namespace ssqn
