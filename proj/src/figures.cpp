#include "ssqn/figures.hpp"

#include <stdexcept>

#include "ssqn/analysis.hpp"

namespace ssqn {

namespace {

struct CountCurve {
  std::string label;
  ScenarioClass cls;
  double epsilon;
  double p;
};

// One theta column plus one count column per curve.
Table count_figure(const GridSpec& grid, const std::vector<CountCurve>& curves,
                   int n_max) {
  Table t;
  t.columns.push_back("theta");
  for (const auto& c : curves) t.columns.push_back(c.label);
  for (double theta : grid_points(grid)) {
    auto& row = t.add_row();
    row.emplace_back(theta);
    for (const auto& c : curves)
      row.emplace_back(static_cast<long long>(
          count_violating_observers(c.cls, theta, c.epsilon, c.p, n_max).count));
  }
  return t;
}

// Solve the double-violation optimum per theta under `solve_cls`, then
// evaluate both witnesses under `eval_cls` with the same parameters.
Table double_violation_panel(ScenarioClass solve_cls, ScenarioClass eval_cls, double p,
                             const GridSpec& grid) {
  Table t;
  t.columns = {"theta", "epsilon", "gamma1", "witness1", "witness2"};
  for (double theta : grid_points(grid)) {
    auto& row = t.add_row();
    row.emplace_back(theta);
    if (const auto sol = solve_double_violation(solve_cls, theta, p)) {
      const std::vector<double> gs{sol->gamma1, 1.0};
      row.emplace_back(sol->epsilon);
      row.emplace_back(sol->gamma1);
      row.emplace_back(closed_witness(eval_cls, 1, theta, gs, p));
      row.emplace_back(closed_witness(eval_cls, 2, theta, gs, p));
    } else {
      for (int i = 0; i < 4; ++i) row.emplace_back(std::string("no-root"));
    }
  }
  return t;
}

Table parameter_table(ScenarioClass cls, double p, const std::vector<double>& thetas) {
  Table t;
  t.columns = {"theta", "epsilon", "gamma1"};
  for (double theta : thetas) {
    auto& row = t.add_row();
    row.emplace_back(theta);
    if (const auto sol = solve_double_violation(cls, theta, p)) {
      row.emplace_back(sol->epsilon);
      row.emplace_back(sol->gamma1);
    } else {
      row.emplace_back(std::string("no-root"));
      row.emplace_back(std::string("no-root"));
    }
  }
  return t;
}

constexpr ScenarioClass ms1_phase{StrategyTag::MS1, ChannelKind::PhaseFlip};
constexpr ScenarioClass ms1_bit{StrategyTag::MS1, ChannelKind::BitFlip};
constexpr ScenarioClass ms1_depol{StrategyTag::MS1, ChannelKind::Depolarizing};
constexpr ScenarioClass ms1_none{StrategyTag::MS1, ChannelKind::Noiseless};
constexpr ScenarioClass ms2_bit{StrategyTag::MS2, ChannelKind::BitFlip};
constexpr ScenarioClass ms3_bit{StrategyTag::MS3, ChannelKind::BitFlip};
constexpr ScenarioClass ms3_phase{StrategyTag::MS3, ChannelKind::PhaseFlip};
constexpr ScenarioClass ms3_depol{StrategyTag::MS3, ChannelKind::Depolarizing};
constexpr ScenarioClass ms3_none{StrategyTag::MS3, ChannelKind::Noiseless};
constexpr ScenarioClass ms4_phase{StrategyTag::MS4, ChannelKind::PhaseFlip};
constexpr ScenarioClass ms5_phase{StrategyTag::MS5, ChannelKind::PhaseFlip};
constexpr ScenarioClass ms5_bit{StrategyTag::MS5, ChannelKind::BitFlip};
constexpr ScenarioClass ms5_depol{StrategyTag::MS5, ChannelKind::Depolarizing};
constexpr ScenarioClass ms5_none{StrategyTag::MS5, ChannelKind::Noiseless};
constexpr ScenarioClass ms6_bit{StrategyTag::MS6, ChannelKind::BitFlip};

}  // namespace

const std::vector<double>& table1_thetas() {
  static const std::vector<double> thetas = {0.01, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3,
                                             0.35, 0.4,  0.45, 0.5, 0.55, 0.6, 0.65};
  return thetas;
}

const std::vector<double>& table2_thetas() {
  static const std::vector<double> thetas = {0.8,  0.82, 0.84, 0.86,  0.88,  0.9,
                                             0.92, 0.94, 0.96, 0.98, 0.995, 0.999};
  return thetas;
}

std::vector<std::string> reproduction_names() {
  return {"fig2", "fig4", "fig5", "fig6", "fig7", "table1", "table2"};
}

std::vector<NamedTable> reproduce_dataset(std::string_view name) {
  if (name == "fig2") {
    const GridSpec grid{1e-7, 0.785, 200, true};
    return {{"fig2",
             count_figure(grid,
                          {{"n_ms1_noiseless_eps0.1", ms1_none, 0.1, 1.0},
                           {"n_ms1_phase_eps0.1", ms1_phase, 0.1, 0.95},
                           {"n_ms1_phase_eps2", ms1_phase, 2.0, 0.95},
                           {"n_ms1_bit_eps0.1", ms1_bit, 0.1, 0.95},
                           {"n_ms1_depol_eps0.1", ms1_depol, 0.1, 0.95},
                           {"n_ms2_bit_eps0.1", ms2_bit, 0.1, 0.95}},
                          5)}};
  }
  if (name == "fig4") {
    const GridSpec grid{0.005, 0.9995, 200, false};
    return {{"fig4",
             count_figure(grid,
                          {{"n_ms3_noiseless_eps1", ms3_none, 1.0, 1.0},
                           {"n_ms3_bit_eps0.1", ms3_bit, 0.1, 0.85},
                           {"n_ms3_bit_eps2", ms3_bit, 2.0, 0.85},
                           {"n_ms3_phase_eps0.1", ms3_phase, 0.1, 0.85},
                           {"n_ms3_depol_eps0.1", ms3_depol, 0.1, 0.85},
                           {"n_ms4_phase_eps0.1", ms4_phase, 0.1, 0.85}},
                          5)}};
  }
  if (name == "fig5") {
    const GridSpec grid{1e-7, 0.785, 200, true};
    return {{"fig5",
             count_figure(grid,
                          {{"n_ms5_noiseless_eps1", ms5_none, 1.0, 1.0},
                           {"n_ms5_phase_eps0.1", ms5_phase, 0.1, 0.9},
                           {"n_ms5_phase_eps2", ms5_phase, 2.0, 0.9},
                           {"n_ms5_bit_eps0.1", ms5_bit, 0.1, 0.9},
                           {"n_ms5_depol_eps0.1", ms5_depol, 0.1, 0.9},
                           {"n_ms6_bit_eps0.1", ms6_bit, 0.1, 0.9}},
                          5)}};
  }
  if (name == "fig6") {
    const GridSpec grid{0.01, 0.65, 129, false};
    const double p = 0.9;
    return {{"fig6_a", double_violation_panel(ms1_phase, ms1_phase, p, grid)},
            {"fig6_b", double_violation_panel(ms1_phase, ms1_bit, p, grid)},
            {"fig6_c", double_violation_panel(ms1_phase, ms1_depol, p, grid)},
            {"fig6_d", double_violation_panel(ms1_phase, ms2_bit, p, grid)}};
  }
  if (name == "fig7") {
    const GridSpec grid{0.8, 0.999, 200, false};
    const double p = 0.8;
    return {{"fig7_a", double_violation_panel(ms3_bit, ms3_bit, p, grid)},
            {"fig7_b", double_violation_panel(ms3_bit, ms3_phase, p, grid)},
            {"fig7_c", double_violation_panel(ms3_bit, ms3_depol, p, grid)},
            {"fig7_d", double_violation_panel(ms3_bit, ms4_phase, p, grid)}};
  }
  if (name == "table1")
    return {{"table1", parameter_table(ms1_phase, 0.9, table1_thetas())}};
  if (name == "table2")
    return {{"table2", parameter_table(ms3_bit, 0.8, table2_thetas())}};
  throw std::invalid_argument("unknown reproduction name: " + std::string(name));
}

}  // namespace ssqn
