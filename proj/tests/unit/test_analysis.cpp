#include <doctest.h>

#include <cmath>

#include "ssqn/analysis.hpp"
#include "ssqn/figures.hpp"
#include "support/test_helpers.hpp"

using namespace ssqn;

namespace {

constexpr ScenarioClass ms1_phase{StrategyTag::MS1, ChannelKind::PhaseFlip};
constexpr ScenarioClass ms1_bit{StrategyTag::MS1, ChannelKind::BitFlip};
constexpr ScenarioClass ms1_depol{StrategyTag::MS1, ChannelKind::Depolarizing};
constexpr ScenarioClass ms1_none{StrategyTag::MS1, ChannelKind::Noiseless};
constexpr ScenarioClass ms2_bit{StrategyTag::MS2, ChannelKind::BitFlip};
constexpr ScenarioClass ms3_bit{StrategyTag::MS3, ChannelKind::BitFlip};

// frozen Table I (p = 0.9): theta rows with epsilon, gamma1
constexpr double table1_eps[14] = {7.3073, 3.5089, 2.3351, 1.7397, 1.3525,
                                   1.0711, 0.8533, 0.6775, 0.5317, 0.4080,
                                   0.3014, 0.2084, 0.1263, 0.0533};
constexpr double table1_g1[14] = {0.0415, 0.1127, 0.1669, 0.2059, 0.2360,
                                  0.2602, 0.2800, 0.2966, 0.3105, 0.3223,
                                  0.3323, 0.3410, 0.3481, 0.3549};

// frozen Table II (p = 0.8)
constexpr double table2_eps[12] = {0.1123, 0.2559, 0.4324, 0.6550,  0.9447,  1.3385,
                                   1.9071, 2.8065, 4.4712, 8.8196, 27.9752, 92.6573};
constexpr double table2_g1[12] = {0.278067, 0.2757, 0.2728, 0.2694, 0.2652, 0.2598,
                                  0.2528,   0.2430, 0.2280, 0.2004, 0.1456, 0.0938};

}  // namespace

TEST_CASE("grid_points") {
  const auto lin = grid_points({0.0, 1.0, 5, false});
  REQUIRE(lin.size() == 5);
  CHECK(lin[0] == doctest::Approx(0.0));
  CHECK(lin[2] == doctest::Approx(0.5));
  CHECK(lin[4] == doctest::Approx(1.0));

  const auto lg = grid_points({1e-4, 1.0, 5, true});
  REQUIRE(lg.size() == 5);
  CHECK(lg[1] / lg[0] == doctest::Approx(10.0).epsilon(1e-9));
  CHECK_THROWS_AS(grid_points({0.0, 1.0, 5, true}), std::invalid_argument);
  CHECK_THROWS_AS(grid_points({0.0, 1.0, 0, false}), std::invalid_argument);
}

TEST_CASE("counts cap at n_max and count infeasible-first sequences as zero") {
  CHECK(count_violating_observers(ms1_none, 1e-5, 0.1, 1.0, 3).count == 3);
  CHECK(count_violating_observers(ms1_phase, 0.7, 30.0, 0.95, 5).count == 0);
}

TEST_CASE("noiseless ms1 at eps = 0.1 reaches five observers for suitable theta") {
  int best = 0;
  for (double th : grid_points({1e-7, 0.785, 120, true}))
    best = std::max(best, count_violating_observers(ms1_none, th, 0.1, 1.0, 5).count);
  CHECK(best == 5);
}

TEST_CASE("phase-flip ms1 at p = 0.95: five at eps = 0.1, at most four at eps = 2 "
          "for theta above 1.5e-7") {
  int best_01 = 0, best_2 = 0;
  for (double th : grid_points({1.5e-7, 0.785, 150, true})) {
    best_01 = std::max(best_01, count_violating_observers(ms1_phase, th, 0.1, 0.95, 5).count);
    best_2 = std::max(best_2, count_violating_observers(ms1_phase, th, 2.0, 0.95, 5).count);
  }
  CHECK(best_01 == 5);
  CHECK(best_2 == 4);
}

TEST_CASE("ms3 bit-flip at p = 0.85 reaches five charlies at eps = 0.1") {
  int best = 0;
  for (double th : grid_points({0.9, 0.9995, 60, false}))
    best = std::max(best, count_violating_observers(ms3_bit, th, 0.1, 0.85, 5).count);
  CHECK(best == 5);
}

TEST_CASE("ms2 bit-flip replicates ms1 phase-flip counts exactly") {
  for (double th : grid_points({1e-7, 0.785, 60, true}))
    for (double eps : {0.1, 2.0})
      CHECK(count_violating_observers(ms2_bit, th, eps, 0.95, 5).count ==
            count_violating_observers(ms1_phase, th, eps, 0.95, 5).count);
}

TEST_CASE("count is monotone non-increasing in epsilon") {
  test::Rng rng(51);
  const auto classes = all_scenario_classes();
  for (int i = 0; i < 80; ++i) {
    const ScenarioClass cls =
        classes[rng.uniform_int(0, static_cast<int>(classes.size()) - 1)];
    const double th = cls.strategy == StrategyTag::MS3 || cls.strategy == StrategyTag::MS4
                          ? rng.uniform(0.5, 0.999)
                          : rng.uniform(0.001, 0.7);
    const double p = cls.channel == ChannelKind::Depolarizing ? rng.uniform(0.5, 1.0)
                                                              : rng.uniform(0.55, 1.0);
    double e1 = rng.uniform(0.01, 3.0), e2 = rng.uniform(0.01, 3.0);
    if (e1 > e2) std::swap(e1, e2);
    CHECK(count_violating_observers(cls, th, e1, p, 5).count >=
          count_violating_observers(cls, th, e2, p, 5).count);
  }
}

TEST_CASE("final-sharp counting never loses observers and can gain one") {
  // at this point the recursion asks gamma_2 > 1 but a sharp gamma_2 = 1
  // measurement still violates
  const auto sol = solve_double_violation(ms1_phase, 0.5, 0.9);
  REQUIRE(sol.has_value());
  const double eps_above = sol->epsilon * 1.02;
  const int plain = count_violating_observers(ms1_phase, 0.5, eps_above, 0.9, 5).count;
  const int sharp =
      count_violating_observers(ms1_phase, 0.5, eps_above, 0.9, 5, true).count;
  CHECK(plain == 1);
  CHECK(sharp == 2);
}

TEST_CASE("depolarizing never reaches five observers on the fig-2 grid") {
  for (double th : grid_points({1e-7, 0.785, 120, true}))
    CHECK(count_violating_observers(ms1_depol, th, 0.1, 0.95, 5).count < 5);
}

TEST_CASE("double violation at theta = 0.5, p = 0.9 (table I row)") {
  const auto sol = solve_double_violation(ms1_phase, 0.5, 0.9);
  REQUIRE(sol.has_value());
  CHECK(sol->epsilon == doctest::Approx(0.3014).epsilon(2e-3));
  CHECK(std::abs(sol->epsilon - 0.3014) < 5e-4);
  CHECK(std::abs(sol->gamma1 - 0.3323) < 5e-4);
  CHECK(sol->witness1 > 2.0);
  CHECK(sol->witness2 > 2.0);
  CHECK(sol->witness1 == doctest::Approx(2.0738).epsilon(1e-3));
  CHECK(sol->witness2 == doctest::Approx(2.0888).epsilon(1e-3));
}

TEST_CASE("double violation at theta = 0.01 (smallest table I row)") {
  const auto sol = solve_double_violation(ms1_phase, 0.01, 0.9);
  REQUIRE(sol.has_value());
  CHECK(std::abs(sol->epsilon - 7.3073) < 5e-4);
  CHECK(std::abs(sol->gamma1 - 0.0415) < 5e-4);
}

TEST_CASE("double violation at theta = 0.9 ghz (table II row)") {
  const auto sol = solve_double_violation(ms3_bit, 0.9, 0.8);
  REQUIRE(sol.has_value());
  CHECK(std::abs(sol->epsilon - 1.3385) < 5e-4);
  CHECK(std::abs(sol->gamma1 - 0.2598) < 5e-4);
}

TEST_CASE("full table I within 5e-4") {
  const auto& thetas = table1_thetas();
  REQUIRE(thetas.size() == 14);
  for (size_t i = 0; i < thetas.size(); ++i) {
    const auto sol = solve_double_violation(ms1_phase, thetas[i], 0.9);
    REQUIRE(sol.has_value());
    CHECK(std::abs(sol->epsilon - table1_eps[i]) < 5e-4);
    CHECK(std::abs(sol->gamma1 - table1_g1[i]) < 5e-4);
  }
}

TEST_CASE("full table II within 5e-4") {
  const auto& thetas = table2_thetas();
  REQUIRE(thetas.size() == 12);
  for (size_t i = 0; i < thetas.size(); ++i) {
    const auto sol = solve_double_violation(ms3_bit, thetas[i], 0.8);
    REQUIRE(sol.has_value());
    CHECK(std::abs(sol->epsilon - table2_eps[i]) < 5e-4);
    CHECK(std::abs(sol->gamma1 - table2_g1[i]) < 5e-4);
  }
}

TEST_CASE("table solutions: immune channel violates twice, swapped channel fails") {
  for (double th : {0.2, 0.5, 0.65}) {
    const auto sol = solve_double_violation(ms1_phase, th, 0.9);
    REQUIRE(sol.has_value());
    const std::vector<double> gs{sol->gamma1, 1.0};
    CHECK(sol->witness1 > 2.0);
    CHECK(sol->witness2 > 2.0);
    CHECK(closed_witness(ms1_bit, 2, th, gs, 0.9) < 2.0);
  }
  for (double th : {0.82, 0.9, 0.98}) {
    const auto sol = solve_double_violation(ms3_bit, th, 0.8);
    REQUIRE(sol.has_value());
    const std::vector<double> gs{sol->gamma1, 1.0};
    CHECK(sol->witness1 > 2.0);
    CHECK(sol->witness2 > 2.0);
    CHECK(closed_witness({StrategyTag::MS3, ChannelKind::PhaseFlip}, 2, th, gs, 0.8) <
          2.0);
  }
}

TEST_CASE("solver residual: gamma_2 at the solution equals 1 to 1e-10") {
  const auto sol = solve_double_violation(ms1_phase, 0.3, 0.9);
  REQUIRE(sol.has_value());
  // reconstruct gamma_2 from the recursion at the solved epsilon
  const double g1 = sol->gamma1;
  const double g2 = (1.0 + sol->epsilon) *
                    (2.0 - std::cos(0.3) * (1.0 + std::sqrt(1.0 - g1 * g1))) /
                    (std::sin(0.3) * 0.8);
  CHECK(std::abs(g2 - 1.0) < 1e-10);
}

TEST_CASE("sweep emits rows in grid order with infeasible markers") {
  SweepConfig cfg;
  cfg.kind = SweepKind::Count;
  cfg.cls = ms1_phase;
  cfg.theta_grid = {0.01, 0.7, 8, false};
  cfg.epsilon = 0.1;
  cfg.p = 0.95;
  cfg.n_max = 3;
  const Table t = sweep(cfg);
  REQUIRE(t.rows.size() == 8);
  REQUIRE(t.columns.size() == 6 + 3);
  CHECK(std::get<double>(t.rows[0][0]) == doctest::Approx(0.01));
  CHECK(std::get<double>(t.rows[7][0]) == doctest::Approx(0.7));
  for (const auto& row : t.rows) {
    const long long count = std::get<long long>(row[5]);
    for (int j = 0; j < 3; ++j) {
      const bool feasible = j < count;
      CHECK(std::holds_alternative<double>(row[6 + j]) == feasible);
    }
  }
}

TEST_CASE("double-violation sweep marks rootless points") {
  SweepConfig cfg;
  cfg.kind = SweepKind::DoubleViolation;
  cfg.cls = ms1_bit;  // non-immune: gamma_2 cannot reach 1 for small theta
  cfg.theta_grid = {0.01, 0.05, 3, false};
  cfg.p = 0.9;
  const Table t = sweep(cfg);
  REQUIRE(t.rows.size() == 3);
  for (const auto& row : t.rows)
    CHECK(std::get<std::string>(row[4]) == "no-root");
}

TEST_CASE("verify_closed_vs_sim passes at 1e-10 and reports per class") {
  const auto classes = all_scenario_classes();
  const VerificationReport rep = verify_closed_vs_sim(classes, 25, 1e-10, 777);
  CHECK(rep.checks.size() == classes.size());
  CHECK(rep.all_pass());
  for (const auto& c : rep.checks) CHECK(c.max_deviation < 1e-10);
}

TEST_CASE("verification is deterministic for a fixed seed") {
  const auto classes = all_scenario_classes();
  const VerificationReport a = verify_closed_vs_sim(classes, 10, 1e-10, 99);
  const VerificationReport b = verify_closed_vs_sim(classes, 10, 1e-10, 99);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i)
    CHECK(a.checks[i].max_deviation == b.checks[i].max_deviation);
}

TEST_CASE("an impossible tolerance produces controlled failures") {
  const auto classes = all_scenario_classes();
  const VerificationReport rep = verify_closed_vs_sim(classes, 10, 1e-17, 5);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("full verification suite passes") {
  const VerificationReport rep = run_full_verification(40, 1e-10, 20250809);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
}
