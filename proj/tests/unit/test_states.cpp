#include <doctest.h>

#include <cmath>

#include "ssqn/states.hpp"

using namespace ssqn;

TEST_CASE("bell state entries") {
  const DensityMatrix rho = make_state(StateFamily::Bell);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const bool corner = (r == 0 || r == 3) && (c == 0 || c == 3);
      CHECK(std::abs(rho.mat()(r, c) - (corner ? cplx{0.5, 0} : cplx{0, 0})) <
            struct_tol);
    }
}

TEST_CASE("w state is 1/3 on the symmetric one-excitation span") {
  const DensityMatrix rho = make_state(StateFamily::W);
  const int idx[3] = {1, 2, 4};
  for (int a : idx)
    for (int b : idx)
      CHECK(rho.mat()(a, b).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(rho.mat()(0, 0)) < struct_tol);
  CHECK(std::abs(rho.mat()(7, 7)) < struct_tol);
}

TEST_CASE("ghz-prime equals hadamard-transformed ghz") {
  const DensityMatrix direct = make_state(StateFamily::GHZPrime);
  const DensityMatrix via_h = apply_local_hadamards(make_state(StateFamily::GHZ));
  CHECK(direct.mat().max_abs_diff(via_h.mat()) < struct_tol);
  // amplitudes 1/2 on |000>, |011>, |101>, |110>
  const int support[4] = {0, 3, 5, 6};
  for (int a : support)
    for (int b : support)
      CHECK(direct.mat()(a, b).real() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("w-prime equals hadamard-transformed w") {
  const DensityMatrix direct = make_state(StateFamily::WPrime);
  const DensityMatrix via_h = apply_local_hadamards(make_state(StateFamily::W));
  CHECK(direct.mat().max_abs_diff(via_h.mat()) < struct_tol);

  // coefficient of |abc> is ((-1)^a + (-1)^b + (-1)^c)/sqrt(24); read the
  // amplitudes back off the projector's first row (all are real here).
  const double s = 1.0 / std::sqrt(24.0);
  const double amp[8] = {3 * s, s, s, -s, s, -s, -s, -3 * s};
  for (int c = 0; c < 8; ++c)
    CHECK(direct.mat()(0, c).real() == doctest::Approx(amp[0] * amp[c]).epsilon(1e-13));
}

TEST_CASE("all families are pure valid density matrices") {
  for (StateFamily f : {StateFamily::Bell, StateFamily::GHZ, StateFamily::W,
                        StateFamily::GHZPrime, StateFamily::WPrime}) {
    const DensityMatrix rho = make_state(f);
    CHECK(std::abs(rho.mat().trace() - cplx{1, 0}) < struct_tol);
    CHECK(rho.mat().is_hermitian(struct_tol));
    CHECK((rho.mat() * rho.mat()).max_abs_diff(rho.mat()) < struct_tol);  // purity
  }
}

TEST_CASE("apply_local_hadamards is involutive") {
  for (StateFamily f : {StateFamily::GHZ, StateFamily::W, StateFamily::WPrime}) {
    const DensityMatrix rho = make_state(f);
    const DensityMatrix twice = apply_local_hadamards(apply_local_hadamards(rho));
    CHECK(twice.mat().max_abs_diff(rho.mat()) < struct_tol);
  }
  CHECK_THROWS_AS(apply_local_hadamards(make_state(StateFamily::Bell)),
                  std::invalid_argument);
}

TEST_CASE("density matrix validation rejects malformed input") {
  ComplexMatrix bad_trace(4);
  bad_trace(0, 0) = 2.0;
  CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::invalid_argument);

  ComplexMatrix not_psd(2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{not_psd}, std::invalid_argument);

  ComplexMatrix bad_dim(3);
  bad_dim(0, 0) = 1.0;
  CHECK_THROWS_AS(DensityMatrix{bad_dim}, std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (StateFamily f : {StateFamily::Bell, StateFamily::GHZ, StateFamily::W,
                        StateFamily::GHZPrime, StateFamily::WPrime})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("epr"), std::invalid_argument);
}
