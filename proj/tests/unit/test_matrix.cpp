#include <doctest.h>

#include <cmath>

#include "ssqn/matrix.hpp"
#include "support/test_helpers.hpp"

using namespace ssqn;

TEST_CASE("kron identity and diagonal sign pattern") {
  const ComplexMatrix i4 = kron(identity2(), identity2());
  CHECK(i4.approx_equal(ComplexMatrix::identity(4)));

  const ComplexMatrix zz = kron(pauli_z(), pauli_z());
  const double diag[4] = {1.0, -1.0, -1.0, 1.0};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      CHECK(zz(r, c).imag() == doctest::Approx(0.0));
      CHECK(zz(r, c).real() == doctest::Approx(r == c ? diag[r] : 0.0));
    }
}

TEST_CASE("kron(X, I) maps |00> to |10>: hand multiplication oracle") {
  const ComplexMatrix m = kron(pauli_x(), identity2());
  // column vector |00> = e0; result column must be e2 (|10>)
  cplx col[4];
  for (int r = 0; r < 4; ++r) col[r] = m(r, 0);
  for (int r = 0; r < 4; ++r)
    CHECK(std::abs(col[r] - (r == 2 ? cplx{1, 0} : cplx{0, 0})) < struct_tol);
}

TEST_CASE("kron associativity on random 2x2 inputs") {
  test::Rng rng(991);
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix a = test::random_matrix(rng, 2);
    const ComplexMatrix b = test::random_matrix(rng, 2);
    const ComplexMatrix c = test::random_matrix(rng, 2);
    CHECK(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) < struct_tol);
  }
}

TEST_CASE("embed_on_qubit basics") {
  CHECK(embed_on_qubit(pauli_z(), 1, 2).approx_equal(kron(identity2(), pauli_z())));
  CHECK(embed_on_qubit(identity2(), 0, 3).approx_equal(ComplexMatrix::identity(8)));
  CHECK_THROWS_AS(embed_on_qubit(pauli_z(), 2, 2), std::out_of_range);
  CHECK_THROWS_AS(embed_on_qubit(ComplexMatrix::identity(4), 0, 2),
                  std::invalid_argument);
}

TEST_CASE("embed_on_qubit conjugation moves |000> to |001>") {
  // explicit 8x8 conjugation oracle
  ComplexMatrix proj000(8);
  proj000(0, 0) = 1.0;
  const ComplexMatrix x2 = embed_on_qubit(pauli_x(), 2, 3);
  const ComplexMatrix out = x2 * proj000 * x2.dagger();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      CHECK(std::abs(out(r, c) - ((r == 1 && c == 1) ? cplx{1, 0} : cplx{0, 0})) <
            struct_tol);
}

TEST_CASE("mat_sqrt_psd on diagonal and identity") {
  ComplexMatrix d(2);
  d(0, 0) = 0.8;
  d(1, 1) = 0.2;
  const ComplexMatrix r = mat_sqrt_psd(d);
  CHECK(r(0, 0).real() == doctest::Approx(std::sqrt(0.8)).epsilon(1e-14));
  CHECK(r(1, 1).real() == doctest::Approx(std::sqrt(0.2)).epsilon(1e-14));
  CHECK(std::abs(r(0, 1)) < struct_tol);

  CHECK(mat_sqrt_psd(identity2()).approx_equal(identity2()));
}

TEST_CASE("mat_sqrt_psd of (I + 0.6 X)/2 against the eigenbasis oracle") {
  // in the sigma_x eigenbasis the root is alpha*I + beta*sigma_x
  const double alpha = (std::sqrt(0.8) + std::sqrt(0.2)) / 2.0;
  const double beta = (std::sqrt(0.8) - std::sqrt(0.2)) / 2.0;
  const ComplexMatrix m = 0.5 * (identity2() + 0.6 * pauli_x());
  const ComplexMatrix expect = alpha * identity2() + beta * pauli_x();
  CHECK(mat_sqrt_psd(m).max_abs_diff(expect) < struct_tol);
}

TEST_CASE("mat_sqrt_psd squares back on 1000 random PSD 2x2 matrices") {
  test::Rng rng(4242);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ComplexMatrix m = test::random_hermitian_psd(rng, 2);
    const ComplexMatrix r = mat_sqrt_psd(m);
    worst = std::max(worst, (r * r).max_abs_diff(m));
    CHECK(r.is_hermitian(struct_tol));
  }
  CHECK(worst < struct_tol);
}

TEST_CASE("mat_sqrt_psd rejects bad input") {
  ComplexMatrix nh(2);
  nh(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS_AS(mat_sqrt_psd(nh), std::invalid_argument);

  ComplexMatrix neg(2);
  neg(0, 0) = 1.0;
  neg(1, 1) = -1e-6;
  CHECK_THROWS_AS(mat_sqrt_psd(neg), std::invalid_argument);
}

TEST_CASE("jacobi eigensystem reconstructs random Hermitian matrices") {
  test::Rng rng(77);
  for (int dim : {4, 8}) {
    for (int i = 0; i < 25; ++i) {
      ComplexMatrix g = test::random_matrix(rng, dim);
      ComplexMatrix h = g + g.dagger();
      const EigenSystem es = eig_hermitian(h);
      ComplexMatrix recon(dim);
      for (int k = 0; k < dim; ++k)
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c)
            recon(r, c) += es.values[k] * es.vectors(r, k) * std::conj(es.vectors(c, k));
      CHECK(recon.max_abs_diff(h) < 1e-12);
      for (size_t k = 1; k < es.values.size(); ++k)
        CHECK(es.values[k - 1] <= es.values[k]);
    }
  }
}

TEST_CASE("sqrt of larger PSD matrices via the jacobi route") {
  test::Rng rng(78);
  for (int dim : {4, 8}) {
    const ComplexMatrix m = test::random_hermitian_psd(rng, dim);
    const ComplexMatrix r = mat_sqrt_psd(m);
    CHECK((r * r).max_abs_diff(m) < 1e-12);
  }
}
