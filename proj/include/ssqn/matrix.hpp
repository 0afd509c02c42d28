#pragma once

#include <complex>
#include <vector>

namespace ssqn {

using cplx = std::complex<double>;

// Tolerances shared across the library.
inline constexpr double struct_tol = 1e-12;  // hermiticity / trace / equality checks
inline constexpr double psd_floor = -1e-10;  // eigenvalue slack for PSD checks
inline constexpr double oracle_tol = 1e-10;  // closed form vs direct simulation

// Dense square complex matrix, row-major. Dimensions here are tiny (2, 4, 8),
// so everything is plain value semantics with no sparse or blocked machinery.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const cplx& operator()(int r, int c) const {
    return a_[static_cast<size_t>(r) * dim_ + c];
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  ComplexMatrix dagger() const;
  cplx trace() const;
  double max_abs_diff(const ComplexMatrix& o) const;
  bool approx_equal(const ComplexMatrix& o, double tol = struct_tol) const;
  bool is_hermitian(double tol = struct_tol) const;

 private:
  int dim_;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);

const ComplexMatrix& identity2();
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& hadamard();

// Kronecker product, dim = a.dim * b.dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Places a 2x2 operator on one qubit of an n-qubit register (identities
// elsewhere). Qubit 0 is the leftmost tensor factor.
ComplexMatrix embed_on_qubit(const ComplexMatrix& op, int qubit_index, int nqubits);

// u * m * u^dagger
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m);

// Re tr(a * b) without forming the product.
double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigendecomposition of a Hermitian matrix; values ascending, column i of
// `vectors` is the eigenvector of values[i]. 2x2 uses the closed-form
// characteristic polynomial; larger dims use cyclic Jacobi sweeps.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};
EigenSystem eig_hermitian(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Hermitian PSD square root. Rejects non-Hermitian input and eigenvalues
// below the PSD slack; eigenvalues in [psd_floor, 0) are clamped to zero.
ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m);

}  // namespace ssqn
