#include "ssqn/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ssqn {

std::string_view family_name(StateFamily f) {
  switch (f) {
    case StateFamily::Bell: return "bell";
    case StateFamily::GHZ: return "ghz";
    case StateFamily::W: return "w";
    case StateFamily::GHZPrime: return "ghz-prime";
    case StateFamily::WPrime: return "w-prime";
  }
  throw std::logic_error("family_name: bad enum");
}

StateFamily parse_family(std::string_view name) {
  if (name == "bell") return StateFamily::Bell;
  if (name == "ghz") return StateFamily::GHZ;
  if (name == "w") return StateFamily::W;
  if (name == "ghz-prime") return StateFamily::GHZPrime;
  if (name == "w-prime") return StateFamily::WPrime;
  throw std::invalid_argument("unknown state family: " + std::string(name));
}

int family_nqubits(StateFamily f) {
  return f == StateFamily::Bell ? 2 : 3;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  switch (mat_.dim()) {
    case 2: nqubits_ = 1; break;
    case 4: nqubits_ = 2; break;
    case 8: nqubits_ = 3; break;
    default:
      throw std::invalid_argument("DensityMatrix: dim must be 2, 4 or 8");
  }
  if (!mat_.is_hermitian(struct_tol))
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(mat_.trace() - cplx{1.0, 0.0}) > struct_tol)
    throw std::invalid_argument("DensityMatrix: trace must be 1");
  const auto eig = hermitian_eigenvalues(mat_);
  if (eig.front() < psd_floor)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

namespace {

DensityMatrix projector(const std::vector<cplx>& psi) {
  const int n = static_cast<int>(psi.size());
  ComplexMatrix rho(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rho(r, c) = psi[r] * std::conj(psi[c]);
  return DensityMatrix(std::move(rho));
}

}  // namespace

DensityMatrix make_state(StateFamily family) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  switch (family) {
    case StateFamily::Bell:
      return projector({r2, 0, 0, r2});
    case StateFamily::GHZ:
      return projector({r2, 0, 0, 0, 0, 0, 0, r2});
    case StateFamily::W:
      // |100>, |010>, |001> at indices 4, 2, 1
      return projector({0, r3, r3, 0, r3, 0, 0, 0});
    case StateFamily::GHZPrime:
      // (|000> + |011> + |101> + |110>) / 2
      return projector({0.5, 0, 0, 0.5, 0, 0.5, 0.5, 0});
    case StateFamily::WPrime: {
      // Hadamard transform of W: coefficient of |abc> is
      // ((-1)^a + (-1)^b + (-1)^c) / sqrt(24).
      const double s = 1.0 / std::sqrt(24.0);
      return projector({3 * s, s, s, -s, s, -s, -s, -3 * s});
    }
  }
  throw std::logic_error("make_state: bad enum");
}

DensityMatrix apply_local_hadamards(const DensityMatrix& rho) {
  if (rho.nqubits() != 3)
    throw std::invalid_argument("apply_local_hadamards: three-qubit states only");
  const ComplexMatrix u = kron(kron(hadamard(), hadamard()), hadamard());
  // H is real symmetric, so u is its own adjoint.
  return DensityMatrix(u * rho.mat() * u);
}

}  // namespace ssqn
