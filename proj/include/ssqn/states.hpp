#pragma once

#include <string_view>

#include "ssqn/matrix.hpp"

namespace ssqn {

// Canonical initial-state families. GHZPrime / WPrime are the GHZ / W states
// with a Hadamard applied on every qubit (see apply_local_hadamards).
enum class StateFamily { Bell, GHZ, W, GHZPrime, WPrime };

std::string_view family_name(StateFamily f);
StateFamily parse_family(std::string_view name);
int family_nqubits(StateFamily f);

// Validated density operator of 1..3 qubits: Hermitian within 1e-12, unit
// trace within 1e-12, eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);
  const ComplexMatrix& mat() const { return mat_; }
  int nqubits() const { return nqubits_; }
  int dim() const { return mat_.dim(); }

 private:
  ComplexMatrix mat_;
  int nqubits_;
};

// Pure-state projector of the named family. Basis order is lexicographic
// (|00>, |01>, |10>, |11>, resp. |000>..|111>) with qubit 0 leftmost.
DensityMatrix make_state(StateFamily family);

// (H (x) H (x) H) rho (H (x) H (x) H); involutive. Three-qubit states only.
DensityMatrix apply_local_hadamards(const DensityMatrix& rho);

}  // namespace ssqn
