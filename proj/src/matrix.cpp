#include "ssqn/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ssqn {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("ComplexMatrix: dim must be positive");
  a_.assign(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("ComplexMatrix: dim mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("ComplexMatrix: dim mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("ComplexMatrix: dim mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
  return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& o, double tol) const {
  return dim_ == o.dim_ && max_abs_diff(o) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("ComplexMatrix: dim mismatch");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx{0.0, 0.0}) continue;
      for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= cplx{s, 0.0}; }

namespace {

ComplexMatrix make_pauli(cplx m00, cplx m01, cplx m10, cplx m11) {
  ComplexMatrix m(2);
  m(0, 0) = m00;
  m(0, 1) = m01;
  m(1, 0) = m10;
  m(1, 1) = m11;
  return m;
}

}  // namespace

const ComplexMatrix& identity2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m = make_pauli(0.0, 1.0, 1.0, 0.0);
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m = make_pauli(0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0);
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m = make_pauli(1.0, 0.0, 0.0, -1.0);
  return m;
}

const ComplexMatrix& hadamard() {
  static const ComplexMatrix m = [] {
    const double s = 1.0 / std::sqrt(2.0);
    return make_pauli(s, s, s, -s);
  }();
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int ra = 0; ra < na; ++ra)
    for (int ca = 0; ca < na; ++ca) {
      const cplx v = a(ra, ca);
      if (v == cplx{0.0, 0.0}) continue;
      for (int rb = 0; rb < nb; ++rb)
        for (int cb = 0; cb < nb; ++cb)
          out(ra * nb + rb, ca * nb + cb) = v * b(rb, cb);
    }
  return out;
}

ComplexMatrix embed_on_qubit(const ComplexMatrix& op, int qubit_index, int nqubits) {
  if (op.dim() != 2) throw std::invalid_argument("embed_on_qubit: op must be 2x2");
  if (nqubits < 1) throw std::invalid_argument("embed_on_qubit: nqubits must be >= 1");
  if (qubit_index < 0 || qubit_index >= nqubits)
    throw std::out_of_range("embed_on_qubit: qubit index out of range");
  ComplexMatrix acc = (qubit_index == 0) ? op : identity2();
  for (int q = 1; q < nqubits; ++q) acc = kron(acc, (q == qubit_index) ? op : identity2());
  return acc;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m) {
  return u * m * u.dagger();
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("real_trace_product: dim mismatch");
  double t = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      t += (a(r, c) * b(c, r)).real();
  return t;
}

namespace {

// Closed-form eigensystem of a 2x2 Hermitian matrix.
EigenSystem eig_hermitian_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const cplx g = m(0, 1);
  const double mean = 0.5 * (a + d);
  const double disc = std::hypot(0.5 * (a - d), std::abs(g));
  const double lo = mean - disc;
  const double hi = mean + disc;

  ComplexMatrix v(2);
  if (std::abs(g) < 1e-300) {
    if (a <= d) {
      v(0, 0) = 1.0;
      v(1, 1) = 1.0;
    } else {
      v(1, 0) = 1.0;
      v(0, 1) = 1.0;
    }
  } else {
    // (g, lo - a) and (g, hi - a) are unnormalized eigenvectors.
    for (int col = 0; col < 2; ++col) {
      const double lam = (col == 0) ? lo : hi;
      cplx v0 = g, v1 = cplx{lam - a, 0.0};
      const double n = std::sqrt(std::norm(v0) + std::norm(v1));
      v(0, col) = v0 / n;
      v(1, col) = v1 / n;
    }
  }
  return EigenSystem{{lo, hi}, v};
}

// Cyclic Jacobi for Hermitian matrices. Each rotation is a phase followed by
// a real Givens rotation in the (p, q) plane.
EigenSystem eig_hermitian_jacobi(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr int max_sweeps = 64;
  constexpr double conv_tol = 1e-14;

  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(a(i, i)));
  scale = std::max(scale, 1.0);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= conv_tol * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const cplx phase = apq / r;  // a_pq = r * phase
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double tau = (beta - alpha) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // J differs from identity only in the (p, q) block:
        //   J[p][p] = c        J[p][q] = s
        //   J[q][p] = -s/ph    J[q][q] = c/ph      with ph = phase
        const cplx jqp = -s * std::conj(phase);
        const cplx jqq = c * std::conj(phase);

        // B = A * J (columns p, q change)
        for (int i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * c + aiq * jqp;
          a(i, q) = aip * s + aiq * jqq;
        }
        // A = J^dagger * B (rows p, q change)
        for (int j = 0; j < n; ++j) {
          const cplx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj + std::conj(jqp) * aqj;
          a(q, j) = s * apj + std::conj(jqq) * aqj;
        }
        // V = V * J
        for (int i = 0; i < n; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = vip * c + viq * jqp;
          v(i, q) = vip * s + viq * jqq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
  for (int c = 0; c < n; ++c) {
    es.values[c] = a(order[c], order[c]).real();
    for (int r = 0; r < n; ++r) es.vectors(r, c) = v(r, order[c]);
  }
  return es;
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_hermitian())
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  return m.dim() == 2 ? eig_hermitian_2x2(m) : eig_hermitian_jacobi(m);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return eig_hermitian(m).values;
}

ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m) {
  if (!m.is_hermitian())
    throw std::invalid_argument("mat_sqrt_psd: matrix is not Hermitian");

  if (m.dim() == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double disc = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    double lo = mean - disc;
    const double hi = mean + disc;
    if (lo < psd_floor)
      throw std::invalid_argument("mat_sqrt_psd: negative eigenvalue beyond PSD slack");
    lo = std::max(lo, 0.0);
    const double sh = std::sqrt(hi), sl = std::sqrt(lo);
    if (disc < 1e-300) {
      ComplexMatrix out = identity2();
      return std::sqrt(std::max(mean, 0.0)) * out;
    }
    // sqrt(M) = alpha*I + beta*(M - mean*I)/disc with sqrt eigenvalues alpha +- beta
    const double alpha = 0.5 * (sh + sl);
    const double beta = 0.5 * (sh - sl);
    ComplexMatrix out = (beta / disc) * (m - mean * identity2());
    out += alpha * identity2();
    return out;
  }

  EigenSystem es = eig_hermitian(m);
  const int n = m.dim();
  for (double lam : es.values)
    if (lam < psd_floor)
      throw std::invalid_argument("mat_sqrt_psd: negative eigenvalue beyond PSD slack");
  ComplexMatrix out(n);
  for (int k = 0; k < n; ++k) {
    const double s = std::sqrt(std::max(es.values[k], 0.0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out(r, c) += s * es.vectors(r, k) * std::conj(es.vectors(c, k));
  }
  return out;
}

}  // namespace ssqn
