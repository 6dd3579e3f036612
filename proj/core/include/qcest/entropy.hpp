#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qcest/bloch.hpp"

namespace qcest {

/// Hermitian, unit-trace, positive-semidefinite matrix, stored row-major.
struct DensityMatrix {
  int dim;
  std::vector<std::complex<double>> entries;

  std::complex<double>& at(int row, int col) { return entries[row * dim + col]; }
  const std::complex<double>& at(int row, int col) const { return entries[row * dim + col]; }
};

/// -sum_i lambda_i log2 lambda_i over the eigenvalues, with 0 log 0 := 0.
/// Validates the DensityMatrix invariants (Hermitian and unit trace within
/// 1e-12, eigenvalues >= -1e-10) and throws std::domain_error on violation;
/// small negative eigenvalues are clipped to zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// Phase average of the circle-encoded state |Psi_{n,m}(theta, .)>: diagonal
/// in the encoding basis with entries N_p(theta)^2 (off-diagonal phases
/// average to zero). Returned in that basis as an (n+m+1)-dim matrix.
DensityMatrix circle_average_state(int n, int m, double theta);

/// Full-sphere average of the parallel (n=2, m=0) or anti-parallel (n=m=1)
/// two-qubit encoding, in the computational basis, by Gauss-Legendre
/// quadrature in cos theta times uniform quadrature in phi. Supported
/// theta_order values: 32, 64, 128.
DensityMatrix sphere_average_state(PairKind kind, int theta_order = 64, int phi_order = 64);

/// Average-state entropies of the two ensembles showing that a better
/// distinguished ensemble can carry less entropy: an orthogonal pair with
/// biased weights versus an equal mixture of |0> and (|0>+|1>)/sqrt2.
/// Returns (entropy of the orthogonal ensemble, entropy of the overlapping
/// ensemble); the second always exceeds the first.
std::pair<double, double> counterexample_entropies();

}  // namespace qcest
