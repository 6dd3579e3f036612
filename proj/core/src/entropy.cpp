#include "qcest/entropy.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcest/encoding.hpp"

namespace qcest {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

Eigen::MatrixXcd to_eigen(const DensityMatrix& rho) {
  Eigen::MatrixXcd m(rho.dim, rho.dim);
  for (int r = 0; r < rho.dim; ++r) {
    for (int c = 0; c < rho.dim; ++c) m(r, c) = rho.at(r, c);
  }
  return m;
}

// Full (positive and negative) Gauss-Legendre nodes on [-1, 1].
template <unsigned Order>
void gauss_nodes(std::vector<double>& xs, std::vector<double>& ws) {
  using Rule = boost::math::quadrature::gauss<double, Order>;
  for (std::size_t i = 0; i < Rule::abscissa().size(); ++i) {
    const double x = Rule::abscissa()[i];
    const double w = Rule::weights()[i];
    if (x == 0.0) {
      xs.push_back(0.0);
      ws.push_back(w);
    } else {
      xs.push_back(x);
      ws.push_back(w);
      xs.push_back(-x);
      ws.push_back(w);
    }
  }
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  if (rho.dim < 1 || rho.entries.size() != static_cast<std::size_t>(rho.dim) * rho.dim) {
    throw std::domain_error("von_neumann_entropy: malformed matrix");
  }
  const Eigen::MatrixXcd m = to_eigen(rho);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::domain_error("von_neumann_entropy: matrix is not Hermitian");
  }
  if (std::abs(m.trace() - std::complex<double>(1.0)) > 1e-12) {
    throw std::domain_error("von_neumann_entropy: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (int i = 0; i < rho.dim; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda < -1e-10) {
      throw std::domain_error("von_neumann_entropy: negative eigenvalue");
    }
    if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

DensityMatrix circle_average_state(int n, int m, double theta) {
  const auto weights = encoding_weights(n, m, theta);
  const int d = n + m + 1;
  DensityMatrix rho{d, std::vector<std::complex<double>>(static_cast<std::size_t>(d) * d, 0.0)};
  for (int p = 0; p < d; ++p) rho.at(p, p) = weights[p] * weights[p];
  return rho;
}

DensityMatrix sphere_average_state(PairKind kind, int theta_order, int phi_order) {
  if (phi_order < 1) throw std::domain_error("sphere_average_state: need phi_order >= 1");
  std::vector<double> xs, ws;
  switch (theta_order) {
    case 32: gauss_nodes<32>(xs, ws); break;
    case 64: gauss_nodes<64>(xs, ws); break;
    case 128: gauss_nodes<128>(xs, ws); break;
    default:
      throw std::domain_error("sphere_average_state: theta_order must be 32, 64 or 128");
  }
  DensityMatrix rho{4, std::vector<std::complex<double>>(16, 0.0)};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double theta = std::acos(xs[i]);
    for (int k = 0; k < phi_order; ++k) {
      const double phi = two_pi * k / phi_order;
      const PureQubit first(theta, phi);
      const auto a = amplitudes(first);
      const auto b =
          kind == PairKind::parallel ? a : amplitudes(orthogonal(first));
      const std::array<std::complex<double>, 4> psi = {a[0] * b[0], a[0] * b[1], a[1] * b[0],
                                                       a[1] * b[1]};
      const double w = 0.5 * ws[i] / phi_order;
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) rho.at(r, c) += w * psi[r] * std::conj(psi[c]);
      }
    }
  }
  return rho;
}

std::pair<double, double> counterexample_entropies() {
  const double bias = (std::numbers::sqrt2 + 0.5) / 4.0;
  const double s_orthogonal = binary_entropy(0.5 - bias);
  // Equal mixture of |0> and (|0>+|1>)/sqrt2 has eigenvalues
  // 1/2 +- sqrt(2)/4, so its entropy is H(1/2 + sqrt(2)/4).
  const double s_overlapping = binary_entropy(0.5 + std::numbers::sqrt2 / 4.0);
  if (!(s_overlapping > s_orthogonal)) {
    throw std::logic_error("counterexample_entropies: expected ordering violated");
  }
  return {s_orthogonal, s_overlapping};
}

}  // namespace qcest
