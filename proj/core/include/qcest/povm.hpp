#pragma once

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "qcest/bloch.hpp"

namespace qcest {

/// One rank-one POVM element C P[v] with positive weight C and unit
/// coefficient vector v over an orthonormal span basis.
struct PovmElement {
  double weight;
  std::vector<std::complex<double>> coeffs;
};

/// A finite rank-one POVM over an N-dimensional span. Completeness means
/// sum_r C_r v_r v_r^dagger == identity on the span.
struct Povm {
  int dim;
  std::vector<PovmElement> elements;
};

/// A POVM together with the estimated phase phi_r assigned to each outcome;
/// the estimated qubit for outcome r is psi(theta, phi_r) on the target circle.
struct Strategy {
  Povm povm;
  std::vector<double> estimated_phis;
};

/// Qubit on the circle of colatitude theta, supplied as
/// |psi(theta,phi)>^n x |psi_perp(theta,phi)>^m with phi uniform.
struct SingleCircle {
  int n;
  int m;
  double theta;
};

/// Qubit on the circle theta, supplied as |psi(theta,phi)> x |psi(theta+theta0,phi)>.
struct TwoCircle {
  double theta;
  double theta0;
};

/// Qubit uniform on the union of the circles theta and pi - theta, supplied
/// as a parallel or anti-parallel pair.
struct OppositeCircles {
  double theta;
  PairKind kind;
};

using Scenario = std::variant<SingleCircle, TwoCircle, OppositeCircles>;

/// Span dimension of the supplied ensemble: n+m+1, 3, or 3/4.
int scenario_dim(const Scenario& sc);

/// Closed-form optimal average fidelity for the scenario.
double scenario_bound(const Scenario& sc);

/// Deviations of a Povm from its three structural constraints.
struct ValidationReport {
  bool weight_positivity;              ///< all C_r > 0
  double max_norm_deviation;           ///< max_r | ||v_r|| - 1 |
  double max_completeness_deviation;   ///< max_jk | sum_r C_r v_jr v_kr^* - delta_jk |
  bool verdict;                        ///< all deviations within 1e-10
};

ValidationReport validate_povm(const Povm& p);

/// d elements with C_r = 1 and coefficients (1/sqrt d) exp(2 pi i p r / d).
Povm fourier_povm(int d);

/// The optimal single-circle strategy: the (n+m+1)-dimensional Fourier basis
/// with element phases exp[2 pi i (n-m-p) r / (n+m+1)] over the encoding
/// basis, and estimated phases phi_r = 2 pi r / (n+m+1).
Strategy fourier_strategy_single_circle(int n, int m, double theta);

/// The optimal two-circle strategy: Fourier-3 POVM over {|00>, |11>, chi}
/// with estimated phases (0, 4pi/3, 2pi/3).
Strategy two_circle_strategy(double theta, double theta0);

/// The optimal parallel strategy on opposite circles: a dimension-3 discrete
/// Fourier POVM over {|00>, |11>, (|01>+|10>)/sqrt2}, phases (0, 2pi/3, 4pi/3).
Strategy opposite_parallel_strategy(double theta);

/// The optimal anti-parallel strategy on opposite circles: four elements over
/// {|00>, |11>, |01>, |10>} patterned on the dimension-4 Haar transform,
/// phases (pi/2, 3pi/2, 0, pi).
Strategy opposite_antiparallel_strategy(double theta);

/// A dimension-4 discrete Fourier POVM over {|00>, |11>, |01>, |10>} with the
/// given estimated phases. Suboptimal for the anti-parallel ensemble at every
/// choice of phases.
Strategy fourier4_antiparallel_strategy(double phi1, double phi2, double phi3,
                                        double phi4);

/// count x dim complex Gaussian matrix, columns orthonormalized; row r gives
/// an element with weight = squared row norm and coefficients = unit row.
/// Complete by construction. Requires count >= dim.
Povm random_povm(int dim, int count, std::uint64_t seed);

/// Exact ensemble-averaged fidelity of a strategy, by uniform periodic
/// quadrature over the supply phase (exact: the integrand is a trigonometric
/// polynomial). Throws std::invalid_argument on a span dimension mismatch.
double average_fidelity(const Strategy& s, const Scenario& sc);

struct McEstimate {
  double mean;
  double std_error;
};

/// Unbiased Monte Carlo estimate of average_fidelity: uniform supply phase,
/// Born-rule outcome sampling, per-outcome score accumulation.
McEstimate monte_carlo_fidelity(const Strategy& s, const Scenario& sc,
                                std::int64_t samples, std::uint64_t seed);

struct BoundReport {
  double max_found;
  double bound;
  double margin;  ///< bound - max_found
};

/// Samples `trials` random POVMs (count in [dim, 2 dim]) with hill-climbed
/// estimated phases and reports the best fidelity found against the
/// closed-form bound.
BoundReport certify_bound(const Scenario& sc, int trials, std::uint64_t seed);

/// Coordinate-wise refinement of the estimated phases (POVM fixed): each
/// phase is line-searched by a coarse periodic scan plus golden-section
/// refinement; sweeps stop when a full sweep improves by less than 1e-12 or
/// after `iterations` sweeps. The result never scores below the input.
Strategy hill_climb_phases(const Strategy& s, const Scenario& sc, int iterations,
                           std::uint64_t seed);

namespace detail {
/// average_fidelity with an explicit quadrature node count, for verifying
/// that the default order is already exact.
double average_fidelity_with_nodes(const Strategy& s, const Scenario& sc, int nodes);
}  // namespace detail

}  // namespace qcest
