#pragma once

#include <array>
#include <cstdint>

#include "qcest/povm.hpp"

namespace qcest {

/// Result of one run of the two-qubit local protocol: the first qubit is
/// measured along x, the second along y, and the outcome pair selects the
/// estimated phase from {pi/4, 3pi/4, 5pi/4, 7pi/4}.
struct LoccOutcome {
  int first;            ///< +1 for (|0>+|1>)/sqrt2, -1 for (|0>-|1>)/sqrt2
  int second;           ///< +1 for (|0>+i|1>)/sqrt2, -1 for (|0>-i|1>)/sqrt2
  double estimated_phi;
};

/// Joint probabilities (1/4)(1 +- sin t cos p)(1 +- sin t sin p) of the four
/// outcome pairs, ordered (+,+), (+,-), (-,+), (-,-). They sum to 1.
std::array<double, 4> locc_branch_probabilities(double theta, double phi);

/// Samples one protocol run. The protocol never reads phi directly; it enters
/// only through the outcome statistics.
LoccOutcome locc_run(double theta, double phi, std::uint64_t seed);

/// Exact average fidelity of the protocol over the circle, by exact periodic
/// quadrature. Equals (1 + cos^2 t)/2 + sin^3 t / (2 sqrt 2).
double locc_average_fidelity_exact(double theta);

/// Monte Carlo estimate: uniform phase draws, one protocol run per draw.
McEstimate locc_average_fidelity_mc(double theta, std::int64_t samples, std::uint64_t seed);

}  // namespace qcest
