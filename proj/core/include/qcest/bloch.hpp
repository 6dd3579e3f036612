#pragma once

#include <array>
#include <complex>

namespace qcest {

/// A pure qubit cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, identified by its
/// point on the Bloch sphere. Global phase is not represented; the coefficient
/// on |0> is always real and nonnegative.
struct PureQubit {
  double theta;  ///< colatitude in [0, pi]
  double phi;    ///< longitude, canonicalized into [0, 2pi) on construction

  PureQubit(double theta, double phi);
};

/// Unit vector on the Bloch sphere.
struct BlochVector {
  double x;
  double y;
  double z;
};

/// Whether a two-qubit pair encodes |psi>|psi> or |psi>|psi_perp>.
enum class PairKind { parallel, antiparallel };

/// Two-component amplitude vector of a pure qubit.
std::array<std::complex<double>, 2> amplitudes(const PureQubit& q);

/// (sin t cos p, sin t sin p, cos t).
BlochVector bloch_vector(const PureQubit& q);

/// The qubit with the antipodal Bloch vector: (pi - theta, pi + phi).
PureQubit orthogonal(const PureQubit& q);

/// Reflection through the equatorial plane, (x, y, z) -> (x, y, -z).
BlochVector mirror(const BlochVector& v);

/// |<a|b>|^2 = (1 + n_a . n_b) / 2. Symmetric in its arguments.
double overlap_score(const PureQubit& a, const PureQubit& b);

/// Binary Shannon entropy in bits, with 0 log 0 := 0.
/// Throws std::domain_error for x outside [0, 1].
double binary_entropy(double x);

}  // namespace qcest
