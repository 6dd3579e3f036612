#include "qcest/bloch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcest {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}
}  // namespace

PureQubit::PureQubit(double theta_, double phi_) : theta(theta_), phi(wrap_phase(phi_)) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("PureQubit: theta must lie in [0, pi]");
  }
}

std::array<std::complex<double>, 2> amplitudes(const PureQubit& q) {
  return {std::complex<double>(std::cos(q.theta / 2.0), 0.0),
          std::polar(std::sin(q.theta / 2.0), q.phi)};
}

BlochVector bloch_vector(const PureQubit& q) {
  const double st = std::sin(q.theta);
  return {st * std::cos(q.phi), st * std::sin(q.phi), std::cos(q.theta)};
}

PureQubit orthogonal(const PureQubit& q) {
  return PureQubit(std::numbers::pi - q.theta, std::numbers::pi + q.phi);
}

BlochVector mirror(const BlochVector& v) { return {v.x, v.y, -v.z}; }

double overlap_score(const PureQubit& a, const PureQubit& b) {
  const BlochVector na = bloch_vector(a);
  const BlochVector nb = bloch_vector(b);
  return 0.5 * (1.0 + na.x * nb.x + na.y * nb.y + na.z * nb.z);
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("binary_entropy: argument must lie in [0, 1]");
  }
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

}  // namespace qcest
