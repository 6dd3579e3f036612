#include "qcest/formulas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcest/encoding.hpp"

namespace qcest {

double fmax_nm(int n, int m, double theta) {
  const auto w = encoding_weights(n, m, theta);  // validates the domain
  double cross = 0.0;
  for (int p = 1; p <= n + m; ++p) cross += w[p - 1] * w[p];
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  return 0.5 * (1.0 + ct * ct) + 0.5 * st * st * cross;
}

double derka_equatorial(int n) {
  if (n < 1 || n > kMaxQubits) throw std::domain_error("derka_equatorial: need 1 <= n <= 20");
  double sum = 0.0;
  for (int i = 0; i + 1 <= n; ++i) sum += std::sqrt(binomial(n, i) * binomial(n, i + 1));
  return 0.5 + std::ldexp(sum, -(n + 1));
}

double fmax_two_circle(double theta, double theta0) {
  const auto basis = two_circle_basis(theta, theta0);  // validates the domain
  const double st = std::sin(theta);
  return 1.0 - 0.5 * st * st +
         0.5 * st * st * std::cos(theta0 / 2.0) * basis.n_factor;
}

double d_fmax_two_circle_at_zero(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("d_fmax_two_circle_at_zero: theta must lie in [0, pi]");
  }
  return std::sin(2.0 * theta) / 4.0;
}

double d_fmax_two_circle_at_antiparallel(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("d_fmax_two_circle_at_antiparallel: theta must lie in [0, pi]");
  }
  const double ct = std::cos(theta);
  return -0.5 * ct * ct * std::sin(2.0 * theta);
}

double fmax_opposite(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("fmax_opposite: theta must lie in [0, pi]");
  }
  const double st = std::sin(theta);
  return 0.5 * (1.0 + st * st * st / std::numbers::sqrt2);
}

double fourier4_objective(double theta, double phi2, double phi3, double phi4) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("fourier4_objective: theta must lie in [0, pi]");
  }
  const double st = std::sin(theta);
  const double bracket = 2.0 * std::numbers::sqrt2 * std::sin(std::numbers::pi / 4.0 - phi2) -
                         4.0 * std::cos(phi3) + 2.0 * std::sin(phi4);
  return 0.5 * (1.0 + st * st * st / 16.0 * bracket);
}

double locc_closed_form(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("locc_closed_form: theta must lie in [0, pi]");
  }
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  return 0.5 * (1.0 + ct * ct) + st * st * st / (2.0 * std::numbers::sqrt2);
}

}  // namespace qcest
