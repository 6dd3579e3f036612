#include "qcest/locc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qcest/bloch.hpp"

namespace qcest {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Estimated phases keyed by (first, second) outcome signs.
constexpr std::array<double, 4> kEstimates = {
    std::numbers::pi / 4.0,        // (+,+)
    7.0 * std::numbers::pi / 4.0,  // (+,-)
    3.0 * std::numbers::pi / 4.0,  // (-,+)
    5.0 * std::numbers::pi / 4.0,  // (-,-)
};

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("locc: theta must lie in [0, pi]");
  }
}

LoccOutcome sample_outcome(double theta, double phi, std::mt19937_64& eng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double st = std::sin(theta);
  const double p_first = 0.5 * (1.0 + st * std::cos(phi));
  const double p_second = 0.5 * (1.0 + st * std::sin(phi));
  const int first = uniform(eng) < p_first ? +1 : -1;
  const int second = uniform(eng) < p_second ? +1 : -1;
  const int branch = (first > 0 ? 0 : 2) + (second > 0 ? 0 : 1);
  return {first, second, kEstimates[branch]};
}

}  // namespace

std::array<double, 4> locc_branch_probabilities(double theta, double phi) {
  check_theta(theta);
  const double st = std::sin(theta);
  const double px = st * std::cos(phi);
  const double py = st * std::sin(phi);
  return {
      0.25 * (1.0 + px) * (1.0 + py),
      0.25 * (1.0 + px) * (1.0 - py),
      0.25 * (1.0 - px) * (1.0 + py),
      0.25 * (1.0 - px) * (1.0 - py),
  };
}

LoccOutcome locc_run(double theta, double phi, std::uint64_t seed) {
  check_theta(theta);
  std::mt19937_64 eng(seed);
  return sample_outcome(theta, phi, eng);
}

double locc_average_fidelity_exact(double theta) {
  check_theta(theta);
  // The integrand is a trigonometric polynomial of degree <= 3 in phi.
  constexpr int nodes = 10;
  double total = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double phi = two_pi * k / nodes;
    const auto probs = locc_branch_probabilities(theta, phi);
    for (int b = 0; b < 4; ++b) {
      total += probs[b] * overlap_score(PureQubit(theta, kEstimates[b]), PureQubit(theta, phi));
    }
  }
  return total / nodes;
}

McEstimate locc_average_fidelity_mc(double theta, std::int64_t samples, std::uint64_t seed) {
  check_theta(theta);
  if (samples < 1) throw std::domain_error("locc_average_fidelity_mc: need samples >= 1");
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double phi = two_pi * uniform(eng);
    const LoccOutcome out = sample_outcome(theta, phi, eng);
    const double score = overlap_score(PureQubit(theta, out.estimated_phi), PureQubit(theta, phi));
    sum += score;
    sumsq += score * score;
  }
  const double mean = sum / samples;
  double se = 0.0;
  if (samples > 1) {
    const double var = std::max(0.0, (sumsq - samples * mean * mean) / (samples - 1));
    se = std::sqrt(var / samples);
  }
  return {mean, se};
}

}  // namespace qcest
