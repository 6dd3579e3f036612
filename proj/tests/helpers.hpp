#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qcest/bloch.hpp"

namespace qcest::testing {

inline constexpr double pi = std::numbers::pi;

inline std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) {
    xs[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  }
  return xs;
}

/// points interior samples of (lo, hi), midpoint-placed.
inline std::vector<double> open_grid(double lo, double hi, int points) {
  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) xs[i] = lo + (hi - lo) * (i + 0.5) / points;
  return xs;
}

inline PureQubit random_qubit(std::mt19937_64& eng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return PureQubit(std::acos(1.0 - 2.0 * u(eng)), 2.0 * pi * u(eng));
}

}  // namespace qcest::testing
