#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "qcest/bloch.hpp"
#include "qcest/encoding.hpp"

using namespace qcest;
using qcest::testing::pi;

namespace {

std::vector<std::complex<double>> reconstruct(const EncodingBasis& b, double phi) {
  std::vector<std::complex<double>> v(std::size_t{1} << (b.n + b.m), 0.0);
  for (int p = 0; p <= b.n + b.m; ++p) {
    if (b.weights[p] == 0.0) continue;
    const auto xi = b.dense(p);
    const auto factor = std::polar(b.weights[p], (b.n + b.m - p) * phi);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += factor * xi[i];
  }
  return v;
}

double dot_real(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("dicke states enumerate the right strings") {
  const auto d10 = dicke(1, 0);  // |1>
  REQUIRE(d10.amplitudes.size() == 1);
  CHECK(d10.amplitudes[0].first == 1);
  CHECK(d10.amplitudes[0].second == doctest::Approx(1.0));

  const auto d21 = dicke(2, 1);  // (|01> + |10>)/sqrt2
  REQUIRE(d21.amplitudes.size() == 2);
  CHECK(d21.amplitudes[0].first == 1);
  CHECK(d21.amplitudes[1].first == 2);
  CHECK(d21.amplitudes[0].second == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));

  const auto d32 = dicke(3, 2);  // (|001> + |010> + |100>)/sqrt3
  REQUIRE(d32.amplitudes.size() == 3);
  CHECK(d32.amplitudes[0].first == 1);
  CHECK(d32.amplitudes[1].first == 2);
  CHECK(d32.amplitudes[2].first == 4);
  CHECK(d32.amplitudes[0].second == doctest::Approx(1.0 / std::numbers::sqrt3).epsilon(1e-15));

  CHECK_THROWS_AS(dicke(2, 3), std::domain_error);
  CHECK_THROWS_AS(dicke(2, -1), std::domain_error);
  CHECK_THROWS_AS(dicke(0, 0), std::domain_error);
}

TEST_CASE("dicke states are normalized and mutually orthogonal") {
  for (int n : {1, 2, 3, 5, 8}) {
    for (int j = 0; j <= n; ++j) {
      const auto d = dicke(n, j);
      CHECK(d.amplitudes.size() == static_cast<std::size_t>(binomial(n, j)));
      double norm2 = 0.0;
      for (const auto& [idx, amp] : d.amplitudes) norm2 += amp * amp;
      CHECK(std::abs(norm2 - 1.0) < 1e-12);
    }
    for (int j = 0; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        CHECK(std::abs(dot_real(dicke(n, j).dense(), dicke(n, k).dense())) < 1e-15);
      }
    }
  }
}

TEST_CASE("encoding weights for small cases") {
  const double theta = 1.1;
  const auto w10 = encoding_weights(1, 0, theta);
  CHECK(w10[0] == doctest::Approx(std::sin(theta / 2)).epsilon(1e-15));
  CHECK(w10[1] == doctest::Approx(std::cos(theta / 2)).epsilon(1e-15));

  const auto w11 = encoding_weights(1, 1, pi / 2);
  CHECK(w11[0] * w11[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(w11[1] * w11[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(w11[2] * w11[2] == doctest::Approx(0.25).epsilon(1e-14));

  const auto w20 = encoding_weights(2, 0, pi / 3);
  CHECK(w20[0] * w20[0] == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(w20[1] * w20[1] == doctest::Approx(6.0 / 16).epsilon(1e-14));
  CHECK(w20[2] * w20[2] == doctest::Approx(9.0 / 16).epsilon(1e-14));

  CHECK_THROWS_AS(encoding_weights(1, 1, -0.1), std::domain_error);
  CHECK_THROWS_AS(encoding_weights(0, 0, 1.0), std::domain_error);
}

TEST_CASE("weights are a unit partition for every n+m <= 8") {
  for (int total = 1; total <= 8; ++total) {
    for (int n = 0; n <= total; ++n) {
      for (double theta : testing::linspace(0.0, pi, 50)) {
        const auto w = encoding_weights(n, total - n, theta);
        double sum = 0.0;
        for (double x : w) {
          CHECK(x >= 0.0);
          sum += x * x;
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("basis vectors are orthonormal and reconstruct the supplied state") {
  std::mt19937_64 eng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto [n, m] : {std::pair{1, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {3, 2}, {2, 3}}) {
    for (int rep = 0; rep < 5; ++rep) {
      const double theta = u(eng) * pi;
      const double phi = u(eng) * 2.0 * pi;
      const auto b = encoding_basis(n, m, theta);

      // Gram matrix of the dense expansions is the identity.
      for (const auto& xi : b.basis) {
        for (const auto& xj : b.basis) {
          const double g = dot_real(b.dense(xi.p), b.dense(xj.p));
          CHECK(std::abs(g - (xi.p == xj.p ? 1.0 : 0.0)) < 1e-10);
        }
      }

      const auto direct = encode_supplied_state(n, m, theta, phi);
      const auto rebuilt = reconstruct(b, phi);
      for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(std::abs(direct[i] - rebuilt[i]) < 1e-10);
      }
    }
  }
}

TEST_CASE("encode_supplied_state small cases") {
  const double theta = 0.9, phi = 2.2;
  const auto one = encode_supplied_state(1, 0, theta, phi);
  CHECK(std::abs(one[0] - std::cos(theta / 2)) < 1e-15);
  CHECK(std::abs(one[1] - std::polar(std::sin(theta / 2), phi)) < 1e-15);

  // <00|psi x psi_perp> = cos(t/2) sin(t/2)
  const auto pair = encode_supplied_state(1, 1, theta, phi);
  CHECK(std::abs(pair[0] - std::cos(theta / 2) * std::sin(theta / 2)) < 1e-15);

  double norm2 = 0.0;
  for (const auto& c : encode_supplied_state(3, 2, theta, phi)) norm2 += std::norm(c);
  CHECK(std::abs(norm2 - 1.0) < 1e-12);

  CHECK_THROWS_AS(encode_supplied_state(7, 6, 1.0, 0.0), std::domain_error);
}

TEST_CASE("two_circle_basis special slices") {
  const double theta = 1.2;
  const auto parallel = two_circle_basis(theta, 0.0);
  CHECK(parallel.n_factor == doctest::Approx(std::sin(theta) / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(parallel.chi[1] == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(parallel.chi[2] == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));

  const auto bottom = two_circle_basis(theta, -theta);
  CHECK(bottom.n_factor == doctest::Approx(std::sin(theta / 2)).epsilon(1e-14));
  CHECK(bottom.chi[1] == doctest::Approx(0.0));
  CHECK(bottom.chi[2] == doctest::Approx(1.0));

  const auto top = two_circle_basis(0.0, 0.7);
  CHECK(top.n_factor == doctest::Approx(std::sin(0.35)).epsilon(1e-14));
  CHECK(top.chi[1] == doctest::Approx(1.0));
  CHECK(top.chi[2] == doctest::Approx(0.0));

  const auto degenerate = two_circle_basis(0.0, 0.0);
  CHECK(degenerate.degenerate);
  CHECK(degenerate.n_factor == 0.0);

  CHECK_THROWS_AS(two_circle_basis(1.0, -1.1), std::domain_error);
  CHECK_THROWS_AS(two_circle_basis(1.0, pi - 0.9), std::domain_error);
}

TEST_CASE("two_circle_basis invariants") {
  std::mt19937_64 eng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 200; ++rep) {
    const double theta = u(eng) * pi;
    const double theta0 = -theta + u(eng) * pi;
    const auto b = two_circle_basis(theta, theta0);
    CHECK(b.chi[0] == 0.0);
    CHECK(b.chi[3] == 0.0);
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const double cp = std::cos((theta + theta0) / 2), sp = std::sin((theta + theta0) / 2);
    CHECK(std::abs(b.n_factor * b.n_factor - (c * c * sp * sp + s * s * cp * cp)) < 1e-12);
    if (!b.degenerate) {
      CHECK(std::abs(b.chi[1] * b.chi[1] + b.chi[2] * b.chi[2] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("two_circle_supplied_state matches both tensor forms") {
  // theta0 = 0 collapses to the parallel pair.
  const double theta = 1.3, phi = 0.8;
  const auto parallel = two_circle_supplied_state(theta, 0.0, phi);
  const auto direct20 = encode_supplied_state(2, 0, theta, phi);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(parallel[i] - direct20[i]) < 1e-14);

  // theta0 = pi - 2 theta puts the second qubit on the mirror circle.
  const auto mirror_pair = two_circle_supplied_state(theta, pi - 2 * theta, phi);
  const auto a = amplitudes(PureQubit(theta, phi));
  const auto b = amplitudes(PureQubit(pi - theta, phi));
  CHECK(std::abs(mirror_pair[0] - a[0] * b[0]) < 1e-14);
  CHECK(std::abs(mirror_pair[1] - a[0] * b[1]) < 1e-14);
  CHECK(std::abs(mirror_pair[2] - a[1] * b[0]) < 1e-14);
  CHECK(std::abs(mirror_pair[3] - a[1] * b[1]) < 1e-14);
}

TEST_CASE("two-circle expansion identity on a grid") {
  for (double theta : testing::open_grid(0.0, pi, 4)) {
    for (double frac : {0.0, 0.3, 0.7, 1.0}) {
      const double theta0 = -theta + frac * pi;
      for (double phi : {0.1, 2.0, 4.4, 5.9}) {
        const auto direct = two_circle_supplied_state(theta, theta0, phi);
        const auto basis = two_circle_basis(theta, theta0);
        const double c = std::cos(theta / 2), s = std::sin(theta / 2);
        const double cp = std::cos((theta + theta0) / 2), sp = std::sin((theta + theta0) / 2);
        std::array<std::complex<double>, 4> expanded = {c * cp, 0.0, 0.0,
                                                        std::polar(s * sp, 2 * phi)};
        if (!basis.degenerate) {
          const auto mid = std::polar(basis.n_factor, phi);
          expanded[1] += mid * basis.chi[1];
          expanded[2] += mid * basis.chi[2];
        }
        for (int i = 0; i < 4; ++i) CHECK(std::abs(direct[i] - expanded[i]) < 1e-12);
      }
    }
  }
}
