#include "qcest/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcest/bloch.hpp"

namespace qcest {

namespace {

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_counts(int n, int m) {
  if (n < 0 || m < 0 || n + m < 1) {
    throw std::domain_error("encoding: need n, m >= 0 with n + m >= 1");
  }
  if (n + m > kMaxQubits) {
    throw std::domain_error("encoding: n + m exceeds the supported qubit count");
  }
}

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error("encoding: theta must lie in [0, pi]");
  }
}

void check_two_circle(double theta, double theta0) {
  check_theta(theta);
  if (!(theta0 >= -theta && theta0 <= std::numbers::pi - theta)) {
    throw std::domain_error("encoding: theta0 must lie in [-theta, pi - theta]");
  }
}

}  // namespace

double binomial(int n, int k) {
  if (n < 0 || n > kMaxQubits || k < 0 || k > n) {
    throw std::domain_error("binomial: need 0 <= k <= n <= 20");
  }
  // Pascal triangle in exact 64-bit integers; C(20,10) = 184756 fits easily.
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxQubits + 1>, kMaxQubits + 1> t{};
    for (int i = 0; i <= kMaxQubits; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  return static_cast<double>(table[n][k]);
}

DickeState dicke(int n, int j) {
  if (n < 1 || n > kMaxQubits) throw std::domain_error("dicke: need 1 <= n <= 20");
  if (j < 0 || j > n) throw std::domain_error("dicke: need 0 <= j <= n");
  DickeState d{n, j, {}};
  const double amp = 1.0 / std::sqrt(binomial(n, j));
  // Strings with j zeros = indices whose n-bit popcount is n - j.
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0; idx < limit; ++idx) {
    if (std::popcount(idx) == n - j) d.amplitudes.emplace_back(idx, amp);
  }
  return d;
}

std::vector<double> DickeState::dense() const {
  if (n > kMaxDenseQubits) throw std::domain_error("DickeState::dense: register too large");
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (const auto& [idx, a] : amplitudes) v[idx] = a;
  return v;
}

std::vector<double> encoding_weights(int n, int m, double theta) {
  check_counts(n, m);
  check_theta(theta);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  std::vector<double> w(n + m + 1, 0.0);
  for (int p = 0; p <= n + m; ++p) {
    double sum = 0.0;
    for (int k = std::max(0, p - m); k <= std::min(n, p); ++k) {
      const int l = p - k;
      sum += binomial(n, k) * binomial(m, l) * ipow(c, 2 * (m - l + k)) *
             ipow(s, 2 * (n + l - k));
    }
    w[p] = std::sqrt(sum);
  }
  return w;
}

EncodingBasis encoding_basis(int n, int m, double theta) {
  EncodingBasis b{n, m, theta, encoding_weights(n, m, theta), {}};
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  for (int p = 0; p <= n + m; ++p) {
    if (b.weights[p] == 0.0) continue;  // weight-zero subspace, only at poles
    SpanBasisVector xi{p, {}, {}};
    for (int k = std::max(0, p - m); k <= std::min(n, p); ++k) {
      const int l = p - k;
      const double sign = ((m - l) % 2 == 0) ? 1.0 : -1.0;
      const double amp = sign * std::sqrt(binomial(n, k) * binomial(m, l)) *
                         ipow(c, m - l + k) * ipow(s, n + l - k) / b.weights[p];
      xi.dicke_pairs.push_back({k, l});
      xi.amplitudes.push_back(amp);
    }
    b.basis.push_back(std::move(xi));
  }
  return b;
}

std::vector<double> EncodingBasis::dense(int p) const {
  if (n + m > kMaxDenseQubits) {
    throw std::domain_error("EncodingBasis::dense: register too large");
  }
  // Amplitude list of a Dicke state, with the empty register as the scalar 1.
  const auto sparse = [](int count, int zeros) {
    return count > 0 ? dicke(count, zeros).amplitudes
                     : std::vector<std::pair<std::uint64_t, double>>{{0, 1.0}};
  };
  for (const auto& xi : basis) {
    if (xi.p != p) continue;
    std::vector<double> v(std::size_t{1} << (n + m), 0.0);
    for (std::size_t t = 0; t < xi.dicke_pairs.size(); ++t) {
      const auto [k, l] = xi.dicke_pairs[t];
      // Tensor index of |S_k^(n)> x |S_l^(m)>: first register is high bits.
      for (const auto& [il, al] : sparse(n, k)) {
        for (const auto& [ir, ar] : sparse(m, l)) {
          v[(il << m) | ir] += xi.amplitudes[t] * al * ar;
        }
      }
    }
    return v;
  }
  throw std::domain_error("EncodingBasis::dense: basis vector omitted (zero weight)");
}

std::vector<std::complex<double>> encode_supplied_state(int n, int m, double theta,
                                                        double phi) {
  check_counts(n, m);
  check_theta(theta);
  if (n + m > kMaxDenseQubits) {
    throw std::domain_error("encode_supplied_state: register too large");
  }
  const auto a = amplitudes(PureQubit(theta, phi));
  const auto ap = amplitudes(orthogonal(PureQubit(theta, phi)));
  const int total = n + m;
  std::vector<std::complex<double>> v(std::size_t{1} << total);
  for (std::uint64_t idx = 0; idx < v.size(); ++idx) {
    std::complex<double> amp = 1.0;
    for (int q = 0; q < total; ++q) {
      const int bit = (idx >> (total - 1 - q)) & 1;
      amp *= (q < n) ? a[bit] : ap[bit];
    }
    v[idx] = amp;
  }
  return v;
}

TwoCircleBasis two_circle_basis(double theta, double theta0) {
  check_two_circle(theta, theta0);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const double cp = std::cos((theta + theta0) / 2.0);
  const double sp = std::sin((theta + theta0) / 2.0);
  TwoCircleBasis b{theta, theta0, 0.0, false, {0.0, 0.0, 0.0, 0.0}};
  b.n_factor = std::sqrt(c * c * sp * sp + s * s * cp * cp);
  if (b.n_factor == 0.0) {
    b.degenerate = true;
    return b;
  }
  b.chi[1] = c * sp / b.n_factor;  // |01>
  b.chi[2] = s * cp / b.n_factor;  // |10>
  return b;
}

std::array<std::complex<double>, 4> two_circle_supplied_state(double theta, double theta0,
                                                              double phi) {
  check_two_circle(theta, theta0);
  const auto a = amplitudes(PureQubit(theta, phi));
  // theta + theta0 can round a hair past pi at the domain boundary.
  const auto b = amplitudes(PureQubit(std::clamp(theta + theta0, 0.0, std::numbers::pi), phi));
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

}  // namespace qcest
