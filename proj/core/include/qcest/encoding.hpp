#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace qcest {

/// Largest total qubit count for which exact integer binomials are kept.
inline constexpr int kMaxQubits = 20;

/// Largest register for which dense 2^n coefficient vectors are produced.
/// Beyond this the span-basis representation (length n+m+1) must be used.
inline constexpr int kMaxDenseQubits = 12;

/// C(n, k) computed from exact integer arithmetic, n <= kMaxQubits.
double binomial(int n, int k);

/// Symmetric superposition of all n-bit strings with exactly j zeros, each
/// with amplitude 1 / sqrt(C(n, j)). Basis strings x1...xn are ordered as
/// big-endian integers (x1 is the most significant bit).
struct DickeState {
  int n;
  int j;
  /// (basis index, amplitude) pairs sorted by index; exactly C(n, j) entries.
  std::vector<std::pair<std::uint64_t, double>> amplitudes;

  /// Dense length-2^n expansion (n <= kMaxDenseQubits).
  std::vector<double> dense() const;
};

DickeState dicke(int n, int j);

/// One basis vector of the span of circle-encoded states, expressed over the
/// Dicke product states |S_k^(n)> x |S_l^(m)> with k + l = p.
struct SpanBasisVector {
  int p;
  std::vector<std::array<int, 2>> dicke_pairs;  ///< (k, l) with k + l == p
  std::vector<double> amplitudes;               ///< unit vector, same order
};

/// Orthonormal basis of the (n+m+1)-dimensional span of
/// |psi(theta,phi)>^n x |psi_perp(theta,phi)>^m over phi, together with the
/// phase-independent weights of the encoded state in that basis.
struct EncodingBasis {
  int n;
  int m;
  double theta;
  std::vector<double> weights;  ///< N_p >= 0 for p = 0..n+m; sum of squares 1
  std::vector<SpanBasisVector> basis;  ///< entries only for weights[p] > 0

  /// Dense 2^(n+m) expansion of basis vector p (n + m <= kMaxDenseQubits).
  /// Throws std::domain_error if weights[p] == 0 (vector omitted).
  std::vector<double> dense(int p) const;
};

EncodingBasis encoding_basis(int n, int m, double theta);

/// Just the weights N_p of encoding_basis; valid for any n + m <= kMaxQubits.
std::vector<double> encoding_weights(int n, int m, double theta);

/// |psi(theta,phi)>^n x |psi(pi-theta,pi+phi)>^m as a dense coefficient
/// vector over the 2^(n+m) computational product basis (n+m <= kMaxDenseQubits).
std::vector<std::complex<double>> encode_supplied_state(int n, int m, double theta,
                                                        double phi);

/// The phase-carrying third basis vector of the two-circle span together with
/// its weight. chi is supported on |01> and |10> only; when n_factor == 0
/// (both circles at a pole) the span degenerates and chi is omitted.
struct TwoCircleBasis {
  double theta;
  double theta0;
  double n_factor;
  bool degenerate;
  std::array<double, 4> chi;  ///< components over |00>,|01>,|10>,|11>
};

TwoCircleBasis two_circle_basis(double theta, double theta0);

/// |psi(theta,phi)> x |psi(theta+theta0,phi)> over |00>,|01>,|10>,|11>.
std::array<std::complex<double>, 4> two_circle_supplied_state(double theta, double theta0,
                                                              double phi);

}  // namespace qcest
