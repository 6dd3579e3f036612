#pragma once

namespace qcest {

/// Optimal average fidelity for estimating a qubit on the circle of
/// colatitude theta when |psi>^n x |psi_perp>^m is supplied:
/// (1 + cos^2 t)/2 + (sin^2 t / 2) * sum_{p=1..n+m} N_{p-1} N_p.
double fmax_nm(int n, int m, double theta);

/// Equatorial n-copy optimum of Derka, Buzek and Ekert:
/// 1/2 + 2^{-(n+1)} sum_{i=0..n-1} sqrt(C(n,i) C(n,i+1)).
/// Equals fmax_nm(n, 0, pi/2); kept as an independent cross-check.
double derka_equatorial(int n);

/// Optimal average fidelity for |psi(theta,phi)> x |psi(theta+theta0,phi)>:
/// 1 - sin^2 t / 2 + (sin^2 t cos(t0/2) / 2) * N(t, t0).
double fmax_two_circle(double theta, double theta0);

/// Stationarity check of the two-circle optimum along theta0, at theta0 = 0:
/// the theta0-derivative of the squared phase-carrying weight
/// cos^2(theta0/2) N^2(t, theta0), which is sin(2t)/4 there. It is a positive
/// multiple of d fmax_two_circle / d theta0 wherever the weight is nonzero,
/// so both vanish exactly at t in {0, pi/2, pi}.
double d_fmax_two_circle_at_zero(double theta);

/// The same stationarity check at theta0 = pi - 2t: -(1/2) cos^2 t sin(2t).
double d_fmax_two_circle_at_antiparallel(double theta);

/// Optimal average fidelity on two diametrically opposite circles, the same
/// for the parallel and anti-parallel encodings: (1/2)(1 + sin^3 t / sqrt 2).
double fmax_opposite(double theta);

/// The published dimension-4 Fourier objective for the anti-parallel
/// opposite-circle ensemble, as a function of the free estimated phases:
/// (1/2)[1 + (sin^3 t / 16)(2 sqrt2 sin(pi/4 - phi2) - 4 cos phi3 + 2 sin phi4)].
/// Agrees with the direct evaluator whenever cos(phi4) == 0 (in particular at
/// the stationary phases phi2 = 7pi/4, phi3 = pi, phi4 = pi/2); see the tests
/// for the discrepancy elsewhere.
double fourier4_objective(double theta, double phi2, double phi3, double phi4);

/// Average fidelity of the two-qubit local-measurement protocol:
/// (1 + cos^2 t)/2 + sin^3 t / (2 sqrt 2). Equals fmax_nm(2, 0, theta).
double locc_closed_form(double theta);

}  // namespace qcest
