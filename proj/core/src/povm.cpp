#include "qcest/povm.hpp"

#include <Eigen/Dense>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "qcest/encoding.hpp"
#include "qcest/formulas.hpp"

namespace qcest {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

void check_theta(double theta, const char* who) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::domain_error(std::string(who) + ": theta must lie in [0, pi]");
  }
}

// Supplied-state coefficients over the scenario span basis, per ensemble
// branch, plus everything needed to score outcomes and to pick an exact
// quadrature order.
class ScenarioEval {
 public:
  explicit ScenarioEval(const Scenario& sc) : sc_(sc) {
    if (const auto* s = std::get_if<SingleCircle>(&sc_)) {
      weights_ = encoding_weights(s->n, s->m, s->theta);
      dim_ = s->n + s->m + 1;
      degree_ = s->n + s->m + 1;
      circle_theta_ = s->theta;
      branches_ = 1;
    } else if (const auto* t = std::get_if<TwoCircle>(&sc_)) {
      two_ = two_circle_basis(t->theta, t->theta0);
      dim_ = 3;
      degree_ = 3;
      circle_theta_ = t->theta;
      branches_ = 1;
    } else {
      const auto& o = std::get<OppositeCircles>(sc_);
      check_theta(o.theta, "OppositeCircles");
      dim_ = o.kind == PairKind::parallel ? 3 : 4;
      degree_ = 3;
      circle_theta_ = o.theta;
      branches_ = 2;
    }
  }

  int dim() const { return dim_; }
  int branches() const { return branches_; }
  double branch_weight() const { return branches_ == 2 ? 0.5 : 1.0; }
  double circle_theta() const { return circle_theta_; }
  int quadrature_nodes() const { return 2 * degree_ + 4; }

  // Score of estimate psi(circle_theta, phi_r) against the branch target
  // psi(t, phi) is A + B cos(phi - phi_r) with t = theta or pi - theta.
  void score_coefficients(int branch, double& a, double& b) const {
    const double t = branch == 0 ? circle_theta_ : std::numbers::pi - circle_theta_;
    a = 0.5 * (1.0 + std::cos(t) * std::cos(circle_theta_));
    b = 0.5 * std::sin(t) * std::sin(circle_theta_);
  }

  void span_state(int branch, double phi, std::vector<std::complex<double>>& out) const {
    out.resize(dim_);
    const std::complex<double> e1 = std::polar(1.0, phi);
    if (const auto* s = std::get_if<SingleCircle>(&sc_)) {
      for (int p = 0; p <= s->n + s->m; ++p) {
        out[p] = std::polar(weights_[p], (s->n + s->m - p) * phi);
      }
      return;
    }
    const std::complex<double> e2 = e1 * e1;
    if (const auto* t = std::get_if<TwoCircle>(&sc_)) {
      const double c = std::cos(t->theta / 2.0), s = std::sin(t->theta / 2.0);
      const double cp = std::cos((t->theta + t->theta0) / 2.0);
      const double sp = std::sin((t->theta + t->theta0) / 2.0);
      out[0] = c * cp;
      out[1] = s * sp * e2;
      out[2] = two_.n_factor * e1;
      return;
    }
    const auto& o = std::get<OppositeCircles>(sc_);
    // The mirror branch swaps cos(theta/2) and sin(theta/2).
    double c = std::cos(o.theta / 2.0), s = std::sin(o.theta / 2.0);
    if (branch == 1) std::swap(c, s);
    if (o.kind == PairKind::parallel) {
      // basis {|00>, |11>, (|01>+|10>)/sqrt2}
      out[0] = c * c;
      out[1] = s * s * e2;
      out[2] = std::numbers::sqrt2 * c * s * e1;
    } else {
      // basis {|00>, |11>, |01>, |10>}
      out[0] = c * s;
      out[1] = -c * s * e2;
      out[2] = -c * c * e1;
      out[3] = s * s * e1;
    }
  }

 private:
  Scenario sc_;
  std::vector<double> weights_;
  TwoCircleBasis two_{};
  int dim_ = 0;
  int degree_ = 0;
  int branches_ = 1;
  double circle_theta_ = 0.0;
};

std::complex<double> projection(const PovmElement& e,
                                const std::vector<std::complex<double>>& state) {
  std::complex<double> dot = 0.0;
  for (std::size_t j = 0; j < state.size(); ++j) dot += std::conj(e.coeffs[j]) * state[j];
  return dot;
}

void check_strategy(const Strategy& s, const ScenarioEval& ev) {
  if (s.povm.dim != ev.dim()) {
    throw std::invalid_argument("strategy POVM dimension does not match the scenario span");
  }
  if (s.estimated_phis.size() != s.povm.elements.size()) {
    throw std::invalid_argument("strategy needs one estimated phase per POVM element");
  }
  for (const auto& e : s.povm.elements) {
    if (static_cast<int>(e.coeffs.size()) != ev.dim()) {
      throw std::invalid_argument("POVM element length does not match the span dimension");
    }
  }
}

// average_fidelity restricted to the estimated phases: exact per-element
// reduction F(phis) = base + sum_r (cx_r cos phi_r + cy_r sin phi_r), used by
// the phase hill climb so that coordinate evaluations cost O(1).
struct PhaseObjective {
  double base = 0.0;
  std::vector<double> cx, cy;

  double operator()(const std::vector<double>& phis) const {
    double f = base;
    for (std::size_t r = 0; r < cx.size(); ++r) {
      f += cx[r] * std::cos(phis[r]) + cy[r] * std::sin(phis[r]);
    }
    return f;
  }

  double coordinate(int r, double phi, double rest) const {
    return rest + cx[r] * std::cos(phi) + cy[r] * std::sin(phi);
  }
};

PhaseObjective make_phase_objective(const Strategy& s, const ScenarioEval& ev) {
  PhaseObjective obj;
  const std::size_t nel = s.povm.elements.size();
  obj.cx.assign(nel, 0.0);
  obj.cy.assign(nel, 0.0);
  const int nodes = ev.quadrature_nodes();
  std::vector<std::complex<double>> state;
  for (int branch = 0; branch < ev.branches(); ++branch) {
    double a, b;
    ev.score_coefficients(branch, a, b);
    const double bw = ev.branch_weight() / nodes;
    for (int k = 0; k < nodes; ++k) {
      const double phi = two_pi * k / nodes;
      ev.span_state(branch, phi, state);
      for (std::size_t r = 0; r < nel; ++r) {
        const auto& e = s.povm.elements[r];
        const double prob = e.weight * std::norm(projection(e, state));
        obj.base += bw * prob * a;
        obj.cx[r] += bw * prob * b * std::cos(phi);
        obj.cy[r] += bw * prob * b * std::sin(phi);
      }
    }
  }
  return obj;
}

}  // namespace

int scenario_dim(const Scenario& sc) {
  if (const auto* s = std::get_if<SingleCircle>(&sc)) return s->n + s->m + 1;
  if (std::holds_alternative<TwoCircle>(sc)) return 3;
  return std::get<OppositeCircles>(sc).kind == PairKind::parallel ? 3 : 4;
}

double scenario_bound(const Scenario& sc) {
  if (const auto* s = std::get_if<SingleCircle>(&sc)) return fmax_nm(s->n, s->m, s->theta);
  if (const auto* t = std::get_if<TwoCircle>(&sc)) return fmax_two_circle(t->theta, t->theta0);
  return fmax_opposite(std::get<OppositeCircles>(sc).theta);
}

ValidationReport validate_povm(const Povm& p) {
  constexpr double tol = 1e-10;
  ValidationReport rep{true, 0.0, 0.0, false};
  for (const auto& e : p.elements) {
    if (!(e.weight > 0.0)) rep.weight_positivity = false;
    if (static_cast<int>(e.coeffs.size()) != p.dim) {
      throw std::invalid_argument("validate_povm: element length does not match dim");
    }
    double norm2 = 0.0;
    for (const auto& c : e.coeffs) norm2 += std::norm(c);
    rep.max_norm_deviation = std::max(rep.max_norm_deviation, std::abs(std::sqrt(norm2) - 1.0));
  }
  for (int j = 0; j < p.dim; ++j) {
    for (int k = 0; k < p.dim; ++k) {
      std::complex<double> g = 0.0;
      for (const auto& e : p.elements) g += e.weight * e.coeffs[j] * std::conj(e.coeffs[k]);
      const double target = j == k ? 1.0 : 0.0;
      rep.max_completeness_deviation =
          std::max(rep.max_completeness_deviation, std::abs(g - target));
    }
  }
  rep.verdict = rep.weight_positivity && rep.max_norm_deviation <= tol &&
                rep.max_completeness_deviation <= tol;
  return rep;
}

Povm fourier_povm(int d) {
  if (d < 1) throw std::domain_error("fourier_povm: need d >= 1");
  Povm p{d, {}};
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int r = 0; r < d; ++r) {
    PovmElement e{1.0, {}};
    e.coeffs.reserve(d);
    for (int q = 0; q < d; ++q) {
      e.coeffs.push_back(std::polar(amp, two_pi * q * r / d));
    }
    p.elements.push_back(std::move(e));
  }
  return p;
}

Strategy fourier_strategy_single_circle(int n, int m, double theta) {
  const int d = n + m + 1;
  encoding_weights(n, m, theta);  // domain validation only
  Strategy s{{d, {}}, {}};
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int r = 0; r < d; ++r) {
    PovmElement e{1.0, {}};
    for (int p = 0; p < d; ++p) {
      e.coeffs.push_back(std::polar(amp, two_pi * (n - m - p) * r / d));
    }
    s.povm.elements.push_back(std::move(e));
    s.estimated_phis.push_back(wrap_phase(two_pi * r / d));
  }
  return s;
}

Strategy two_circle_strategy(double theta, double theta0) {
  two_circle_basis(theta, theta0);  // domain validation only
  Strategy s{fourier_povm(3), {0.0, 4.0 * std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 3.0}};
  return s;
}

Strategy opposite_parallel_strategy(double theta) {
  check_theta(theta, "opposite_parallel_strategy");
  const double a = 1.0 / std::numbers::sqrt3;
  const std::complex<double> w1 = std::polar(a, 2.0 * std::numbers::pi / 3.0);
  const std::complex<double> w2 = std::polar(a, 4.0 * std::numbers::pi / 3.0);
  Strategy s{{3, {}}, {0.0, 2.0 * std::numbers::pi / 3.0, 4.0 * std::numbers::pi / 3.0}};
  s.povm.elements = {
      {1.0, {a, a, a}},
      {1.0, {a, w2, w1}},
      {1.0, {a, w1, w2}},
  };
  return s;
}

Strategy opposite_antiparallel_strategy(double theta) {
  check_theta(theta, "opposite_antiparallel_strategy");
  const double h = 0.5;
  const double q = 1.0 / std::numbers::sqrt2;
  const std::complex<double> iq(0.0, q);
  Strategy s{{4, {}},
             {std::numbers::pi / 2.0, 3.0 * std::numbers::pi / 2.0, 0.0, std::numbers::pi}};
  s.povm.elements = {
      {1.0, {-h, -h, iq, 0.0}},
      {1.0, {-h, -h, -iq, 0.0}},
      {1.0, {h, -h, 0.0, q}},
      {1.0, {h, -h, 0.0, -q}},
  };
  return s;
}

Strategy fourier4_antiparallel_strategy(double phi1, double phi2, double phi3, double phi4) {
  Strategy s{fourier_povm(4),
             {wrap_phase(phi1), wrap_phase(phi2), wrap_phase(phi3), wrap_phase(phi4)}};
  return s;
}

Povm random_povm(int dim, int count, std::uint64_t seed) {
  if (dim < 1) throw std::domain_error("random_povm: need dim >= 1");
  if (count < dim) throw std::domain_error("random_povm: need count >= dim");
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(count, dim);
  for (int r = 0; r < count; ++r) {
    for (int c = 0; c < dim; ++c) a(r, c) = std::complex<double>(gauss(eng), gauss(eng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  const Eigen::MatrixXcd isometry =
      qr.householderQ() * Eigen::MatrixXcd::Identity(count, dim);
  Povm p{dim, {}};
  for (int r = 0; r < count; ++r) {
    const double weight = isometry.row(r).squaredNorm();
    if (!(weight > 0.0)) throw std::runtime_error("random_povm: degenerate row draw");
    PovmElement e{weight, {}};
    const double inv = 1.0 / std::sqrt(weight);
    for (int c = 0; c < dim; ++c) e.coeffs.push_back(isometry(r, c) * inv);
    p.elements.push_back(std::move(e));
  }
  return p;
}

namespace detail {

double average_fidelity_with_nodes(const Strategy& s, const Scenario& sc, int nodes) {
  if (nodes < 1) throw std::domain_error("average_fidelity: need nodes >= 1");
  const ScenarioEval ev(sc);
  check_strategy(s, ev);
  double total = 0.0;
  std::vector<std::complex<double>> state;
  for (int branch = 0; branch < ev.branches(); ++branch) {
    double a, b;
    ev.score_coefficients(branch, a, b);
    const double bw = ev.branch_weight();
    for (int k = 0; k < nodes; ++k) {
      const double phi = two_pi * k / nodes;
      ev.span_state(branch, phi, state);
      for (std::size_t r = 0; r < s.povm.elements.size(); ++r) {
        const auto& e = s.povm.elements[r];
        const double prob = e.weight * std::norm(projection(e, state));
        total += bw * prob * (a + b * std::cos(phi - s.estimated_phis[r]));
      }
    }
  }
  return total / nodes;
}

}  // namespace detail

double average_fidelity(const Strategy& s, const Scenario& sc) {
  return detail::average_fidelity_with_nodes(s, sc, ScenarioEval(sc).quadrature_nodes());
}

McEstimate monte_carlo_fidelity(const Strategy& s, const Scenario& sc, std::int64_t samples,
                                std::uint64_t seed) {
  if (samples < 1) throw std::domain_error("monte_carlo_fidelity: need samples >= 1");
  const ScenarioEval ev(sc);
  check_strategy(s, ev);
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const std::size_t nel = s.povm.elements.size();
  std::vector<std::complex<double>> state;
  std::vector<double> probs(nel);
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const int branch = ev.branches() == 2 ? (uniform(eng) < 0.5 ? 0 : 1) : 0;
    const double phi = two_pi * uniform(eng);
    ev.span_state(branch, phi, state);
    double total_p = 0.0;
    for (std::size_t r = 0; r < nel; ++r) {
      probs[r] = s.povm.elements[r].weight * std::norm(projection(s.povm.elements[r], state));
      total_p += probs[r];
    }
    // Born probabilities sum to 1 analytically; renormalize to absorb rounding.
    const double u = uniform(eng) * total_p;
    std::size_t outcome = nel - 1;
    double cdf = 0.0;
    for (std::size_t r = 0; r < nel; ++r) {
      cdf += probs[r];
      if (u < cdf) {
        outcome = r;
        break;
      }
    }
    double a, b;
    ev.score_coefficients(branch, a, b);
    const double score = a + b * std::cos(phi - s.estimated_phis[outcome]);
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

Strategy hill_climb_phases(const Strategy& s, const Scenario& sc, int iterations,
                           std::uint64_t seed) {
  if (iterations < 0) throw std::domain_error("hill_climb_phases: need iterations >= 0");
  const ScenarioEval ev(sc);
  check_strategy(s, ev);
  const PhaseObjective obj = make_phase_objective(s, ev);

  Strategy cur = s;
  double best = obj(cur.estimated_phis);
  std::mt19937_64 eng(seed);
  std::vector<int> order(cur.estimated_phis.size());
  std::iota(order.begin(), order.end(), 0);

  constexpr double golden = 0.6180339887498949;
  constexpr int scan_points = 24;
  for (int sweep = 0; sweep < iterations; ++sweep) {
    const double sweep_start = best;
    std::shuffle(order.begin(), order.end(), eng);
    for (const int r : order) {
      const double rest = best - obj.cx[r] * std::cos(cur.estimated_phis[r]) -
                          obj.cy[r] * std::sin(cur.estimated_phis[r]);
      double scan_phi = cur.estimated_phis[r];
      double scan_val = best;
      for (int k = 0; k < scan_points; ++k) {
        const double phi = two_pi * k / scan_points;
        const double f = obj.coordinate(r, phi, rest);
        if (f > scan_val) {
          scan_val = f;
          scan_phi = phi;
        }
      }
      double lo = scan_phi - two_pi / scan_points;
      double hi = scan_phi + two_pi / scan_points;
      double x1 = hi - golden * (hi - lo);
      double x2 = lo + golden * (hi - lo);
      double f1 = obj.coordinate(r, x1, rest);
      double f2 = obj.coordinate(r, x2, rest);
      while (hi - lo > 1e-10) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + golden * (hi - lo);
          f2 = obj.coordinate(r, x2, rest);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - golden * (hi - lo);
          f1 = obj.coordinate(r, x1, rest);
        }
      }
      const double cand_phi = 0.5 * (lo + hi);
      const double cand_val = obj.coordinate(r, cand_phi, rest);
      if (cand_val > best) {
        cur.estimated_phis[r] = wrap_phase(cand_phi);
        best = cand_val;
      } else if (scan_val > best) {
        cur.estimated_phis[r] = wrap_phase(scan_phi);
        best = scan_val;
      }
    }
    if (best - sweep_start < 1e-12) break;
  }
  return cur;
}

BoundReport certify_bound(const Scenario& sc, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("certify_bound: need trials >= 1");
  const int dim = scenario_dim(sc);
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double max_found = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int count = dim + static_cast<int>(eng() % static_cast<std::uint64_t>(dim + 1));
    Strategy cand{random_povm(dim, count, eng()), {}};
    cand.estimated_phis.reserve(count);
    for (int r = 0; r < count; ++r) cand.estimated_phis.push_back(two_pi * uniform(eng));
    cand = hill_climb_phases(cand, sc, 40, eng());
    max_found = std::max(max_found, average_fidelity(cand, sc));
  }
  const double bound = scenario_bound(sc);
  return {max_found, bound, bound - max_found};
}

}  // namespace qcest
