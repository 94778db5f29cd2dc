#pragma once

// Remote state preparation with a shared two-qubit resource.
//
// Alice measures sigma.alpha and sends the one-bit outcome. On +1 Bob does
// nothing; on -1 he applies the pi rotation about the circle normal beta,
// r -> 2 (r.beta) beta - r. Targets lie on the great circle orthogonal to
// beta.

#include <cstdint>
#include <numbers>

#include "rspcorr/measures.hpp"
#include "rspcorr/quadrature.hpp"
#include "rspcorr/random.hpp"

namespace rspcorr {

struct GreatCircle {
  Vec3 beta = Vec3::UnitZ();

  explicit GreatCircle(const Vec3& normal) : beta(normal) {
    require_unit(beta, "circle normal beta", 1e-12);
  }

  /// beta = (sin(theta) sin(phi), sin(theta) cos(phi), cos(theta)).
  static GreatCircle from_angles(double theta, double phi) { return GreatCircle(bloch_from_angles(theta, phi)); }
};

/// Pure target cos(theta)|0> + e^{i phi} sin(theta)|1>.
struct TargetState {
  double theta = 0, phi = 0;
  Vec3 t = Vec3::UnitZ();

  static TargetState from_angles(double theta, double phi) {
    return {theta, phi, Vec3(std::sin(2 * theta) * std::cos(phi), std::sin(2 * theta) * std::sin(phi), std::cos(2 * theta))};
  }

  static TargetState from_bloch(const Vec3& t) {
    require_unit(t, "target Bloch vector", 1e-12);
    return {0.5 * std::acos(std::clamp(t.z(), -1.0, 1.0)), std::atan2(t.y(), t.x()), t};
  }
};

struct PreparedState {
  Vec3 p = Vec3::Zero();
};

struct Payoff {
  double pq = 0;  // (t.p)^2
  double pl = 0;  // (1 + t.p) / 2
};

struct PayoffReport {
  double pq = 0;
  double pl = 0;
  Vec3 argmax_alpha = Vec3::UnitZ();
  PreparedState prepared;
  int iterations = 0;
  bool converged = true;
};

inline Vec3 rotate_pi_about(const Vec3& r, const Vec3& axis) { return 2.0 * r.dot(axis) * axis - r; }

/// Outcome-averaged Bloch vector of Bob's corrected state.
inline PreparedState prepared_bloch(const FanoState& s, const Vec3& alpha, const GreatCircle& circle) {
  require_unit(alpha, "measurement direction alpha");
  PreparedState out;
  for (int outcome : {1, -1}) {
    const auto c = conditional_bob_state(s, alpha, outcome);
    if (c.zero_probability_branch) continue;
    const Vec3 r = outcome == 1 ? c.bob_state.bloch : rotate_pi_about(c.bob_state.bloch, circle.beta);
    out.p += c.probability * r;
  }
  return out;
}

inline Payoff payoff(const TargetState& t, const PreparedState& p) {
  const double tp = t.t.dot(p.p);
  return {tp * tp, 0.5 * (1.0 + tp)};
}

inline void require_on_circle(const TargetState& t, const GreatCircle& c, double tol = 1e-9) {
  require_unit(t.t, "target Bloch vector");
  if (std::abs(t.t.dot(c.beta)) > tol)
    throw domain_error("target is not on the great circle (|t.beta| > 1e-9)");
}

/// Best quadratic payoff over Alice's measurement direction. Of the two
/// directions +-alpha the one with t.p >= 0 is reported when the quadratic
/// payoff ties, so pl is the linear payoff of the same strategy.
inline PayoffReport pq_max(const FanoState& s, const TargetState& t, const GreatCircle& circle,
                           const OptimizerOptions& opt = {}) {
  require_on_circle(t, circle);
  auto objective = [&](const Vec3& alpha) { return payoff(t, prepared_bloch(s, alpha, circle)).pq; };
  const auto r = maximize_over_sphere(objective, opt);

  Vec3 alpha = r.witness;
  PreparedState p = prepared_bloch(s, alpha, circle);
  const PreparedState flipped = prepared_bloch(s, -alpha, circle);
  if (t.t.dot(p.p) < 0 && payoff(t, flipped).pq >= payoff(t, p).pq - 1e-12) {
    alpha = -alpha;
    p = flipped;
  }
  const auto pay = payoff(t, p);
  return {pay.pq, pay.pl, alpha, p, r.iterations, r.converged};
}

/// Analytic per-target optimum for a Bell-diagonal state: sum_i e_i^2 t_i^2.
inline double pq_max_bell(const BellDiagonalState& s, const Vec3& t) {
  return s.squares().dot(t.cwiseAbs2());
}

/// ||E||^2 - beta^T E^T E beta, the circle-averaged optimum as printed in the
/// source literature. The directly integrated circle average is half of this
/// (see pq_av_quadrature).
inline double pq_av_formula(const BellDiagonalState& s, const GreatCircle& c) {
  return s.norm2() - s.squares().dot(c.beta.cwiseAbs2());
}

/// Uniform-angle average over the circle of the analytic per-target optimum.
inline double pq_av_quadrature(const BellDiagonalState& s, const GreatCircle& c, int n = 4096) {
  if (n < 64) throw domain_error("pq_av_quadrature: need at least 64 angles");
  const Vec3 u = any_orthogonal(c.beta);
  const Vec3 v = c.beta.cross(u);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double psi = 2 * std::numbers::pi * k / n;
    sum += pq_max_bell(s, std::cos(psi) * u + std::sin(psi) * v);
  }
  return sum / n;
}

struct BetaMinimum {
  double value = 0;
  Vec3 beta = Vec3::UnitZ();
  int iterations = 0;
  bool converged = true;
};

/// Worst great circle: numerical minimum of pq_av_formula over beta.
inline BetaMinimum min_over_beta(const BellDiagonalState& s, OptimizerOptions opt = {}) {
  opt.refine_tol = std::min(opt.refine_tol, 1e-9);
  const auto r = maximize_over_sphere([&](const Vec3& b) { return -pq_av_formula(s, GreatCircle(b.normalized())); }, opt);
  Vec3 beta = r.witness;
  if (beta.z() < 0 || (beta.z() == 0 && beta.y() < 0)) beta = -beta;
  return {-r.value, beta, r.iterations, r.converged};
}

/// Sphere average of pq_av_formula: (2/3)(e1^2 + e2^2 + e3^2).
inline double g_closed(const BellDiagonalState& s) { return 2.0 / 3.0 * s.norm2(); }

/// Hemisphere average of pq_av_formula, theta and phi in [0, pi] with sin(theta)
/// weight, by a product Gauss-Legendre rule.
inline double g_quadrature(const BellDiagonalState& s, int n_theta = 64, int n_phi = 64) {
  const auto rt = gauss_legendre(n_theta, 0.0, std::numbers::pi);
  const auto rp = gauss_legendre(n_phi, 0.0, std::numbers::pi);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < rt.nodes.size(); ++i) {
    const double w_theta = rt.weights[i] * std::sin(rt.nodes[i]);
    for (std::size_t j = 0; j < rp.nodes.size(); ++j) {
      const double w = w_theta * rp.weights[j];
      num += w * pq_av_formula(s, GreatCircle(bloch_from_angles(rt.nodes[i], rp.nodes[j]).normalized()));
      den += w;
    }
  }
  return num / den;
}

/// C3 as a function of G for Bell-diagonal states: 1 - h((1 + sqrt(G/2)) / 2).
inline double c3_from_g(double g) {
  if (!(g >= 0.0 && g <= 2.0)) throw domain_error("c3_from_g: G must lie in [0, 2]");
  return 1.0 - binary_entropy((1.0 + std::sqrt(g / 2.0)) / 2.0);
}

/// Singlet mixed with anti-correlated noise on |01>, |10>.
inline BellDiagonalState rho_c(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("rho_c: p must lie in [0, 1]");
  return {-p, -p, -1.0};
}

/// Singlet mixed with correlated noise on |00>, |11>.
inline BellDiagonalState rho_g(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("rho_g: p must lie in [0, 1]");
  return {-p, -p, 1.0 - 2.0 * p};
}

// Published closed forms of the per-target optimum for rho_c and rho_g,
// evaluated verbatim. Reference curves only: the rho_g form goes negative.
inline double printed_fidelity_rho_c(double p, double theta) {
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("p must lie in [0, 1]");
  return 0.5 * (1.0 + p + (1.0 - p) * std::cos(2 * theta));
}

inline double printed_fidelity_rho_g(double p, double theta) {
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("p must lie in [0, 1]");
  return 0.5 * (3.0 * p + (1.0 - p) * std::cos(2 * theta) - 1.0);
}

struct MonteCarloResult {
  std::uint64_t events = 0;
  Vec3 mean = Vec3::Zero();
  Vec3 std_error = Vec3::Zero();
  Payoff payoff;  // of the empirical mean
};

/// Event-level protocol run. Event i draws its outcome from
/// counter_uniform(seed, i), so the result does not depend on scheduling.
inline MonteCarloResult mc_simulate(const FanoState& s, const Vec3& alpha, const GreatCircle& circle,
                                    const TargetState& t, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw domain_error("mc_simulate: need at least one event");
  require_unit(alpha, "measurement direction alpha");
  const auto plus = conditional_bob_state(s, alpha, 1);
  const auto minus = conditional_bob_state(s, alpha, -1);
  const Vec3 r_plus = plus.bob_state.bloch;
  const Vec3 r_minus = rotate_pi_about(minus.bob_state.bloch, circle.beta);

  // Welford accumulation per component.
  Vec3 mean = Vec3::Zero(), m2 = Vec3::Zero();
  for (std::uint64_t i = 0; i < n; ++i) {
    const bool up = counter_uniform(seed, i) < plus.probability;
    const Vec3& x = up ? r_plus : r_minus;
    const Vec3 delta = x - mean;
    mean += delta / double(i + 1);
    m2 += delta.cwiseProduct(x - mean);
  }
  MonteCarloResult out;
  out.events = n;
  out.mean = mean;
  if (n > 1) out.std_error = (m2 / double(n - 1)).cwiseSqrt() / std::sqrt(double(n));
  out.payoff = payoff(t, {mean});
  return out;
}

}  // namespace rspcorr
