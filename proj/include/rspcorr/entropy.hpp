#pragma once

// Entropies in bits and the Holevo quantity of a projective qubit
// measurement on Alice's side.

#include <cmath>

#include "rspcorr/state.hpp"

namespace rspcorr {

inline constexpr double kEntropyClamp = 1e-12;

/// -x log2 x - (1-x) log2 (1-x) with 0 log 0 = 0. Inputs within 1e-12 of
/// [0,1] are clamped; anything further out is a domain error.
inline double binary_entropy(double x) {
  if (!(x >= -kEntropyClamp && x <= 1.0 + kEntropyClamp))
    throw domain_error("binary_entropy: argument outside [0,1]");
  x = std::clamp(x, 0.0, 1.0);
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return term(x) + term(1.0 - x);
}

// Qubit spectrum is (1 +- |r|)/2, so no eigensolver is needed.
inline double von_neumann_qubit(const QubitState& q) {
  const double r = q.bloch.norm();
  if (r > 1.0 + 1e-9) throw domain_error("qubit Bloch vector longer than 1");
  return binary_entropy((1.0 + std::min(r, 1.0)) / 2.0);
}

/// Von Neumann entropy (bits) of a two-qubit state.
inline double von_neumann_entropy(const FanoState& s) {
  const Eigen::Vector4d ev = eigenvalues(fano_to_density(s).m);
  double h = 0.0;
  for (int i = 0; i < 4; ++i)
    if (ev(i) > 0.0) h -= ev(i) * std::log2(ev(i));
  return h;
}

/// chi = S(sum_i p_i rho_i^B) - sum_i p_i S(rho_i^B) for Alice's measurement
/// along the Bloch direction +-alpha.
inline double holevo_chi(const FanoState& s, const Vec3& alpha) {
  Vec3 mean = Vec3::Zero();
  double mixed = 0.0;
  for (int outcome : {1, -1}) {
    const auto c = conditional_bob_state(s, alpha, outcome);
    if (c.zero_probability_branch) continue;
    mean += c.probability * c.bob_state.bloch;
    mixed += c.probability * von_neumann_qubit(c.bob_state);
  }
  return std::max(0.0, von_neumann_qubit({mean}) - mixed);
}

/// Mutual information S(A) + S(B) - S(AB) in bits.
inline double mutual_information(const FanoState& s) {
  return von_neumann_qubit({s.a}) + von_neumann_qubit({s.b}) - von_neumann_entropy(s);
}

}  // namespace rspcorr
