#pragma once

// Simultaneous correlations in mutually unbiased bases (C1, C2, C3) and
// quantum discord.
//
// For a qubit, two bases are mutually unbiased exactly when their Bloch
// directions are orthogonal, so MUB pairs are orthogonal direction pairs and
// MUB triads are orthonormal frames.

#include <optional>

#include "rspcorr/entropy.hpp"
#include "rspcorr/optimize.hpp"

namespace rspcorr {

struct MubPair {
  Vec3 u = Vec3::UnitX();
  Vec3 v = Vec3::UnitY();
};

struct MubTriad {
  Vec3 u1 = Vec3::UnitX();
  Vec3 u2 = Vec3::UnitY();
  Vec3 u3 = Vec3::UnitZ();
};

/// Optimum of a correlation measure (bits) with the maximizing
/// direction / pair / triad. Values are lower bounds up to optimizer
/// tolerance.
template <class Witness>
struct MeasureResult {
  double value = 0;
  Witness witness{};
  int iterations = 0;
  bool converged = true;
};

// Correlations carried by E beyond the product part a b^T; zero means the
// state is a product state and every measure vanishes.
inline bool is_uncorrelated(const FanoState& s, double tol = 1e-12) {
  return (s.E - s.a * s.b.transpose()).norm() < tol;
}

inline MeasureResult<Vec3> c1(const FanoState& s, const OptimizerOptions& opt = {}) {
  if (is_uncorrelated(s)) return {0.0, Vec3::UnitZ(), 0, true};
  const auto r = maximize_over_sphere([&](const Vec3& u) { return holevo_chi(s, u); }, opt);
  return {std::clamp(r.value, 0.0, 1.0), r.witness, r.iterations, r.converged};
}

inline MeasureResult<MubPair> c2(const FanoState& s, const OptimizerOptions& opt = {}) {
  if (is_uncorrelated(s)) return {0.0, MubPair{}, 0, true};
  const auto r = maximize_over_frames(
      [&](const Mat3& f) { return std::min(holevo_chi(s, f.col(0)), holevo_chi(s, f.col(1))); }, opt);
  return {std::clamp(r.value, 0.0, 1.0), MubPair{r.witness.col(0), r.witness.col(1)}, r.iterations, r.converged};
}

inline MeasureResult<MubTriad> c3(const FanoState& s, const OptimizerOptions& opt = {}) {
  if (is_uncorrelated(s)) return {0.0, MubTriad{}, 0, true};
  const auto r = maximize_over_frames(
      [&](const Mat3& f) {
        return std::min({holevo_chi(s, f.col(0)), holevo_chi(s, f.col(1)), holevo_chi(s, f.col(2))});
      },
      opt);
  const Mat3& w = r.witness;
  return {std::clamp(r.value, 0.0, 1.0), MubTriad{w.col(0), w.col(1), w.col(2)}, r.iterations, r.converged};
}

/// C3 of a Bell-diagonal state: 1 - h((1 + sqrt((e1^2+e2^2+e3^2)/3)) / 2).
inline double c3_bell_closed(const BellDiagonalState& s) {
  require_physical(s);
  const double r = std::min(1.0, std::sqrt(s.norm2() / 3.0));
  return 1.0 - binary_entropy((1.0 + r) / 2.0);
}

/// sqrt((E2^2 + E3^2) / 2) with |E1| >= |E2| >= |E3|.
inline double discord_bell_formula(const BellDiagonalState& s) {
  const auto m = s.sorted_magnitudes();
  return std::sqrt((m[1] * m[1] + m[2] * m[2]) / 2.0);
}

struct DiscordResult {
  double value = 0;                     // I(A:B) - max_alpha chi, numerical
  double mutual_information = 0;
  double classical_correlation = 0;     // max_alpha chi
  std::optional<double> closed_form;    // Bell-diagonal inputs only
  Vec3 witness = Vec3::UnitZ();
  int iterations = 0;
  bool converged = true;
};

/// Closed-form entropic discord of a Bell-diagonal state: mutual information
/// from the Bell weights minus 1 - h((1 + max|e_i|)/2).
inline double discord_entropic_bell(const BellDiagonalState& s) {
  require_physical(s);
  double joint = 0.0;
  for (double w : bell_weights(s))
    if (w > 0.0) joint -= w * std::log2(w);
  const double c = std::min(1.0, s.sorted_magnitudes()[0]);
  return std::max(0.0, (2.0 - joint) - (1.0 - binary_entropy((1.0 + c) / 2.0)));
}

/// Entropic discord with measurement on Alice's side.
inline DiscordResult discord_entropic(const FanoState& s, const OptimizerOptions& opt = {}) {
  DiscordResult d;
  if (s.is_bell_diagonal()) d.closed_form = discord_entropic_bell(BellDiagonalState::from_fano(s));
  if (is_uncorrelated(s)) {
    d.value = 0.0;
    return d;
  }
  d.mutual_information = mutual_information(s);
  const auto j = c1(s, opt);
  d.classical_correlation = j.value;
  d.witness = j.witness;
  d.iterations = j.iterations;
  d.converged = j.converged;
  d.value = std::max(0.0, d.mutual_information - j.value);
  return d;
}

}  // namespace rspcorr
