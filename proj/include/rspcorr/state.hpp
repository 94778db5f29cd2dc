#pragma once

// Two-qubit states in Fano form and as 4x4 density matrices.
//
// Conventions: sigma_1 = X, sigma_2 = Y, sigma_3 = Z; basis order
// |00>, |01>, |10>, |11>; the first tensor factor belongs to Alice.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>

#include "rspcorr/random.hpp"
#include "rspcorr/types.hpp"

namespace rspcorr {

/// Pauli matrix by index: 0 = identity, 1 = X, 2 = Y, 3 = Z.
inline Mat2c pauli(int k) {
  Mat2c s;
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("pauli index");
  }
  return s;
}

inline Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

struct DensityMatrix4 {
  Mat4c m = Mat4c::Identity() / 4.0;
};

struct QubitState {
  Vec3 bloch = Vec3::Zero();
};

/// Alice Bloch vector a, Bob Bloch vector b, correlation matrix E with
/// E(j,k) = <sigma_j (x) sigma_k>.
struct FanoState {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  Mat3 E = Mat3::Zero();

  static FanoState bell_diagonal(double e1, double e2, double e3) {
    FanoState s;
    s.E.diagonal() << e1, e2, e3;
    return s;
  }

  /// Uncorrelated state rho_A (x) rho_B.
  static FanoState product(const Vec3& a, const Vec3& b) {
    return {a, b, a * b.transpose()};
  }

  bool is_bell_diagonal(double tol = 1e-12) const {
    Mat3 off = E;
    off.diagonal().setZero();
    return a.norm() <= tol && b.norm() <= tol && off.cwiseAbs().maxCoeff() <= tol;
  }
};

/// Bell-diagonal state given by the diagonal of its correlation matrix.
/// Entries are stored in the order given; nothing here assumes
/// |e1| >= |e2| >= |e3|.
struct BellDiagonalState {
  double e1 = 0, e2 = 0, e3 = 0;

  Vec3 diag() const { return {e1, e2, e3}; }
  Vec3 squares() const { return diag().cwiseAbs2(); }
  double norm2() const { return e1 * e1 + e2 * e2 + e3 * e3; }
  FanoState fano() const { return FanoState::bell_diagonal(e1, e2, e3); }

  /// Magnitudes sorted descending.
  std::array<double, 3> sorted_magnitudes() const {
    std::array<double, 3> m{std::abs(e1), std::abs(e2), std::abs(e3)};
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
  }

  static BellDiagonalState from_fano(const FanoState& s) {
    if (!s.is_bell_diagonal(1e-12))
      throw domain_error("state is not Bell-diagonal (nonzero marginals or off-diagonal correlations)");
    return {s.E(0, 0), s.E(1, 1), s.E(2, 2)};
  }

  friend bool operator==(const BellDiagonalState&, const BellDiagonalState&) = default;
};

struct ConditionalOutcome {
  double probability = 0;
  QubitState bob_state;
  bool zero_probability_branch = false;
};

struct SpectrumReport {
  bool physical = false;
  double min_eigenvalue = 0;
};

enum class Separability { separable, entangled };

inline const char* to_string(Separability s) {
  return s == Separability::separable ? "separable" : "entangled";
}

struct PptReport {
  Separability verdict = Separability::separable;
  double min_eigenvalue = 0;
};

// ---------------------------------------------------------------------------

inline DensityMatrix4 fano_to_density(const FanoState& s) {
  Mat4c rho = kron(pauli(0), pauli(0));
  for (int i = 0; i < 3; ++i) {
    rho += s.a(i) * kron(pauli(i + 1), pauli(0));
    rho += s.b(i) * kron(pauli(0), pauli(i + 1));
    for (int j = 0; j < 3; ++j)
      if (s.E(i, j) != 0.0) rho += s.E(i, j) * kron(pauli(i + 1), pauli(j + 1));
  }
  return {rho / 4.0};
}

/// Pauli-trace inverse of fano_to_density. Rejects non-Hermitian or
/// non-unit-trace input.
inline FanoState density_to_fano(const DensityMatrix4& rho, double tol = 1e-10) {
  const Mat4c& m = rho.m;
  if (!m.allFinite()) throw domain_error("density matrix has non-finite entries");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) throw domain_error("density matrix is not Hermitian");
  if (std::abs(m.trace() - cplx(1.0, 0.0)) > tol) throw domain_error("density matrix does not have unit trace");

  auto expect = [&](int mu, int nu) { return (m * kron(pauli(mu), pauli(nu))).trace().real(); };
  FanoState s;
  for (int i = 0; i < 3; ++i) {
    s.a(i) = expect(i + 1, 0);
    s.b(i) = expect(0, i + 1);
    for (int j = 0; j < 3; ++j) s.E(i, j) = expect(i + 1, j + 1);
  }
  return s;
}

inline Eigen::Vector4d eigenvalues(const Mat4c& m) {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline SpectrumReport is_physical(const FanoState& s, double tol = kPsdTol) {
  const double lo = eigenvalues(fano_to_density(s).m).minCoeff();
  return {lo >= -tol, lo};
}

/// Eigenvalues of a Bell-diagonal state: weights on Phi+, Phi-, Psi+, Psi-.
inline std::array<double, 4> bell_weights(const BellDiagonalState& s) {
  return {(1 + s.e1 - s.e2 + s.e3) / 4, (1 - s.e1 + s.e2 + s.e3) / 4,
          (1 + s.e1 + s.e2 - s.e3) / 4, (1 - s.e1 - s.e2 - s.e3) / 4};
}

// Compares the Bell weights (the actual eigenvalues) against -tol so that the
// verdict coincides with is_physical on the embedded Fano state.
inline bool tetrahedron_check(const BellDiagonalState& s, double tol = kPsdTol) {
  const auto w = bell_weights(s);
  return std::all_of(w.begin(), w.end(), [tol](double x) { return x >= -tol; });
}

inline void require_physical(const BellDiagonalState& s) {
  if (!tetrahedron_check(s))
    throw domain_error("unphysical Bell-diagonal state (outside the tetrahedron)");
}

inline void require_physical(const FanoState& s) {
  const auto rep = is_physical(s);
  if (!rep.physical)
    throw domain_error("unphysical state: min eigenvalue " + std::to_string(rep.min_eigenvalue));
}

/// Bob's state after Alice measures sigma.alpha and obtains `outcome` (+1/-1).
inline ConditionalOutcome conditional_bob_state(const FanoState& s, const Vec3& alpha, int outcome) {
  if (outcome != 1 && outcome != -1) throw domain_error("outcome must be +1 or -1");
  const double sgn = outcome;
  ConditionalOutcome r;
  const double weight = 1.0 + sgn * s.a.dot(alpha);
  r.probability = std::clamp(weight / 2.0, 0.0, 1.0);
  if (r.probability < kBranchTol) {
    r.zero_probability_branch = true;
    return r;
  }
  r.bob_state.bloch = (s.b + sgn * s.E.transpose() * alpha) / weight;
  return r;
}

inline Mat4c partial_transpose_bob(const Mat4c& m) {
  Mat4c out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) out(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
  return out;
}

/// Peres-Horodecki test; exact for two qubits.
inline PptReport ppt_entanglement_check(const FanoState& s, double tol = kPsdTol) {
  const double lo = eigenvalues(partial_transpose_bob(fano_to_density(s).m)).minCoeff();
  return {lo < -tol ? Separability::entangled : Separability::separable, lo};
}

/// Rejection sampler: uniform triples in [-1,1]^3 kept iff inside the
/// tetrahedron. Deterministic per seed.
class BellDiagonalSampler {
public:
  explicit BellDiagonalSampler(std::uint64_t seed) : eng_(seed) {}

  BellDiagonalState next() {
    for (;;) {
      ++attempts_;
      BellDiagonalState s{uniform(eng_, -1, 1), uniform(eng_, -1, 1), uniform(eng_, -1, 1)};
      if (tetrahedron_check(s, 0.0)) {
        ++accepted_;
        return s;
      }
    }
  }

  std::uint64_t attempts() const { return attempts_; }
  std::uint64_t accepted() const { return accepted_; }
  double acceptance_rate() const { return attempts_ ? double(accepted_) / double(attempts_) : 0.0; }

private:
  std::mt19937_64 eng_;
  std::uint64_t attempts_ = 0;
  std::uint64_t accepted_ = 0;
};

inline BellDiagonalState random_bell_diagonal(std::uint64_t seed) {
  return BellDiagonalSampler(seed).next();
}

/// Random physical product state with Bloch vectors of random length.
inline FanoState random_product_state(std::mt19937_64& eng) {
  const Vec3 a = uniform01(eng) * random_unit(eng);
  const Vec3 b = uniform01(eng) * random_unit(eng);
  return FanoState::product(a, b);
}

/// Random full-rank state from a normalized complex Ginibre matrix.
inline FanoState random_fano_state(std::mt19937_64& eng) {
  std::normal_distribution<double> gauss;
  Mat4c g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = cplx(gauss(eng), gauss(eng));
  Mat4c rho = g * g.adjoint();
  rho /= rho.trace().real();
  return density_to_fano({rho});
}

}  // namespace rspcorr
