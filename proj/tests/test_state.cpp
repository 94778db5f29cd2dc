#include <gtest/gtest.h>

#include <random>

#include "rspcorr/state.hpp"
#include "rspcorr/state_spec.hpp"

using namespace rspcorr;

namespace {

// Independent of fano_to_density: |psi><psi| from explicit amplitudes.
Mat4c projector(cplx c00, cplx c01, cplx c10, cplx c11) {
  Eigen::Vector4cd psi(c00, c01, c10, c11);
  psi.normalize();
  return psi * psi.adjoint();
}

// Conditional Bob state by explicit 4x4 projection and partial trace.
Vec3 bob_bloch_by_partial_trace(const FanoState& s, const Vec3& alpha, int outcome, double& prob) {
  Mat2c proj = 0.5 * (pauli(0) + outcome * (alpha.x() * pauli(1) + alpha.y() * pauli(2) + alpha.z() * pauli(3)));
  const Mat4c rho = fano_to_density(s).m;
  const Mat4c big = kron(proj, pauli(0));
  const Mat4c post = big * rho * big;
  Mat2c bob = Mat2c::Zero();
  for (int a = 0; a < 2; ++a) bob += post.block<2, 2>(2 * a, 2 * a);
  prob = bob.trace().real();
  bob /= prob;
  return {(bob * pauli(1)).trace().real(), (bob * pauli(2)).trace().real(), (bob * pauli(3)).trace().real()};
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

TEST(FanoToDensity, MaximallyMixed) {
  EXPECT_LT((fano_to_density(FanoState{}).m - Mat4c::Identity() / 4.0).norm(), 1e-15);
}

TEST(FanoToDensity, SingletProjector) {
  const Mat4c expected = projector(0, kInvSqrt2, -kInvSqrt2, 0);
  EXPECT_LT((fano_to_density(FanoState::bell_diagonal(-1, -1, -1)).m - expected).norm(), 1e-14);
}

TEST(FanoToDensity, TripletZeroProjector) {
  const Mat4c expected = projector(0, kInvSqrt2, kInvSqrt2, 0);
  EXPECT_LT((fano_to_density(FanoState::bell_diagonal(1, 1, -1)).m - expected).norm(), 1e-14);
}

TEST(DensityToFano, IdentityQuarter) {
  const auto s = density_to_fano({Mat4c::Identity() / 4.0});
  EXPECT_LT(s.a.norm() + s.b.norm() + s.E.norm(), 1e-15);
}

TEST(DensityToFano, PhiPlus) {
  const auto s = density_to_fano({projector(kInvSqrt2, 0, 0, kInvSqrt2)});
  Mat3 expected = Mat3::Zero();
  expected.diagonal() << 1, -1, 1;
  EXPECT_LT((s.E - expected).norm(), 1e-14);
  EXPECT_LT(s.a.norm() + s.b.norm(), 1e-15);
}

TEST(DensityToFano, ClassicalMixture) {
  Mat4c rho = Mat4c::Zero();
  rho(0, 0) = 0.5;
  rho(3, 3) = 0.5;
  const auto s = density_to_fano({rho});
  Mat3 expected = Mat3::Zero();
  expected(2, 2) = 1;
  EXPECT_LT((s.E - expected).norm(), 1e-15);
  EXPECT_LT(s.a.norm() + s.b.norm(), 1e-15);
}

TEST(DensityToFano, RejectsNonHermitian) {
  Mat4c rho = Mat4c::Identity() / 4.0;
  rho(0, 1) = 0.1;
  EXPECT_THROW(density_to_fano({rho}), domain_error);
}

TEST(DensityToFano, RejectsWrongTrace) {
  EXPECT_THROW(density_to_fano({Mat4c::Identity() / 2.0}), domain_error);
}

TEST(DensityToFano, RoundTripRandomStates) {
  std::mt19937_64 eng(11);
  for (int i = 0; i < 100; ++i) {
    const FanoState s = random_fano_state(eng);
    const FanoState r = density_to_fano(fano_to_density(s));
    EXPECT_LT((r.a - s.a).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((r.b - s.b).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((r.E - s.E).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(IsPhysical, Examples) {
  EXPECT_TRUE(is_physical(FanoState::bell_diagonal(-1, -1, -1)).physical);
  const auto bad = is_physical(FanoState::bell_diagonal(1, 1, 1));
  EXPECT_FALSE(bad.physical);
  EXPECT_NEAR(bad.min_eigenvalue, -0.5, 1e-12);
  EXPECT_TRUE(is_physical(FanoState{}).physical);
}

TEST(Tetrahedron, Examples) {
  EXPECT_TRUE(tetrahedron_check({-1, -1, -1}));
  EXPECT_FALSE(tetrahedron_check({1, 1, 1}));
  EXPECT_TRUE(tetrahedron_check({0, 0, 0}));
  // Face of the tetrahedron: rho_c-type boundary state must not fail.
  EXPECT_TRUE(tetrahedron_check({-0.2, -0.2, -1}));
}

TEST(Tetrahedron, AgreesWithSpectrumOnRandomCube) {
  std::mt19937_64 eng(5);
  for (int i = 0; i < 10000; ++i) {
    const BellDiagonalState s{uniform(eng, -1, 1), uniform(eng, -1, 1), uniform(eng, -1, 1)};
    ASSERT_EQ(tetrahedron_check(s), is_physical(s.fano()).physical) << s.e1 << "," << s.e2 << "," << s.e3;
  }
}

TEST(ConditionalBobState, SingletAlongZ) {
  const auto c = conditional_bob_state(FanoState::bell_diagonal(-1, -1, -1), unit_z(), 1);
  EXPECT_NEAR(c.probability, 0.5, 1e-15);
  EXPECT_LT((c.bob_state.bloch - Vec3(0, 0, -1)).norm(), 1e-15);
}

TEST(ConditionalBobState, ProductStateUnchanged) {
  const Vec3 b(0.3, -0.2, 0.4);
  const auto s = FanoState::product(unit_z(), b);
  std::mt19937_64 eng(3);
  for (int i = 0; i < 10; ++i) {
    const Vec3 u = random_unit(eng);
    for (int o : {1, -1}) {
      const auto c = conditional_bob_state(s, u, o);
      if (c.zero_probability_branch) continue;
      EXPECT_LT((c.bob_state.bloch - b).norm(), 1e-12);
    }
  }
}

TEST(ConditionalBobState, BellDiagonalMatchesPartialTrace) {
  std::mt19937_64 eng(8);
  BellDiagonalSampler sampler(8);
  for (int i = 0; i < 50; ++i) {
    const auto s = sampler.next();
    const Vec3 u = random_unit(eng);
    for (int o : {1, -1}) {
      double prob = 0;
      const Vec3 oracle = bob_bloch_by_partial_trace(s.fano(), u, o, prob);
      const auto c = conditional_bob_state(s.fano(), u, o);
      EXPECT_NEAR(c.probability, 0.5, 1e-14);
      EXPECT_NEAR(prob, 0.5, 1e-14);
      EXPECT_LT((c.bob_state.bloch - o * s.diag().cwiseProduct(u)).norm(), 1e-14);
      EXPECT_LT((c.bob_state.bloch - oracle).norm(), 1e-12);
    }
  }
}

TEST(ConditionalBobState, GeneralStatesMatchPartialTrace) {
  std::mt19937_64 eng(21);
  for (int i = 0; i < 100; ++i) {
    const FanoState s = random_fano_state(eng);
    const Vec3 u = random_unit(eng);
    const auto plus = conditional_bob_state(s, u, 1), minus = conditional_bob_state(s, u, -1);
    EXPECT_NEAR(plus.probability + minus.probability, 1.0, 1e-12);
    EXPECT_LT((plus.probability * plus.bob_state.bloch + minus.probability * minus.bob_state.bloch - s.b).norm(), 1e-12);
    double prob = 0;
    const Vec3 oracle = bob_bloch_by_partial_trace(s, u, 1, prob);
    EXPECT_NEAR(plus.probability, prob, 1e-12);
    EXPECT_LT((plus.bob_state.bloch - oracle).norm(), 1e-10);
  }
}

TEST(ConditionalBobState, ZeroProbabilityBranch) {
  const auto s = FanoState::product(unit_z(), Vec3(0.1, 0, 0));
  const auto c = conditional_bob_state(s, unit_z(), -1);
  EXPECT_TRUE(c.zero_probability_branch);
  EXPECT_EQ(c.bob_state.bloch, Vec3::Zero());
  EXPECT_THROW(conditional_bob_state(s, unit_z(), 0), domain_error);
}

TEST(Ppt, Examples) {
  // rho_c(0.2) = (-0.2,-0.2,-1), rho_g(0.2) = (-0.2,-0.2,0.6)
  EXPECT_EQ(ppt_entanglement_check(FanoState::bell_diagonal(-0.2, -0.2, -1)).verdict, Separability::entangled);
  EXPECT_EQ(ppt_entanglement_check(FanoState::bell_diagonal(-0.2, -0.2, 0.6)).verdict, Separability::separable);
  const auto singlet = ppt_entanglement_check(FanoState::bell_diagonal(-1, -1, -1));
  EXPECT_EQ(singlet.verdict, Separability::entangled);
  EXPECT_NEAR(singlet.min_eigenvalue, -0.5, 1e-12);
}

TEST(Ppt, BellDiagonalEquivalentToLargestWeight) {
  BellDiagonalSampler sampler(99);
  for (int i = 0; i < 10000; ++i) {
    const auto s = sampler.next();
    const auto w = bell_weights(s);
    const bool by_weight = *std::max_element(w.begin(), w.end()) > 0.5 + 1e-9;
    const bool by_ppt = ppt_entanglement_check(s.fano()).verdict == Separability::entangled;
    ASSERT_EQ(by_weight, by_ppt);
  }
}

TEST(Sampler, DeterministicPerSeed) {
  EXPECT_EQ(random_bell_diagonal(17), random_bell_diagonal(17));
  EXPECT_FALSE(random_bell_diagonal(17) == random_bell_diagonal(18));
}

TEST(Sampler, AcceptanceRateIsTetrahedronVolumeFraction) {
  BellDiagonalSampler sampler(2024);
  for (int i = 0; i < 10000; ++i) ASSERT_TRUE(tetrahedron_check(sampler.next()));
  EXPECT_NEAR(sampler.acceptance_rate(), 1.0 / 3.0, 0.02);
}

TEST(StateSpec, ParsesBell) {
  const auto s = parse_state_spec("bell:-0.2,-0.2,-1");
  EXPECT_TRUE(s.is_bell_diagonal());
  EXPECT_EQ(BellDiagonalState::from_fano(s), (BellDiagonalState{-0.2, -0.2, -1}));
}

TEST(StateSpec, ParsesFano) {
  const auto s = parse_state_spec("fano:0.1,0,0;0,0.2,0;1,2,3,4,5,6,7,8,9");
  EXPECT_EQ(s.a, Vec3(0.1, 0, 0));
  EXPECT_EQ(s.b, Vec3(0, 0.2, 0));
  EXPECT_EQ(s.E(0, 1), 2);
  EXPECT_EQ(s.E(2, 0), 7);
}

TEST(StateSpec, RejectsMalformed) {
  EXPECT_THROW(parse_state_spec("bell:1,2"), parse_error);
  EXPECT_THROW(parse_state_spec("bell:1,x,2"), parse_error);
  EXPECT_THROW(parse_state_spec("bell:1,nan,2"), parse_error);
  EXPECT_THROW(parse_state_spec("fano:0,0,0;0,0,0"), parse_error);
  EXPECT_THROW(parse_state_spec("werner:0.5"), parse_error);
}
