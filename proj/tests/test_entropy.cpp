#include <gtest/gtest.h>

#include <random>

#include "rspcorr/entropy.hpp"

using namespace rspcorr;

namespace {

// Entropy from the eigenvalues of an explicit 2x2 density matrix.
double entropy_2x2(const Vec3& r) {
  const Mat2c rho = 0.5 * (pauli(0) + r.x() * pauli(1) + r.y() * pauli(2) + r.z() * pauli(3));
  Eigen::SelfAdjointEigenSolver<Mat2c> es(rho);
  double h = 0;
  for (int i = 0; i < 2; ++i)
    if (es.eigenvalues()(i) > 0) h -= es.eigenvalues()(i) * std::log2(es.eigenvalues()(i));
  return h;
}

}  // namespace

TEST(BinaryEntropy, Values) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.75), 0.811278124459133, 1e-14);
}

TEST(BinaryEntropy, ClampsNearBoundaryAndRejectsOutside) {
  EXPECT_EQ(binary_entropy(-1e-13), 0.0);
  EXPECT_EQ(binary_entropy(1.0 + 1e-13), 0.0);
  EXPECT_THROW(binary_entropy(-1e-9), domain_error);
  EXPECT_THROW(binary_entropy(1.1), domain_error);
}

TEST(VonNeumannQubit, Values) {
  EXPECT_DOUBLE_EQ(von_neumann_qubit({Vec3::Zero()}), 1.0);
  EXPECT_EQ(von_neumann_qubit({unit_y()}), 0.0);
  EXPECT_NEAR(von_neumann_qubit({Vec3(0.3, 0.4, 0)}), 0.811278124459133, 1e-14);
}

TEST(VonNeumannQubit, MatchesEigenvalues) {
  std::mt19937_64 eng(1);
  for (int i = 0; i < 200; ++i) {
    const Vec3 r = uniform01(eng) * random_unit(eng);
    EXPECT_NEAR(von_neumann_qubit({r}), entropy_2x2(r), 1e-12);
  }
}

TEST(Holevo, ProductStatesCarryNoInformation) {
  std::mt19937_64 eng(2);
  for (int i = 0; i < 50; ++i) {
    const auto s = random_product_state(eng);
    EXPECT_NEAR(holevo_chi(s, random_unit(eng)), 0.0, 1e-12);
  }
}

TEST(Holevo, SingletGivesOneBitInEveryDirection) {
  std::mt19937_64 eng(3);
  for (int i = 0; i < 50; ++i) EXPECT_NEAR(holevo_chi(FanoState::bell_diagonal(-1, -1, -1), random_unit(eng)), 1.0, 1e-12);
}

TEST(Holevo, BellDiagonalClosedForm) {
  std::mt19937_64 eng(4);
  BellDiagonalSampler sampler(4);
  for (int i = 0; i < 100; ++i) {
    const auto s = sampler.next();
    const Vec3 u = random_unit(eng);
    const double expected = 1.0 - entropy_2x2(s.diag().cwiseProduct(u));
    EXPECT_NEAR(holevo_chi(s.fano(), u), expected, 1e-10);
  }
}

TEST(Holevo, BoundedAndSignSymmetric) {
  std::mt19937_64 eng(5);
  for (int i = 0; i < 500; ++i) {
    const auto s = random_fano_state(eng);
    const Vec3 u = random_unit(eng);
    const double x = holevo_chi(s, u);
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 1.0);
    EXPECT_NEAR(x, holevo_chi(s, -u), 1e-12);
  }
}

TEST(Holevo, ZeroProbabilityBranchContributesNothing) {
  // Alice pure along z: measuring z gives a certain outcome.
  const auto s = FanoState::product(unit_z(), Vec3(0, 0, 0.5));
  EXPECT_NEAR(holevo_chi(s, unit_z()), 0.0, 1e-15);
}

TEST(MutualInformation, SingletAndProduct) {
  EXPECT_NEAR(mutual_information(FanoState::bell_diagonal(-1, -1, -1)), 2.0, 1e-12);
  EXPECT_NEAR(mutual_information(FanoState::product(Vec3(0.3, 0, 0), Vec3(0, 0.2, 0.1))), 0.0, 1e-12);
}
