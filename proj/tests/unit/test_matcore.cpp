#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "loewner_lab/errors.hpp"
#include "loewner_lab/matcore.hpp"
#include "loewner_lab/search.hpp"
#include "oracles.hpp"

using namespace loewner_lab;

namespace {

double orthonormality_error(const Matrix& u) {
  return (u.transposed() * u - Matrix::identity(u.dim())).frobenius_norm();
}

double reconstruction_error(const EigenDecomposition& e, const SymMatrix& m) {
  const SymMatrix back = e.reconstruct(e.eigenvalues);
  return (back.matrix() - m.matrix()).frobenius_norm() / std::max(1.0, m.frobenius_norm());
}

bool exactly_symmetric(const SymMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

}  // namespace

TEST(SymMatrix, ConstructionSymmetrizes) {
  const SymMatrix m(2, {1.0, 2.0, 4.0, 5.0});
  EXPECT_EQ(m(0, 1), 3.0);
  EXPECT_EQ(m(1, 0), 3.0);
  EXPECT_EQ(m(0, 0), 1.0);
}

TEST(SymMatrix, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(SymMatrix(Matrix(0)), BadParameters);
  EXPECT_THROW(SymMatrix(1, {NAN}), BadParameters);
  EXPECT_THROW(SymMatrix(2, {1.0, INFINITY, 0.0, 1.0}), BadParameters);
  EXPECT_THROW(SymMatrix(2, {1.0, 2.0, 3.0}), DimensionMismatch);
}

TEST(Eigh, Identity) {
  const auto e = eigh(SymMatrix::identity(3));
  for (double v : e.eigenvalues) EXPECT_EQ(v, 1.0);
  EXPECT_LE(orthonormality_error(e.eigenvectors), 1e-15);
}

TEST(Eigh, DiagonalIsPermutedIdentity) {
  const std::vector<double> d{4.0, 1.0};
  const auto e = eigh(SymMatrix::diagonal(d));
  EXPECT_EQ(e.eigenvalues[0], 1.0);
  EXPECT_EQ(e.eigenvalues[1], 4.0);
  EXPECT_EQ(std::abs(e.eigenvectors(1, 0)), 1.0);
  EXPECT_EQ(std::abs(e.eigenvectors(0, 1)), 1.0);
  EXPECT_EQ(e.eigenvectors(0, 0), 0.0);
}

TEST(Eigh, TwoByTwoMatchesCharacteristicPolynomial) {
  const auto [lo, hi] = oracle::eig2x2(2.0, 1.0, 2.0);
  ASSERT_DOUBLE_EQ(lo, 1.0);
  ASSERT_DOUBLE_EQ(hi, 3.0);

  const auto e = eigh(SymMatrix(2, {2.0, 1.0, 1.0, 2.0}));
  EXPECT_NEAR(e.eigenvalues[0], lo, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], hi, 1e-15);
  // (1, −1)/√2 for λ = 1 and (1, 1)/√2 for λ = 3, up to sign.
  const double r = std::numbers::sqrt2 / 2;
  EXPECT_NEAR(std::abs(e.eigenvectors(0, 0)), r, 1e-15);
  EXPECT_NEAR(e.eigenvectors(0, 0) * e.eigenvectors(1, 0), -0.5, 1e-15);
  EXPECT_NEAR(e.eigenvectors(0, 1) * e.eigenvectors(1, 1), 0.5, 1e-15);
}

TEST(Eigh, ZeroMatrix) {
  const auto e = eigh(SymMatrix(Matrix(3)));
  for (double v : e.eigenvalues) EXPECT_EQ(v, 0.0);
}

TEST(Eigh, DeterministicForIdenticalInput) {
  RandomStream rng(7);
  const SymMatrix m = gen::symmetric(6, rng);
  const auto e1 = eigh(m);
  const auto e2 = eigh(m);
  EXPECT_EQ(e1.eigenvalues, e2.eigenvalues);
  EXPECT_EQ(e1.eigenvectors, e2.eigenvectors);
}

TEST(EighProperty, ReconstructionAndOrthonormality) {
  RandomStream rng(20240101);
  for (int trial = 0; trial < 400; ++trial) {
    const SymMatrix m = gen::symmetric(gen::dim_in(rng, 1, 8), rng);
    const auto e = eigh(m);
    ASSERT_LE(reconstruction_error(e, m), 1e-10) << "trial " << trial;
    ASSERT_LE(orthonormality_error(e.eigenvectors), 1e-10) << "trial " << trial;
    ASSERT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
  }
}

TEST(EighProperty, HandlesDimensionSixteenAcrossScales) {
  RandomStream rng(99);
  for (double scale : {1e-8, 1.0, 1e8}) {
    const SymMatrix m = scale * gen::symmetric(16, rng);
    const auto e = eigh(m);
    EXPECT_LE(reconstruction_error(e, m), 1e-10 * std::max(1.0, scale));
    EXPECT_LE(orthonormality_error(e.eigenvectors), 1e-10);
  }
}

TEST(MatPow, IdentityIsFixed) {
  const SymMatrix i3 = SymMatrix::identity(3);
  EXPECT_LE(relative_difference(mat_pow(i3, -0.5), i3), 1e-15);
}

TEST(MatPow, DiagonalSpectralMap) {
  const std::vector<double> d{4.0, 9.0};
  const std::vector<double> expect{2.0, 3.0};
  EXPECT_LE(relative_difference(mat_pow(SymMatrix::diagonal(d), 0.5), SymMatrix::diagonal(expect)),
            1e-15);
}

TEST(MatPow, IntegerPowerMatchesMultiplication) {
  const SymMatrix a(2, {2.0, 1.0, 1.0, 2.0});
  const Matrix square = oracle::int_power(a.matrix(), 2);
  EXPECT_EQ(square, Matrix(2, {5.0, 4.0, 4.0, 5.0}));
  EXPECT_LE(relative_difference(mat_pow(a, 2.0).matrix(), square), 1e-14);
}

TEST(MatPow, ZeroAndOneExponents) {
  RandomStream rng(3);
  const SymMatrix a = random_pd(4, rng);
  EXPECT_EQ(mat_pow(a, 0.0), SymMatrix::identity(4));
  EXPECT_LE(relative_difference(mat_pow(a, 1.0), a), 1e-12);
  EXPECT_LE(relative_difference(mat_pow(eigh(a), 1.0), a), 1e-12);
}

TEST(MatPow, IntegerPowersAcceptIndefinite) {
  const std::vector<double> d{-2.0, 5.0};
  const SymMatrix m = SymMatrix::diagonal(d);
  EXPECT_NO_THROW(mat_pow(m, 3.0));
  EXPECT_THROW(mat_pow(m, 0.5), NotPositiveDefinite);
  EXPECT_THROW(mat_pow(m, -1.0), NotPositiveDefinite);
}

TEST(MatPow, PositivityGateUsesAbsoluteTolerance) {
  const std::vector<double> d{1e-13, 1.0};
  const SymMatrix m = SymMatrix::diagonal(d);
  EXPECT_THROW(mat_pow(m, 0.5), NotPositiveDefinite);
  EXPECT_NO_THROW(mat_pow(m, 0.5, ToleranceModel{1e-8, 1e-14}));
}

TEST(MatLog, Examples) {
  EXPECT_EQ(mat_log(SymMatrix::identity(3)), SymMatrix(Matrix(3)));
  const std::vector<double> d{std::numbers::e, std::exp(2.0)};
  const std::vector<double> expect{1.0, 2.0};
  EXPECT_LE(relative_difference(mat_log(SymMatrix::diagonal(d)), SymMatrix::diagonal(expect)),
            1e-15);
  EXPECT_THROW(mat_log(SymMatrix(Matrix(2))), NotPositiveDefinite);
}

TEST(MatLog, CubeScalesLogarithm) {
  RandomStream rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const SymMatrix a = random_pd(gen::dim_in(rng, 2, 6), rng);
    const SymMatrix cube(oracle::int_power(a.matrix(), 3));
    EXPECT_LE(relative_difference(mat_log(cube), 3.0 * mat_log(a)), 1e-9);
  }
}

TEST(MatcoreProperty, SpectralIdentities) {
  RandomStream rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const SymMatrix a = random_pd(gen::dim_in(rng, 1, 8), rng);
    const double r1 = rng.uniform(-3.0, 3.0);
    const double r2 = rng.uniform(-3.0, 3.0);
    const double r = rng.uniform(0.1, 3.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);

    const SymMatrix product(mat_pow(a, r1).matrix() * mat_pow(a, r2).matrix());
    ASSERT_LE(relative_difference(product, mat_pow(a, r1 + r2)), 1e-8);
    ASSERT_LE(relative_difference(mat_pow(mat_pow(a, r), 1.0 / r), a), 1e-8);
    ASSERT_LE(relative_difference(mat_log(mat_pow(a, r)), r * mat_log(a)), 1e-8);
    ASSERT_LE(relative_difference(mat_exp(mat_log(a)), a), 1e-9);
    ASSERT_TRUE(exactly_symmetric(mat_pow(a, r)));
    ASSERT_TRUE(exactly_symmetric(mat_log(a)));
  }
}

TEST(MinEigenvalue, Examples) {
  EXPECT_EQ(min_eigenvalue(SymMatrix::identity(2)), 1.0);
  const std::vector<double> d{-2.0, 5.0};
  EXPECT_EQ(min_eigenvalue(SymMatrix::diagonal(d)), -2.0);
  EXPECT_NEAR(min_eigenvalue(SymMatrix(2, {2.0, 1.0, 1.0, 2.0})), 1.0, 1e-15);
}

TEST(PowerCache, ReusesDecomposition) {
  RandomStream rng(5);
  const SymMatrix a = random_pd(3, rng);
  PowerCache cache(a, {});
  const SymMatrix& first = cache.pow(0.5);
  const SymMatrix& again = cache.pow(0.5);
  EXPECT_EQ(&first, &again);
  EXPECT_EQ(first, mat_pow(eigh(a), 0.5));
}
