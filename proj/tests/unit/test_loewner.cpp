#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "loewner_lab/errors.hpp"
#include "loewner_lab/loewner.hpp"
#include "loewner_lab/matcore.hpp"
#include "loewner_lab/search.hpp"
#include "oracles.hpp"

using namespace loewner_lab;

namespace {

SymMatrix diag(std::vector<double> d) { return SymMatrix::diagonal(d); }

}  // namespace

TEST(LoewnerGeq, Examples) {
  const auto i2 = SymMatrix::identity(2);
  const auto v = loewner_geq(2.0 * i2, i2);
  EXPECT_TRUE(v.holds);
  EXPECT_GT(v.margin, 0.0);

  RandomStream rng(1);
  const SymMatrix a = random_pd(4, rng);
  const auto same = loewner_geq(a, a);
  EXPECT_TRUE(same.holds);
  EXPECT_EQ(same.margin, 0.0);

  // λmin(diag(1, −1)) = −1, scale max(1, √5, √5).
  const auto crossed = loewner_geq(diag({2, 1}), diag({1, 2}));
  EXPECT_FALSE(crossed.holds);
  EXPECT_NEAR(crossed.margin, -1.0 / std::sqrt(5.0), 1e-15);
}

TEST(LoewnerGeq, DimensionMismatch) {
  EXPECT_THROW(loewner_geq(SymMatrix::identity(2), SymMatrix::identity(3)), DimensionMismatch);
  EXPECT_THROW(chaotic_geq(SymMatrix::identity(2), SymMatrix::identity(3)), DimensionMismatch);
}

TEST(LoewnerGeq, HoldsIffMarginAboveSlack) {
  const ToleranceModel tol{1e-3, 1e-12};
  const auto inside = loewner_geq(diag({1.0, 1.0 - 5e-4}), diag({1.0, 1.0}), tol);
  EXPECT_TRUE(inside.holds);
  EXPECT_LT(inside.margin, 0.0);
  const auto outside = loewner_geq(diag({1.0, 1.0 - 5e-3}), diag({1.0, 1.0}), tol);
  EXPECT_FALSE(outside.holds);
}

TEST(LoewnerProperty, CommutingPairsMatchScalarOracle) {
  RandomStream rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::dim_in(rng, 1, 6);
    const Matrix q = random_orthogonal(n, rng);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.uniform(-5, 5);
      y[i] = x[i] + rng.uniform(-1, 1) * (rng.uniform() < 0.3 ? 1e-2 : 1.0);
    }
    const double expected = oracle::diagonal_margin(x, y);
    const auto v = loewner_geq(oracle::conjugate(q, x), oracle::conjugate(q, y));
    ASSERT_NEAR(v.margin, expected, 1e-12) << "trial " << trial;
    if (std::abs(expected) > 1e-9) ASSERT_EQ(v.holds, expected >= 0.0);
  }
}

TEST(LoewnerProperty, MutualDominanceForcesNearEquality) {
  RandomStream rng(31);
  const ToleranceModel tol;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::dim_in(rng, 1, 6);
    const SymMatrix a = random_pd(n, rng);
    const SymMatrix b = a + 1e-10 * gen::symmetric(n, rng, 1.0);
    const auto ab = loewner_geq(a, b, tol);
    const auto ba = loewner_geq(b, a, tol);
    if (ab.holds && ba.holds) {
      ASSERT_LE((a - b).frobenius_norm(), 2.0 * tol.rel * margin_scale(a, b) * std::sqrt(n));
    }
  }
}

TEST(LoewnerProperty, VerdictScaleInvariantOutsideBand) {
  RandomStream rng(8);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::dim_in(rng, 2, 5);
    const SymMatrix a = random_pd(n, rng);
    const SymMatrix b = random_pd(n, rng);
    const auto base = loewner_geq(a, b);
    bool outside = true;
    for (double c : {1e-3, 1.0, 1e3}) {
      if (std::abs(loewner_geq(c * a, c * b).margin) < 1e-6) outside = false;
    }
    if (!outside) continue;
    ++checked;
    for (double c : {1e-3, 1.0, 1e3}) ASSERT_EQ(loewner_geq(c * a, c * b).holds, base.holds);
  }
  EXPECT_GT(checked, 100);
}

TEST(ChaoticGeq, Examples) {
  const auto i3 = SymMatrix::identity(3);
  EXPECT_TRUE(chaotic_geq(std::numbers::e * i3, i3).holds);
  // log 0.1 − log 0.2 = −log 2 on the second eigenvalue.
  const auto v = chaotic_geq(diag({4, 0.1}), diag({2, 0.2}));
  EXPECT_FALSE(v.holds);
  const double la = std::log(4.0), lb = std::log(0.1), ma = std::log(2.0), mb = std::log(0.2);
  EXPECT_NEAR(v.margin,
              -std::log(2.0) / std::max({1.0, std::hypot(la, lb), std::hypot(ma, mb)}), 1e-14);
  EXPECT_THROW(chaotic_geq(diag({1, 0}), diag({1, 1})), NotPositiveDefinite);
}

TEST(ChaoticProperty, OperatorOrderImpliesChaoticOrder) {
  RandomStream rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::dim_in(rng, 2, 6);
    const SymMatrix b = random_pd(n, rng);
    const SymMatrix a = b + random_psd(n, rng, rng.uniform(0.01, 3.0));
    ASSERT_TRUE(loewner_geq(a, b).holds);
    ASSERT_TRUE(chaotic_geq(a, b).holds) << "trial " << trial;
  }
}

TEST(LoewnerHeinz, Examples) {
  const auto i2 = SymMatrix::identity(2);
  const auto v = loewner_heinz_check(4.0 * i2, i2, 0.5);
  EXPECT_TRUE(v.holds);
  EXPECT_NEAR(v.margin, 1.0 / (2.0 * std::sqrt(2.0)), 1e-15);

  RandomStream rng(2);
  const SymMatrix b = random_pd(3, rng);
  const SymMatrix a = b + random_psd(3, rng);
  EXPECT_EQ(loewner_heinz_check(a, b, 1.0).margin, loewner_geq(a, b).margin);

  EXPECT_THROW(loewner_heinz_check(a, b, 1.5), BadExponent);
  EXPECT_THROW(loewner_heinz_check(a, b, -0.1), BadExponent);
  EXPECT_THROW(loewner_heinz_check(diag({1, 0}), diag({1, 0}), 0.5), NotPositiveDefinite);
}

TEST(LoewnerHeinzProperty, NeverFailsForDominatedPairs) {
  RandomStream rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::dim_in(rng, 2, 6);
    const SymMatrix b = random_pd(n, rng);
    const SymMatrix a = b + random_psd(n, rng, rng.uniform(0.01, 3.0));
    const double alpha = trial == 0 ? 0.37 : rng.uniform();
    ASSERT_TRUE(loewner_heinz_check(a, b, alpha).holds) << "trial " << trial;
  }
}

TEST(EqualityVerdict, TwoSided) {
  const auto eq = equality_verdict(diag({1, 2}), diag({1, 2}));
  EXPECT_TRUE(eq.holds);
  EXPECT_EQ(eq.margin, 0.0);
  EXPECT_FALSE(equality_verdict(diag({1, 3}), diag({1, 2})).holds);
  EXPECT_FALSE(equality_verdict(diag({1, 2}), diag({1, 3})).holds);
}
