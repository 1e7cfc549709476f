#include "oracles.hpp"

#include "corot/errors.hpp"
#include "corot/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace corot;

namespace {

void expect_projection_algebra(const Spectral3& s) {
  Tensor3 sum = Tensor3::Zero();
  for (int i = 0; i < s.m; ++i) {
    const Tensor3& pi = s.projections[i].matrix();
    sum += pi;
    EXPECT_NEAR(pi.trace(), s.multiplicities[i], 1e-10);
    for (int j = 0; j < s.m; ++j) {
      const Tensor3 expected = i == j ? pi : Tensor3::Zero().eval();
      EXPECT_LE((pi * s.projections[j].matrix() - expected).norm(), 1e-10);
    }
  }
  EXPECT_LE((sum - Tensor3::Identity()).norm(), 1e-12);
}

}  // namespace

TEST(Spectral, JacobiMatchesDenseSolver) {
  Rng rng(21);
  for (int k = 0; k < 500; ++k) {
    const SymTensor3 a = rng.sym();
    const SymmetricEigen3 e = symmetric_eigen(a);
    const auto ref = oracle::eig(a.matrix());
    EXPECT_LE((e.values - ref.eigenvalues()).norm(), 1e-13 * (1.0 + a.norm()));
    EXPECT_LE((e.vectors.transpose() * e.vectors - Tensor3::Identity()).norm(), 1e-14);
    EXPECT_LE((e.vectors * e.values.asDiagonal() * e.vectors.transpose() - a.matrix()).norm(), 1e-13 * a.norm());
  }
}

TEST(Spectral, IdentityHasOneCluster) {
  const Spectral3 s = spectral_decompose(SymTensor3::identity());
  ASSERT_EQ(s.m, 1);
  EXPECT_DOUBLE_EQ(s.eigenvalues[0], 1.0);
  EXPECT_EQ(s.multiplicities[0], 3);
  EXPECT_LE((s.projections[0].matrix() - Tensor3::Identity()).norm(), 1e-15);
}

TEST(Spectral, RepeatedEigenvalueDiagonal) {
  const Spectral3 s = spectral_decompose(SymTensor3::diag(1, 4, 4));
  ASSERT_EQ(s.m, 2);
  EXPECT_DOUBLE_EQ(s.eigenvalues[0], 1.0);
  EXPECT_DOUBLE_EQ(s.eigenvalues[1], 4.0);
  EXPECT_LE((s.projections[0] - SymTensor3::diag(1, 0, 0)).norm(), 1e-15);
  EXPECT_LE((s.projections[1] - SymTensor3::diag(0, 1, 1)).norm(), 1e-15);
}

TEST(Spectral, ConjugatedProjectionsMatchOracle) {
  Rng rng(22);
  for (int k = 0; k < 50; ++k) {
    const Tensor3 q = rng.rotation();
    const Spectral3 s = spectral_decompose(oracle::with_eigenvalues(Vector3(9, 1, 1), q));
    ASSERT_EQ(s.m, 2);
    const Tensor3 p9 = q * Vector3(1, 0, 0).asDiagonal() * q.transpose();
    const Tensor3 p1 = q * Vector3(0, 1, 1).asDiagonal() * q.transpose();
    EXPECT_LE((s.projections[0].matrix() - p1).norm(), 1e-12);
    EXPECT_LE((s.projections[1].matrix() - p9).norm(), 1e-12);
    expect_projection_algebra(s);
  }
}

TEST(Spectral, ClusteringThresholdIsRelative) {
  EXPECT_EQ(spectral_decompose(SymTensor3::diag(1.0, 1.0 + 5e-9, 2.0)).m, 2);
  EXPECT_EQ(spectral_decompose(SymTensor3::diag(1.0, 1.0 + 1e-6, 2.0)).m, 3);
  EXPECT_EQ(spectral_decompose(SymTensor3::diag(1e6, 1e6 + 1e-3, 1.0)).m, 2);
  EXPECT_EQ(spectral_decompose(SymTensor3::diag(1.0, 1.0 + 1e-6, 2.0), 1e-5).m, 2);
}

TEST(Spectral, RandomReconstructionAndProjectionAlgebra) {
  Rng rng(23);
  const double log_range = 0.5 * std::log(1e6);
  for (int k = 0; k < 10000; ++k) {
    const SymTensor3 a = rng.spd(log_range);
    const Spectral3 s = spectral_decompose(a);
    EXPECT_LE((s.reconstruct() - a).norm(), 1e-12 * a.norm());
    if (k % 50 == 0) expect_projection_algebra(s);
  }
}

TEST(Spectral, SylvesterAgreesWithEigenvectorProjections) {
  Rng rng(24);
  for (int k = 0; k < 200; ++k) {
    const Spectral3 s = spectral_decompose(rng.spd(1.0));
    const auto syl = sylvester_projections(s.reconstruct(), s.eigenvalues);
    ASSERT_EQ(syl.size(), s.projections.size());
    for (std::size_t i = 0; i < syl.size(); ++i) {
      EXPECT_LE((syl[i] - s.projections[i]).norm(), 1e-8);
    }
  }
}

TEST(Spectral, NonSpdIsRejected) {
  EXPECT_THROW(spectral_decompose(SymTensor3::diag(1, 0, 2)), DomainError);
  EXPECT_THROW(spectral_decompose(SymTensor3::diag(1, -1, 2)), DomainError);
  EXPECT_THROW(spectral_decompose(SymTensor3::diag(1, std::nan(""), 2)), DomainError);
  EXPECT_THROW(spectral_decompose(SymTensor3::identity(), 0.0), DomainError);
  EXPECT_THROW(log_spd(SymTensor3::diag(1, -2, 3)), DomainError);
  EXPECT_THROW(frechet_log(SymTensor3::diag(0, 2, 3)), DomainError);
}

TEST(Spectral, PrimaryFunctionExamples) {
  EXPECT_LE(log_spd(SymTensor3::identity()).norm(), 1e-15);
  EXPECT_LE((sqrt_spd(SymTensor3::diag(4, 9, 16)) - SymTensor3::diag(2, 3, 4)).norm(), 1e-15);

  Rng rng(25);
  const double e = std::numbers::e;
  for (int k = 0; k < 20; ++k) {
    const Tensor3 q = rng.rotation();
    const SymTensor3 a = oracle::with_eigenvalues(Vector3(e, e, e * e), q);
    const Tensor3 expected = q * Vector3(1, 1, 2).asDiagonal() * q.transpose();
    EXPECT_LE((log_spd(a).matrix() - expected).norm(), 1e-13);
    EXPECT_LE((log_spd(a).matrix() - oracle::logm(a.matrix())).norm(), 1e-12);
  }
}

TEST(Spectral, PrimaryFunctionsMatchMatrixFunctionOracles) {
  Rng rng(26);
  for (int k = 0; k < 300; ++k) {
    const SymTensor3 a = rng.spd();
    EXPECT_LE((log_spd(a).matrix() - oracle::logm(a.matrix())).norm(), 1e-11 * (1.0 + oracle::logm(a.matrix()).norm()));
    EXPECT_LE((sqrt_spd(a).matrix() - oracle::sqrtm(a.matrix())).norm(), 1e-12 * sqrt_spd(a).norm());
    EXPECT_LE((inverse_spd(a).matrix() * a.matrix() - Tensor3::Identity()).norm(), 1e-11);
    const double p = rng.uniform(-2.0, 2.0);
    const SymTensor3 ap = primary_matrix_function(a, power_function(p));
    EXPECT_LE((ap.matrix() - oracle::powm(a.matrix(), p)).norm(), 1e-10 * ap.norm());
  }
}

TEST(Spectral, PrimaryFunctionCommutesWithConjugation) {
  Rng rng(27);
  for (int k = 0; k < 200; ++k) {
    const SymTensor3 a = rng.spd();
    const Tensor3 q = rng.rotation();
    const SymTensor3 qa(Tensor3(q * a.matrix() * q.transpose()));
    for (const ScalarFunction& f : {log_function(), sqrt_function(), power_function(0.3)}) {
      const Tensor3 lhs = primary_matrix_function(qa, f).matrix();
      const Tensor3 rhs = q * primary_matrix_function(a, f).matrix() * q.transpose();
      EXPECT_LE((lhs - rhs).norm(), 1e-12 * (1.0 + rhs.norm()));
    }
  }
}

TEST(Spectral, PrimaryFunctionRejectsUndefinedValues) {
  ScalarFunction bad = log_function();
  bad.value = [](double x) { return x > 2.0 ? std::nan("") : x; };
  EXPECT_THROW(primary_matrix_function(SymTensor3::diag(1, 2, 3), bad), DomainError);
}

TEST(Spectral, DividedDifferencesAndLimits) {
  const ScalarFunction lg = log_function();
  EXPECT_NEAR(lg.divided(1.0, std::numbers::e), 1.0 / (std::numbers::e - 1.0), 1e-15);
  EXPECT_NEAR(lg.divided(2.0, 2.0), 0.5, 1e-15);
  EXPECT_NEAR(lg.divided(2.0, 2.0 + 1e-12), 1.0 / (2.0 + 5e-13), 1e-15);
  const ScalarFunction pw = power_function(2.5);
  EXPECT_NEAR(pw.divided(1.0, 4.0), (32.0 - 1.0) / 3.0, 1e-13);
  EXPECT_NEAR(pw.divided(3.0, 3.0 * (1.0 + 1e-10)), 2.5 * std::pow(3.0, 1.5), 1e-8);
  const ScalarFunction sq = sqrt_function();
  EXPECT_NEAR(sq.divided(4.0, 9.0), 1.0 / 5.0, 1e-15);
}

TEST(Spectral, FrechetLogExamples) {
  EXPECT_LE((frechet_log(SymTensor3::identity()).matrix() - Matrix6::Identity()).norm(), 1e-14);

  const double e = std::numbers::e;
  const SymTensor3 h = SymTensor3::from_components(0, 0, 0, 1, 0, 0);
  const SymTensor3 out = frechet_log(SymTensor3::diag(1, e, e)).apply(h);
  EXPECT_LE((out - (1.0 / (e - 1.0)) * h).norm(), 1e-14);
}

TEST(Spectral, FrechetLogMatchesFiniteDifferencesAndIsSpd) {
  Rng rng(28);
  int tested = 0;
  while (tested < 200) {
    const SymTensor3 b = rng.spd(1.5);
    const Vector3 mu = oracle::eig(b.matrix()).eigenvalues();
    const double gap = std::min(mu(1) - mu(0), mu(2) - mu(1)) / mu(2);
    const Stiffness6 dl = frechet_log(b);
    EXPECT_GT(dl.symmetric_eigenvalues().minCoeff(), 0.0);
    EXPECT_LE(dl.symmetry_defect(), 1e-12 * dl.norm());
    if (gap < 1e-2) continue;
    const SymTensor3 h = rng.sym();
    const Tensor3 fd = oracle::directional_fd([](const Tensor3& x) { return oracle::logm(x); }, b.matrix(),
                                              h.matrix(), 1e-6);
    const Tensor3 an = dl.apply(h).matrix();
    EXPECT_LE((an - fd).norm(), 1e-6 * an.norm());
    ++tested;
  }
}

TEST(Spectral, FrechetDerivativeOfSquareRootSolvesSylvester) {
  // d(sqrt A)[H] = X solves sqrt(A) X + X sqrt(A) = H.
  Rng rng(29);
  for (int k = 0; k < 100; ++k) {
    const SymTensor3 a = rng.spd(2.0);
    const SymTensor3 h = rng.sym();
    const Tensor3 v = oracle::sqrtm(a.matrix());
    const Tensor3 x = frechet_derivative(a, sqrt_function()).apply(h).matrix();
    EXPECT_LE((v * x + x * v - h.matrix()).norm(), 1e-11 * h.norm());
  }
}

TEST(Spectral, FrechetDerivativeAtClusteredEigenvalues) {
  // At a repeated eigenvalue the divided difference falls back to f'(mu).
  const SymTensor3 b = SymTensor3::diag(2.0, 2.0, 5.0);
  const SymTensor3 h = SymTensor3::from_components(0, 0, 0, 1, 0, 0);
  EXPECT_LE((frechet_log(b).apply(h) - 0.5 * h).norm(), 1e-15);
}
