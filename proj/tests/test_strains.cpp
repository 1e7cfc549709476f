#include "oracles.hpp"

#include "corot/stiffness.hpp"
#include "corot/strains.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace corot;

TEST(Strains, SethHillExamples) {
  for (double m : {-2.0, -1.0, 0.0, 0.25, 0.5, 1.0, 2.0, 3.7}) {
    EXPECT_LE(seth_hill(SymTensor3::identity(), m).norm(), 1e-15) << m;
  }
  const double e2 = std::exp(2.0);
  EXPECT_LE((seth_hill(SymTensor3::diag(e2, 1, 1), 0.0) - SymTensor3::diag(1, 0, 0)).norm(), 1e-15);

  Rng rng(91);
  for (int k = 0; k < 50; ++k) {
    const SymTensor3 b = rng.spd();
    const Tensor3 almansi = 0.5 * (Tensor3::Identity() - b.matrix().inverse());
    EXPECT_LE((seth_hill(b, -1.0).matrix() - almansi).norm(), 1e-12 * (1 + almansi.norm()));
  }
}

TEST(Strains, SethHillMatchesMatrixPowerOracle) {
  Rng rng(92);
  for (double m : {-2.0, -1.0, -0.5, 0.25, 0.5, 1.0, 2.0, 3.0, 1.7}) {
    for (int k = 0; k < 30; ++k) {
      const SymTensor3 b = rng.spd(1.5);
      const Tensor3 ref = (oracle::powm(b.matrix(), m) - Tensor3::Identity()) / (2 * m);
      EXPECT_LE((seth_hill(b, m).matrix() - ref).norm(), 1e-10 * (1 + ref.norm())) << m;
    }
  }
  for (int k = 0; k < 30; ++k) {
    const SymTensor3 b = rng.spd(1.5);
    const Tensor3 ref = 0.5 * oracle::logm(b.matrix());
    EXPECT_LE((seth_hill(b, 0.0).matrix() - ref).norm(), 1e-11 * (1 + ref.norm()));
  }
}

TEST(Strains, SethHillIsContinuousAtZero) {
  Rng rng(93);
  for (int k = 0; k < 30; ++k) {
    const SymTensor3 b = rng.spd(1.5);
    const SymTensor3 e0 = seth_hill(b, 0.0);
    EXPECT_LE((seth_hill(b, 1e-6) - e0).norm(), 1e-5 * (1 + e0.norm()));
    EXPECT_LE((seth_hill(b, -1e-6) - e0).norm(), 1e-5 * (1 + e0.norm()));
  }
}

TEST(Strains, ScaleFunctionNormalization) {
  for (double m : {-1.0, 0.0, 0.25, 0.5, 1.0, 2.0}) {
    EXPECT_NEAR(scale_function(m, 1.0), 0.0, 1e-16) << m;
    EXPECT_NEAR(scale_derivative(m, 1.0), 0.5, 1e-16) << m;
    EXPECT_NEAR(mirrored_scale_function(m, 1.0), 0.0, 1e-16) << m;
    const double h = 1e-6;
    for (double chi : {0.3, 1.0, 2.5}) {
      const double fd = (scale_function(m, chi + h) - scale_function(m, chi - h)) / (2 * h);
      EXPECT_NEAR(scale_derivative(m, chi), fd, 1e-8) << m;
    }
  }
  EXPECT_NEAR(scale_function(1.0, 3.0), 1.0, 1e-15);
  EXPECT_NEAR(scale_function(0.0, std::numbers::e), 0.5, 1e-15);
  EXPECT_NEAR(scale_function(0.5, 4.0), 1.0, 1e-15);
  EXPECT_NEAR(mirrored_scale_function(1.0, 2.0), 0.25, 1e-15);
  EXPECT_NEAR(mirrored_scale_function(2.0, 2.0), (1 - 0.25) / 4, 1e-15);
}

TEST(Strains, ScaleFunctionsAreMonotone) {
  for (double m : {0.25, 0.5, 1.0, 2.0}) {
    double prev = -1e300, prev_mirror = -1e300;
    for (int k = 1; k <= 400; ++k) {
      const double chi = 0.01 * k;
      EXPECT_GT(scale_function(m, chi), prev);
      EXPECT_GT(mirrored_scale_function(m, chi), prev_mirror);
      prev = scale_function(m, chi);
      prev_mirror = mirrored_scale_function(m, chi);
    }
  }
}

TEST(Strains, StrainGradientMatchesFiniteDifferences) {
  Rng rng(94);
  for (double m : {-2.0, 0.0, 0.5, 1.0, 2.0}) {
    for (int k = 0; k < 30; ++k) {
      const SymTensor3 b = rng.spd(1.0), h = rng.sym();
      const double step = 1e-5;
      const Tensor3 fd = (seth_hill(b + step * h, m).matrix() - seth_hill(b - step * h, m).matrix()) / (2 * step);
      const Tensor3 an = strain_gradient(b, m).apply(h).matrix();
      EXPECT_LE((an - fd).norm(), 1e-6 * std::max(1.0, an.norm())) << m;
    }
  }
}

TEST(Strains, PairingExamples) {
  Rng rng(95);
  for (int k = 0; k < 50; ++k) {
    const SymTensor3 b = rng.spd(), d = rng.sym();
    const Tensor3 bm = b.matrix(), dm = d.matrix();
    const double zj1 = 0.5 * inner(Tensor3(dm * bm + bm * dm), dm);
    EXPECT_NEAR(strain_rate_pairing(zaremba_jaumann(), b, d, 1.0), zj1, 1e-11 * std::abs(zj1));
    EXPECT_GT(zj1, 0.0);

    // GN with m = 0: (1/2) <D log B [2 V D V], D>, with D log B by finite differences.
    const Tensor3 v = oracle::sqrtm(bm);
    const Tensor3 vdv = 2.0 * v * dm * v;
    const Tensor3 dlog = oracle::directional_fd([](const Tensor3& x) { return oracle::logm(x); }, bm, vdv, 1e-6);
    const double gn0 = 0.5 * inner(dlog, dm);
    EXPECT_NEAR(strain_rate_pairing(green_naghdi(), b, d, 0.0), gn0, 1e-6 * std::abs(gn0));
    EXPECT_GT(gn0, 0.0);

    // Log with m = 0: D^log[(1/2) log B] = D, so the pairing is |D|^2.
    EXPECT_NEAR(strain_rate_pairing(logarithmic(), b, d, 0.0), inner(d, d), 1e-9 * inner(d, d));
  }
}

TEST(Strains, PairingMatchesChainRuleAlongMotion) {
  Rng rng(96);
  for (int k = 0; k < 10; ++k) {
    const Motion m = random_motion(rng);
    const KinematicState s = state_at(m, 0.5);
    for (double mm : {-1.0, 0.0, 2.0}) {
      auto field = [&](double tau) { return seth_hill(state_at(m, tau).B, mm); };
      const SymTensor3 fd = material_derivative_fd(field, 0.5, 1e-6);
      const Tensor3 om = spin_tensor(green_naghdi(), s).matrix();
      const Tensor3 e = seth_hill(s.B, mm).matrix();
      const Tensor3 rate = fd.matrix() - om * e + e * om;
      EXPECT_NEAR(strain_rate_pairing(green_naghdi(), s, mm), inner(rate, s.D.matrix()),
                  1e-6 * std::max(1.0, s.D.norm() * s.D.norm()));
    }
  }
}

TEST(Strains, PairingBatchIsDeterministicAndPositive) {
  const PairingBatch a = pairing_batch(zaremba_jaumann(), 2.0, 7, 500);
  const PairingBatch b = pairing_batch(zaremba_jaumann(), 2.0, 7, 500);
  EXPECT_EQ(a.mean_value, b.mean_value);
  EXPECT_EQ(a.min_value, b.min_value);
  EXPECT_EQ(a.samples, 500);
  EXPECT_EQ(a.counterexamples, 0);
  EXPECT_GT(a.min_value, 0.0);
  EXPECT_EQ(a.generator, "zj");
  const PairingBatch gs = pairing_batch(nu_constant(-3.0, 0.0, 0.0), 1.0, 7, 500);
  EXPECT_GT(gs.counterexamples, 0);
}
