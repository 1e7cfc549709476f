#include "oracles.hpp"

#include "corot/errors.hpp"
#include "corot/stiffness.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <numbers>
#include <vector>

using namespace corot;

namespace {

// A.D = D B + B D + B Y - Y B, where Y is the spin correction, assembled
// from Eigen's eigenvectors (g-form) or directly from the nu coefficients.
Matrix6 oracle_A_g(const SymTensor3& b, const std::function<double(double, double)>& g) {
  const auto es = oracle::eig(b.matrix());
  const Tensor3 q = es.eigenvectors();
  const Vector3 lam = es.eigenvalues().cwiseSqrt();
  const Tensor3 bm = b.matrix();
  return oracle::dense_operator([&](const Tensor3& d) -> Tensor3 {
    const Tensor3 dh = q.transpose() * d * q;
    Tensor3 yh = Tensor3::Zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) yh(i, j) = g(lam(i), lam(j)) * dh(i, j);
    const Tensor3 y = q * yh * q.transpose();
    return d * bm + bm * d + bm * y - y * bm;
  });
}

Matrix6 oracle_A_nu(const SymTensor3& b, const Vector3& nu) {
  const Tensor3 bm = b.matrix();
  return oracle::dense_operator([&](const Tensor3& d) -> Tensor3 {
    const Tensor3 y = nu(0) * skew(bm * d) + nu(1) * skew(bm * bm * d) + nu(2) * skew(bm * bm * d * bm);
    return d * bm + bm * d + bm * y - y * bm;
  });
}

// Daleckii-Krein matrix of D log at B, from Eigen's eigen-decomposition.
Matrix6 oracle_dlog(const SymTensor3& b) {
  const auto es = oracle::eig(b.matrix());
  const Tensor3 q = es.eigenvectors();
  const Vector3 mu = es.eigenvalues();
  return oracle::dense_operator([&](const Tensor3& h) -> Tensor3 {
    Tensor3 hh = q.transpose() * h * q;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double dd = std::abs(mu(i) - mu(j)) > 1e-9 * mu(2) ? (std::log(mu(i)) - std::log(mu(j))) / (mu(i) - mu(j))
                                                                 : 1.0 / mu(i);
        hh(i, j) *= dd;
      }
    return q * hh * q.transpose();
  });
}

double rel_diff(const Matrix6& a, const Matrix6& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

std::vector<SpinGenerator> generators() {
  return {zaremba_jaumann(), green_naghdi(), logarithmic(), aifantis(1, 0.5), aifantis(2, 2.0),
          nu_constant(0.3, -0.1, 0.02)};
}

Vector3 random_nu(Rng& rng) { return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}; }

}  // namespace

TEST(Stiffness, IdentityStretchGivesTwiceIdentity) {
  Rng rng(51);
  for (int k = 0; k < 10; ++k) {
    const Stiffness6 a = assemble_A_nu(SymTensor3::identity(), random_nu(rng));
    EXPECT_LE((a.matrix() - 2.0 * Matrix6::Identity()).norm(), 1e-14);
  }
  for (const auto& gen : generators()) {
    EXPECT_LE((assemble_A(SymTensor3::identity(), gen).matrix() - 2.0 * Matrix6::Identity()).norm(), 1e-14);
  }
}

TEST(Stiffness, DiagonalShearExample) {
  const SymTensor3 b = SymTensor3::diag(1, 4, 9);
  const SymTensor3 d = SymTensor3::from_components(0, 0, 0, 1, 0, 0);
  EXPECT_NEAR(inner(assemble_A_nu(b, Vector3::Zero()).apply(d), d), 10.0, 1e-13);
  EXPECT_NEAR(quadratic_form_decomposed(b, zaremba_jaumann(), d), 10.0, 1e-13);
}

TEST(Stiffness, MatchesDenseOracles) {
  Rng rng(52);
  for (int k = 0; k < 300; ++k) {
    const SymTensor3 b = rng.spd();
    const Vector3 nu = random_nu(rng);
    EXPECT_LE(rel_diff(assemble_A_nu(b, nu).matrix(), oracle_A_nu(b, nu)), 1e-12);
    const Matrix6 gn = oracle_A_g(b, [](double li, double lj) { return (lj - li) / (li + lj); });
    EXPECT_LE(rel_diff(assemble_A_g(b, green_naghdi()).matrix(), gn), 1e-12);
    const Matrix6 gs = oracle_A_g(b, [](double li, double lj) { return (li * li + lj * lj) / (lj * lj - li * li); });
    EXPECT_LE(rel_diff(assemble_A_g(b, gurtin_spear()).matrix(), gs), 1e-10);
  }
}

TEST(Stiffness, ClassicalClosedForms) {
  Rng rng(53);
  for (int k = 0; k < 300; ++k) {
    const SymTensor3 b = rng.spd();
    const Tensor3 bm = b.matrix();
    const Tensor3 v = oracle::sqrtm(bm);
    const Matrix6 zj = oracle::dense_operator([&](const Tensor3& d) -> Tensor3 { return d * bm + bm * d; });
    const Matrix6 gn = oracle::dense_operator([&](const Tensor3& d) -> Tensor3 { return 2.0 * v * d * v; });
    EXPECT_LE(rel_diff(assemble_A_g(b, zaremba_jaumann()).matrix(), zj), 1e-12);
    EXPECT_LE(rel_diff(assemble_A_g(b, green_naghdi()).matrix(), gn), 1e-10);
    const Matrix6 alog = 2.0 * oracle_dlog(b).inverse();
    EXPECT_LE(rel_diff(assemble_A_g(b, logarithmic()).matrix(), alog), 1e-9);
  }
}

TEST(Stiffness, NuAndGRoutesAgree) {
  Rng rng(54);
  for (int k = 0; k < 1000; ++k) {
    const SymTensor3 b = rng.spd();
    const Vector3 nu = random_nu(rng);
    const Stiffness6 an = assemble_A_nu(b, nu);
    const Stiffness6 ag = assemble_A_g(b, nu_constant(nu(0), nu(1), nu(2)));
    EXPECT_LE((an - ag).norm(), 1e-10 * an.norm());
  }
}

TEST(Stiffness, MajorSymmetry) {
  Rng rng(55);
  std::vector<SpinGenerator> gens = generators();
  gens.push_back(gurtin_spear());
  for (const auto& gen : gens) {
    for (int k = 0; k < 200; ++k) {
      const Stiffness6 a = assemble_A(rng.spd(), gen);
      EXPECT_LE(a.symmetry_defect(), 1e-12 * a.norm()) << gen.name;
    }
  }
}

TEST(Stiffness, QuadraticFormDecomposition) {
  Rng rng(56);
  std::vector<SpinGenerator> gens = generators();
  gens.push_back(gurtin_spear());
  for (const auto& gen : gens) {
    for (int k = 0; k < 200; ++k) {
      const SymTensor3 b = rng.spd(), d = rng.sym();
      const double direct = inner(assemble_A(b, gen).apply(d), d);
      const double decomposed = quadratic_form_decomposed(b, gen, d);
      EXPECT_LE(std::abs(direct - decomposed), 1e-10 * std::max(1.0, std::abs(direct)) * b.norm())
          << gen.name;
    }
  }
}

TEST(Stiffness, QuadraticFormExamples) {
  Rng rng(57);
  const Tensor3 q = rng.rotation();
  const SymTensor3 b = oracle::with_eigenvalues(Vector3(1, 4, 9), q);
  const SymTensor3 d_diag = oracle::with_eigenvalues(Vector3(0.5, -1, 2), q);
  EXPECT_NEAR(quadratic_form_decomposed(b, green_naghdi(), d_diag), 2 * (0.25 + 4 + 36), 1e-11);

  Tensor3 shear = Tensor3::Zero();
  shear(0, 1) = shear(1, 0) = 1.0;
  const SymTensor3 d_shear(Tensor3(q * shear * q.transpose()));
  EXPECT_NEAR(quadratic_form_decomposed(b, gurtin_spear(), d_shear), 0.0, 1e-13);
}

TEST(Stiffness, PositivityEquivalence) {
  Rng rng(58);
  int positives = 0, negatives = 0;
  for (int k = 0; k < 10000; ++k) {
    const SymTensor3 b = rng.spd();
    const Vector3 nu(rng.uniform(-1, 1), 0.5 * rng.uniform(-1, 1), 0.1 * rng.uniform(-1, 1));
    const SpinGenerator gen = nu_constant(nu(0), nu(1), nu(2));
    const ZTable t = z_table(b, gen);
    double min_z = std::numeric_limits<double>::infinity();
    for (const auto& e : t.entries) min_z = std::min(min_z, e.z);
    const double min_eig = assemble_A(b, gen).symmetric_eigenvalues().minCoeff();
    const double eps = 1e-12 * b.norm();
    if (std::abs(min_z) < eps) continue;
    EXPECT_EQ(min_z > 0, min_eig > 0);
    (min_z > 0 ? positives : negatives)++;
  }
  EXPECT_GT(positives, 100);
  EXPECT_GT(negatives, 100);
}

TEST(Stiffness, SpectrumIsTwiceEigenvaluesAndZ) {
  Rng rng(59);
  for (int k = 0; k < 200; ++k) {
    const SymTensor3 b = rng.spd();
    const SpinGenerator gen = nu_constant(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    std::vector<double> expected;
    const Vector3 mu = oracle::eig(b.matrix()).eigenvalues();
    for (int i = 0; i < 3; ++i) expected.push_back(2 * mu(i));
    for (const auto& e : z_table(b, gen).entries) expected.push_back(e.z);
    std::sort(expected.begin(), expected.end());
    const Vector6 got = assemble_A(b, gen).symmetric_eigenvalues();
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(got(i), expected[i], 1e-10 * std::max(1.0, std::abs(expected[5])));
  }
}

TEST(Stiffness, ConjugationCovariance) {
  Rng rng(60);
  for (const auto& gen : generators()) {
    for (int k = 0; k < 100; ++k) {
      const SymTensor3 b = rng.spd(), d = rng.sym();
      const Tensor3 q = rng.rotation();
      const SymTensor3 qb(Tensor3(q * b.matrix() * q.transpose()));
      const SymTensor3 pulled(Tensor3(q.transpose() * d.matrix() * q));
      const Tensor3 lhs = assemble_A(qb, gen).apply(d).matrix();
      const Tensor3 rhs = q * assemble_A(b, gen).apply(pulled).matrix() * q.transpose();
      EXPECT_LE((lhs - rhs).norm(), 1e-10 * (1 + rhs.norm())) << gen.name;
    }
  }
}

TEST(Stiffness, TotalPositivityIsSufficient) {
  Rng rng(61);
  for (int k = 0; k < 2000; ++k) {
    const Vector3 nu(rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2));
    EXPECT_GT(assemble_A_nu(rng.spd(), nu).symmetric_eigenvalues().minCoeff(), 0.0);
  }
  for (double zeta : {0.0, 0.1, 1.0, 10.0}) {
    for (int k = 0; k < 200; ++k) {
      EXPECT_GT(assemble_A(rng.spd(), aifantis(1, zeta)).symmetric_eigenvalues().minCoeff(), 0.0);
    }
  }
}

TEST(Stiffness, ZTableExamples) {
  const SymTensor3 b = SymTensor3::diag(1, 4, 4);
  const ZTable zj = z_table(b, zaremba_jaumann());
  ASSERT_EQ(zj.entries.size(), 1u);
  EXPECT_DOUBLE_EQ(zj.entries[0].lambda_i, 1.0);
  EXPECT_DOUBLE_EQ(zj.entries[0].lambda_j, 2.0);
  EXPECT_NEAR(zj.entries[0].z, 5.0, 1e-15);
  EXPECT_NEAR(z_table(b, green_naghdi()).entries[0].z, 4.0, 1e-15);
  EXPECT_NEAR(z_table(b, logarithmic()).entries[0].z, 3.0 / std::log(2.0), 1e-14);
  EXPECT_TRUE(z_table(SymTensor3::identity(), green_naghdi()).entries.empty());

  const ZTable gs = z_table(SymTensor3::diag(1, 4, 9), gurtin_spear());
  ASSERT_EQ(gs.entries.size(), 3u);
  for (const auto& e : gs.entries) EXPECT_LE(std::abs(e.z), 1e-14);
}

TEST(Stiffness, ZIsSymmetricInThePair) {
  Rng rng(62);
  for (const ClassicalG kind : {ClassicalG::ZJ, ClassicalG::GN, ClassicalG::Log}) {
    for (int k = 0; k < 200; ++k) {
      const double li = std::exp(rng.uniform(-2, 2)), lj = std::exp(rng.uniform(-2, 2));
      const double zij = z_value(li, lj, g_classical(kind, li, lj));
      const double zji = z_value(lj, li, g_classical(kind, lj, li));
      EXPECT_NEAR(zij, zji, 1e-12 * zij);
    }
  }
}

TEST(Stiffness, GbarExamples) {
  EXPECT_DOUBLE_EQ(gbar(GbarKind::ZJ, 2.0), 5.0);
  EXPECT_DOUBLE_EQ(gbar(GbarKind::GN, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(gbar(GbarKind::GN, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(gbar(GbarKind::Log, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(gbar(GbarKind::GS, 3.0), 0.0);
  EXPECT_NEAR(gbar(GbarKind::Log, 2.0), 3.0 / std::log(2.0), 1e-15);
  EXPECT_NEAR(gbar(GbarKind::Log, 1.0 + 1e-7), 2.0, 1e-6);
  EXPECT_NEAR(gbar(GbarKind::Log, 1.0 - 1e-7), 2.0, 1e-6);
  EXPECT_EQ(parse_gbar_kind("log"), GbarKind::Log);
  EXPECT_THROW(parse_gbar_kind("aif1"), std::invalid_argument);
}

TEST(Stiffness, GenericGbarMatchesClosedForms) {
  Rng rng(63);
  for (int k = 0; k < 1000; ++k) {
    const double z = std::exp(rng.uniform(-3, 3));
    EXPECT_NEAR(gbar(zaremba_jaumann(), z), z * z + 1, 1e-12 * (z * z + 1));
    EXPECT_NEAR(gbar(green_naghdi(), z), 2 * z, 1e-12 * (z * z + 1));
    EXPECT_NEAR(gbar(logarithmic(), z), (z * z - 1) / std::log(z), 1e-11 * (z * z + 1));
  }
}

TEST(Stiffness, ClassifyClassicalRates) {
  Rng rng(64);
  for (int k = 0; k < 500; ++k) {
    const SymTensor3 b = rng.spd();
    for (const auto& gen : {zaremba_jaumann(), green_naghdi(), logarithmic()}) {
      const RateClassification c = classify(b, gen);
      EXPECT_TRUE(c.positive) << gen.name;
      EXPECT_TRUE(c.invertible) << gen.name;
      EXPECT_FALSE(c.witness_D.has_value());
    }
    const RateClassification gs = classify(b, gurtin_spear());
    EXPECT_FALSE(gs.invertible);
    EXPECT_FALSE(gs.positive);
    EXPECT_TRUE(gs.degenerate);
  }
}

TEST(Stiffness, ClassifyAifantisAndNuForms) {
  const SymTensor3 b = SymTensor3::diag(0.5, 2.0, 7.0);
  const RateClassification a2 = classify(b, aifantis(2, 1.0));
  EXPECT_TRUE(a2.positive);
  ASSERT_TRUE(a2.totally_positive.has_value());
  EXPECT_FALSE(*a2.totally_positive);
  const RateClassification a1 = classify(b, aifantis(1, 1.0));
  EXPECT_TRUE(a1.positive);
  EXPECT_TRUE(*a1.totally_positive);

  const RateClassification id = classify(SymTensor3::identity(), nu_constant(5, -3, 7));
  EXPECT_TRUE(id.positive);
  EXPECT_EQ(id.eigenindex, 1);
  EXPECT_FALSE(id.min_z.has_value());
  EXPECT_FALSE(classify(b, green_naghdi()).totally_positive.has_value());
}

TEST(Stiffness, ClassifyWitnessAndImplications) {
  Rng rng(65);
  int negative = 0;
  for (int k = 0; k < 2000; ++k) {
    const SymTensor3 b = rng.spd();
    const SpinGenerator gen = nu_constant(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    const RateClassification c = classify(b, gen);
    if (c.positive) EXPECT_TRUE(c.invertible);
    if (c.totally_positive.value_or(false)) EXPECT_TRUE(c.positive);
    if (!c.positive) {
      ++negative;
      ASSERT_TRUE(c.witness_D.has_value());
      const SymTensor3 w = *c.witness_D;
      EXPECT_NEAR(w.norm(), 1.0, 1e-12);
      const double q = inner(assemble_A(b, gen).apply(w), w);
      EXPECT_LE(q, c.eps_pos + 1e-10 * b.norm());
      EXPECT_NEAR(q, c.min_eig_A, 1e-9 * std::max(1.0, assemble_A(b, gen).norm()));
    }
  }
  EXPECT_GT(negative, 50);
}

TEST(Stiffness, GurtinSpearDegenerateStretchesThrow) {
  EXPECT_THROW(assemble_A_g(SymTensor3::diag(1, 4, 4), gurtin_spear()), DiscontinuityError);
  EXPECT_THROW(z_table(SymTensor3::identity(), gurtin_spear()), DiscontinuityError);
  EXPECT_THROW(classify(SymTensor3::diag(2, 2, 5), gurtin_spear()), DiscontinuityError);
  EXPECT_THROW(assemble_A_nu(SymTensor3::diag(1, -1, 1), Vector3::Zero()), DomainError);
}

TEST(Stiffness, ShearEntryComparison) {
  const A44Report r = a44_report(100, 2024);
  ASSERT_EQ(r.rows.size(), 300u);
  EXPECT_LE(r.max_rel_two_z_vs_direct, 1e-10);
  EXPECT_GT(r.max_rel_tabulated_vs_direct, 1e-3);
  EXPECT_LE(r.max_rel_tabulated_vs_direct_nu1_only, 1e-10);
  EXPECT_FALSE(r.verdict.empty());

  // Independent check of one row: the unweighted quadratic-form diagonal is 2 z.
  const Vector3 mu(0.5, 2.0, 3.0), nu(0.2, -0.4, 0.3);
  const SymTensor3 b = SymTensor3::diag(mu(0), mu(1), mu(2));
  const Matrix6 q = assemble_A_nu(b, nu).unweighted_quadratic_matrix();
  const double g = nu_to_g(nu, std::sqrt(mu(0)), std::sqrt(mu(1)));
  EXPECT_NEAR(q(3, 3), 2 * z_value(std::sqrt(mu(0)), std::sqrt(mu(1)), g), 1e-12);
  const double s = mu(0) + mu(1), dl = mu(0) - mu(1), p = mu(0) * mu(1);
  EXPECT_NEAR(tabulated_shear_entry(nu, mu(0), mu(1)), 2 * s + 0.5 * dl * dl * (2 * nu(0) + nu(1) * s + nu(2) * p),
              1e-13);
}
