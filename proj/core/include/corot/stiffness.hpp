/**
 * @file stiffness.hpp
 * @brief Tangent stiffness A(B) with D°[B] = A(B).D, its characteristic
 *        values z_ij and gbar(Z), and positivity / invertibility classification.
 */
#pragma once

#include "corot/spectral.hpp"
#include "corot/spins.hpp"
#include "corot/tensors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corot {

/// Action D B + B D + (nu1/2)(B[B,D] - [B,D]B) + (nu2/2)(B^2[B,D] - [B,D]B^2)
///        + (nu3/2)(B^2[B,D]B - B[B,D]B^2).
Stiffness6 assemble_A_nu(const SymTensor3& b, const Vector3& nu);

/// Action B D + D B + sum_{i != j} g_ij (lambda_i^2 - lambda_j^2) P_i D P_j,
/// evaluated in the eigenbasis of B.
Stiffness6 assemble_A_g(const SymTensor3& b, const SpinGenerator& gen);

/// Coefficient route for nu-form generators, g route otherwise.
Stiffness6 assemble_A(const SymTensor3& b, const SpinGenerator& gen);

struct ZEntry {
  int i = 0;  ///< distinct-eigenvalue index, ascending, i < j
  int j = 0;
  double lambda_i = 0.0;
  double lambda_j = 0.0;
  double g = 0.0;
  double z = 0.0;
};

struct ZTable {
  std::vector<ZEntry> entries;
  std::vector<double> stretches;  ///< distinct lambda_i
};

/// z = li^2 + lj^2 + g (li^2 - lj^2), with the product accumulated by a fused multiply-add.
double z_value(double li, double lj, double g);

ZTable z_table(const SymTensor3& b, const SpinGenerator& gen);
ZTable z_table(const Spectral3& bspec, const SpinGenerator& gen);

enum class GbarKind { ZJ, GN, Log, GS };

/// Closed forms Z^2 + 1, 2Z, (Z^2 - 1)/log Z, 0.
double gbar(GbarKind kind, double z);
/// Generic Z^2 + 1 + g(Z, 1)(Z^2 - 1) for a generator whose g ignores the invariants.
double gbar(const SpinGenerator& gen, double z);
GbarKind parse_gbar_kind(const std::string& name);

/// 2 sum_i lambda_i^2 d_ii^2 + sum_{i != j} z_ij d_ij^2 with d_ij the
/// components of D in the eigenbasis of B.
double quadratic_form_decomposed(const SymTensor3& b, const SpinGenerator& gen, const SymTensor3& d);

struct RateClassification {
  bool positive = false;
  bool invertible = false;
  std::optional<bool> totally_positive;
  bool degenerate = false;
  std::optional<double> min_z;
  double min_eig_A = 0.0;
  double eps_pos = 0.0;
  int eigenindex = 0;
  std::optional<SymTensor3> witness_D;
};

/// Decides positivity from the z values and from the spectrum of the symmetric
/// 6x6 matrix; the two must agree or RouteDisagreement is thrown.
RateClassification classify(const SymTensor3& b, const SpinGenerator& gen);

/// One row of the comparison between the tabulated a44-type closed form, 2 z
/// from nu_to_g and the brute-force diagonal entry of the quadratic-form matrix.
struct A44Row {
  Vector3 mu;        ///< eigenvalues of B (diagonal)
  Vector3 nu;
  int pair_i = 0;    ///< 0-based eigen indices of the shear pair
  int pair_j = 1;
  double tabulated = 0.0;  ///< 2 s + (1/2) Delta^2 (2 nu1 + nu2 s + nu3 p)
  double two_z = 0.0;      ///< 2 z_ij from nu_to_g
  double direct = 0.0;     ///< unweighted quadratic-form diagonal entry
};

struct A44Report {
  std::vector<A44Row> rows;
  double max_rel_tabulated_vs_direct = 0.0;
  double max_rel_two_z_vs_direct = 0.0;
  double max_rel_tabulated_vs_direct_nu1_only = 0.0;
  std::string verdict;
};

/// Tabulated shear entry 2 s + (1/2) Delta^2 (2 nu1 + nu2 s + nu3 p), s = mi + mj, p = mi mj.
/// Agrees with the assembled diagonal entry only when nu2 = nu3 = 0; the
/// assembled entry equals 2 z_ij.
double tabulated_shear_entry(const Vector3& nu, double mi, double mj);

A44Report a44_report(int samples, unsigned long long seed);

}  // namespace corot
