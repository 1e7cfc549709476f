/**
 * @file spectral.hpp
 * @brief Spectral calculus for SPD 3x3 tensors: clustered eigenvalues,
 *        eigenprojections, primary matrix functions and their Frechet
 *        derivatives (Daleckii-Krein divided differences).
 */
#pragma once

#include "corot/tensors.hpp"

#include <array>
#include <functional>
#include <vector>

namespace corot {

/// Relative tolerance below which two eigenvalues are treated as one.
inline constexpr double kDefaultClusterTol = 1e-8;

/// Clustered spectral representation A = sum_i mu_i P_i.
///
/// Distinct eigenvalues are ordered ascending. The raw (unclustered)
/// eigenpairs are kept alongside because divided differences and the
/// eigenbasis components d_ij are taken over raw indices.
struct Spectral3 {
  int m = 0;                          ///< eigenindex, number of distinct eigenvalues
  std::vector<double> eigenvalues;    ///< distinct mu_1 < ... < mu_m
  std::vector<int> multiplicities;    ///< m_i
  std::vector<SymTensor3> projections;

  Vector3 raw_eigenvalues;            ///< ascending, unclustered
  Tensor3 eigenvectors;               ///< orthonormal columns matching raw_eigenvalues
  std::array<int, 3> cluster_of{};    ///< raw index -> distinct index

  /// Distinct eigenvalue that raw eigenvalue k was merged into.
  double clustered_value(int k) const { return eigenvalues[cluster_of[k]]; }
  SymTensor3 reconstruct() const;
};

/// Raw symmetric eigen-decomposition by cyclic Jacobi rotations; eigenvalues
/// ascending, eigenvectors as orthonormal columns.
struct SymmetricEigen3 {
  Vector3 values;
  Tensor3 vectors;
};
SymmetricEigen3 symmetric_eigen(const SymTensor3& a);

/// Decompose an SPD tensor. Throws DomainError if any eigenvalue is <= 0.
Spectral3 spectral_decompose(const SymTensor3& a, double cluster_tol = kDefaultClusterTol);

/// Eigenprojections from Sylvester's interpolation formula
/// P_i = prod_{j != i} (A - mu_j I) / (mu_i - mu_j), given the distinct eigenvalues.
std::vector<SymTensor3> sylvester_projections(const SymTensor3& a,
                                              const std::vector<double>& distinct);

/// Scalar function on the positive reals with its derivative. An optional
/// divided difference overrides (f(a) - f(b)) / (a - b) where a closed form
/// avoids cancellation.
struct ScalarFunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  std::function<double(double, double)> divided_difference;

  /// f[a, b], switching to f'(a) when |a - b| <= tol * max(a, b).
  double divided(double a, double b, double tol = kDefaultClusterTol) const;
};

ScalarFunction log_function();
ScalarFunction power_function(double p);
ScalarFunction sqrt_function();

/// sum_i f(mu_i) P_i. Throws DomainError if f is not finite at an eigenvalue.
SymTensor3 primary_matrix_function(const SymTensor3& a, const ScalarFunction& f,
                                   double cluster_tol = kDefaultClusterTol);
SymTensor3 primary_matrix_function(const Spectral3& spec, const ScalarFunction& f);

/// Frechet derivative D_A f(A) as a 6x6 operator: in the eigenbasis of A
/// it multiplies component (k, l) by f[mu_k, mu_l].
Stiffness6 frechet_derivative(const SymTensor3& a, const ScalarFunction& f,
                              double cluster_tol = kDefaultClusterTol);
Stiffness6 frechet_derivative(const Spectral3& spec, const ScalarFunction& f);

/// D_B log B.
Stiffness6 frechet_log(const SymTensor3& b, double cluster_tol = kDefaultClusterTol);

SymTensor3 sqrt_spd(const SymTensor3& a);
SymTensor3 log_spd(const SymTensor3& a);
SymTensor3 inverse_spd(const SymTensor3& a);

}  // namespace corot
