/**
 * @file spins.hpp
 * @brief Material spins Omega = W + Upsilon(B, D) in coefficient (nu) form and
 *        in scalar-function (g) form, plus the classical catalog.
 */
#pragma once

#include "corot/kinematics.hpp"
#include "corot/spectral.hpp"
#include "corot/tensors.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace corot {

/// Principal invariants of B.
struct Invariants {
  double I1 = 3.0;
  double I2 = 3.0;
  double I3 = 1.0;
};
Invariants invariants(const SymTensor3& b);

/// Upsilon = nu1 skew(B D) + nu2 skew(B^2 D) + nu3 skew(B^2 D B), with each
/// nu_k an isotropic scalar function of B given through its invariants.
struct NuForm {
  std::function<Vector3(const Invariants&)> nu;
};

/// Upsilon = sum_{i != j} g(lambda_i, lambda_j) P_i D P_j over the
/// eigenprojections of V. g may read the invariants of B (Aifantis spins do).
struct GForm {
  std::function<double(double, double, const Invariants&)> g;
  bool continuous = true;
};

enum class Classical { ZJ, GN, Log, GS, Aif1, Aif2, Nu };

struct SpinGenerator {
  std::string name;
  Classical kind = Classical::ZJ;
  double zeta = 0.0;
  std::variant<NuForm, GForm> form;

  bool is_nu_form() const { return std::holds_alternative<NuForm>(form); }
  /// g-form view; nu-form generators are converted with nu_to_g.
  double g(double li, double lj, const Invariants& inv) const;
  /// Coefficients at B; nullopt for pure g-form generators.
  std::optional<Vector3> nu(const Invariants& inv) const;
  bool continuous() const;
};

SpinGenerator zaremba_jaumann();
SpinGenerator green_naghdi();
SpinGenerator logarithmic();
SpinGenerator gurtin_spear();
SpinGenerator aifantis(int variant, double zeta);
SpinGenerator nu_constant(double nu1, double nu2, double nu3);
SpinGenerator from_g(std::string name, std::function<double(double, double)> g, bool continuous = true);

/// Parses "zj", "gn", "log", "gs", "aif1:zeta=0.5", "aif2:0.5", "nu:1,0,0".
/// Throws std::invalid_argument on malformed text.
SpinGenerator parse_generator(const std::string& text);

enum class ClassicalG { ZJ, GN, Log, GS };

/// Classical g_ij. GS throws DiscontinuityError when |li - lj| <= tol * max(li, lj).
double g_classical(ClassicalG kind, double li, double lj, double tol = kDefaultClusterTol);

Vector3 aifantis_nu(int variant, double zeta, const SymTensor3& b);
Vector3 aifantis_nu(int variant, double zeta, const Invariants& inv);
double aifantis_g(int variant, double zeta, const SymTensor3& b, double li, double lj);
double aifantis_g(int variant, double zeta, const Invariants& inv, double li, double lj);

/// g = (li^2 - lj^2)/2 * [nu1 + nu2 (li^2 + lj^2) + nu3 li^2 lj^2].
double nu_to_g(const Vector3& nu, double li, double lj);

/// Upsilon(B, D) alone.
SkewTensor3 spin_correction(const SpinGenerator& gen, const SymTensor3& b, const SymTensor3& d);
SkewTensor3 spin_correction(const SpinGenerator& gen, const Spectral3& bspec, const SymTensor3& d);

/// W + Upsilon(B, D).
SkewTensor3 spin_tensor(const SpinGenerator& gen, const KinematicState& state);

}  // namespace corot
