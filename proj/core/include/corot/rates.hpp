/**
 * @file rates.hpp
 * @brief Isotropic stress laws sigma(B), corotational and non-corotational
 *        objective rates along motions, and the induced stiffness H(sigma).
 */
#pragma once

#include "corot/kinematics.hpp"
#include "corot/spectral.hpp"
#include "corot/spins.hpp"
#include "corot/tensors.hpp"

#include <functional>
#include <string>
#include <variant>

namespace corot {

/// phi = (phi0, phi1, phi2) and dphi(a, k) = d phi_a / d I_{k+1}.
struct RichterCoefficients {
  Vector3 phi = Vector3::Zero();
  Eigen::Matrix3d dphi = Eigen::Matrix3d::Zero();
};

/// sigma = phi0 I + phi1 B + phi2 B^2 with phi_a functions of (I1, I2, I3).
struct RichterLaw {
  std::function<RichterCoefficients(const Invariants&)> coefficients;
};

/// sigma = f(B) as a primary matrix function.
struct PrimaryLaw {
  ScalarFunction f;
};

struct StressLaw {
  std::string name;
  std::variant<RichterLaw, PrimaryLaw> form;
  /// sigma(alpha B) = sigma(B) for all alpha > 0.
  bool isochoric = false;
};

/// Scalar potential h(s) of a perfect elastic fluid, s = sqrt(det B).
struct FluidPotential {
  std::string name;
  std::function<double(double)> dh;   ///< h'
  std::function<double(double)> d2h;  ///< h''
};
FluidPotential quadratic_potential();  ///< h = s^2
FluidPotential cubic_potential();      ///< h = s^3

StressLaw linear_law();                       ///< sigma = B
StressLaw constant_law(double c);             ///< sigma = c I
StressLaw almansi_law();                      ///< sigma = (I - B^{-1}) / 2
StressLaw perfect_fluid_law(const FluidPotential& h);  ///< sigma = h'(sqrt det B) I
StressLaw isochoric_neo_hookean_law();        ///< sigma = B / (det B)^{1/3} - I
StressLaw isochoric_aifantis_law();           ///< phi = (-I2 c2, c1 + I1 c2, -c2), c_k = (det B)^{-k/3}
StressLaw log_law();                          ///< sigma = log B
StressLaw seth_hill_law(double m);            ///< sigma = E_m(B)
/// phi_a = c(a,0) + c(a,1) I1 + c(a,2) I2 + c(a,3) log I3.
StressLaw polynomial_richter_law(const Eigen::Matrix<double, 3, 4>& c, std::string name = "richter");

/// "linear", "constant:c", "almansi", "perfect-fluid:h=quadratic|cubic",
/// "isochoric-nh", "isochoric-aif2", "log", "seth-hill:m".
StressLaw parse_law(const std::string& text);

struct StressResponse {
  SymTensor3 sigma;
  Stiffness6 dsigma;  ///< D_B sigma(B)
};

/// Throws DomainError when B is not SPD or the law is undefined at B.
StressResponse sigma_and_gradient(const StressLaw& law, const SymTensor3& b);
SymTensor3 sigma_of(const StressLaw& law, const SymTensor3& b);

enum class NonCorotational { CotterRivlin, Oldroyd, BiezenoHencky, Truesdell };
NonCorotational parse_noncorotational(const std::string& text);
std::string to_string(NonCorotational kind);

/// sigma_dot - Omega sigma + sigma Omega.
SymTensor3 corotational_rate_of(const SkewTensor3& omega, const SymTensor3& sigma,
                                const SymTensor3& sigma_dot);
SymTensor3 noncorotational_rate_of(NonCorotational kind, const KinematicState& state,
                                   const SymTensor3& sigma, const SymTensor3& sigma_dot);

/// D°[sigma(B(t))] with sigma_dot = D sigma(B).B_dot.
SymTensor3 corotational_rate(const SpinGenerator& gen, const KinematicState& state, const StressLaw& law);
SymTensor3 noncorotational_rate(NonCorotational kind, const KinematicState& state, const StressLaw& law);

/// H = D sigma(B) o A(B).
Stiffness6 induced_stiffness_H(const SpinGenerator& gen, const StressLaw& law, const SymTensor3& b);

/// W + zeta (sigma D - D sigma) for an isochoric Richter law, i.e. the
/// nu-form (2 zeta phi1, 2 zeta phi2, 0). Throws std::invalid_argument for other laws.
SpinGenerator aifantis_spin(double zeta, const StressLaw& law);

}  // namespace corot
