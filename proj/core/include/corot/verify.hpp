/**
 * @file verify.hpp
 * @brief Executable checks of the corotational-rate identities along analytic
 *        motions, and a seeded suite runner producing a JSON-ready report.
 *
 * Residuals are relative: ||lhs - rhs|| / max(1, ||rhs||) unless noted.
 */
#pragma once

#include "corot/kinematics.hpp"
#include "corot/rates.hpp"
#include "corot/spins.hpp"
#include "corot/tensors.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace corot {

/// Either a corotational rate (through its spin) or a non-corotational one.
using RateSpec = std::variant<SpinGenerator, NonCorotational>;
std::string rate_name(const RateSpec& rate);

/// Rate of an arbitrary symmetric field sigma(t) along the motion at time t,
/// with d sigma/dt from a Richardson-extrapolated central difference.
SymTensor3 rate_of_field(const RateSpec& rate, const Motion& motion, double t,
                         const std::function<SymTensor3(double)>& field);

/// Three-level Richardson extrapolation of central differences, error O(h^6).
Tensor3 richardson_derivative(const std::function<Tensor3(double)>& f, double t, double h = 1e-2);

/// ||[Omega, sigma(B)] - D sigma(B).[Omega, B]|| / max(1, ||[Omega, sigma]||).
double check_commutator_identity(const StressLaw& law, const SymTensor3& b, const SkewTensor3& omega);

/// D[s1 s2] against D[s1] s2 + s1 D[s2]; the product field is differentiated numerically.
double check_product_rule(const RateSpec& rate, const Motion& motion, double t, const StressLaw& law1,
                          const StressLaw& law2);

/// FD(sigma) - Omega sigma + sigma Omega against D sigma(B).(A(B).D), step h.
double check_chain_rule(const SpinGenerator& gen, const Motion& motion, double t, const StressLaw& law,
                        double h = 1e-6);

/// |2 <D°[sigma], sigma> - d/dt ||sigma||^2| / max(1, ||sigma||^2), central FD with step h.
double check_norm_identity(const SpinGenerator& gen, const Motion& motion, double t, const StressLaw& law,
                           double h = 1e-6);

struct ConservationResult {
  double max_eigen_drift = 0.0;         ///< max_k |eig_k(sigma(t)) - eig_k(sigma0)|
  double max_norm_drift = 0.0;          ///< max | ||sigma(t)|| - ||sigma0|| |
  double max_orthogonality_defect = 0.0;
  int steps = 0;
  int reorthonormalizations = 0;
};

/// Integrates dQ/dt = Omega Q by the classical 4th-order Runge-Kutta method
/// from t0 and tracks sigma(t) = Q sigma0 Q^T. Q is re-orthonormalized by polar
/// projection only when ||Q^T Q - I|| exceeds 1e-8.
ConservationResult check_invariant_conservation(const SpinGenerator& gen, const Motion& motion,
                                                const SymTensor3& sigma0, double horizon = 1.0,
                                                double dt = 1e-3, double t0 = 0.0);

struct ObjectivityResult {
  double spin_residual = 0.0;  ///< ||Omega' - (dQ/dt Q^T + Q Omega Q^T)||
  double rate_residual = 0.0;  ///< relative ||D°[sigma'] - Q D°[sigma] Q^T||
};

/// Compares the motion with its superposed-rotation counterpart F' = Q(t) F.
ObjectivityResult check_objectivity(const SpinGenerator& gen, const Motion& motion, const Motion& rotation,
                                    double t, const StressLaw& law);

/// Max over generators of the deviation from h''(sqrt det B) sqrt(det B) tr(D) I,
/// relative to max(1, ||closed form||); covers every pairwise deviation.
double check_perfect_fluid(const std::vector<SpinGenerator>& gens, const KinematicState& state,
                           const FluidPotential& h);

/// ||rate of sigma = c I||, zero for every corotational rate.
double check_constant_identity(const RateSpec& rate, const KinematicState& state, double c);

/// ||Truesdell(c I) - c (tr D I - 2 D)||.
double check_truesdell_constant(const KinematicState& state, double c);

struct CheckRecord {
  std::string check;
  std::string generator;
  std::uint64_t seed = 0;
  double residual = 0.0;
  double threshold = 0.0;
  /// "<=" for identities, ">=" for designed counterexamples.
  std::string comparison = "<=";
  bool pass = false;
};

CheckRecord make_record(std::string check, std::string generator, std::uint64_t seed, double residual,
                        double threshold, bool expect_violation = false);

/// all, identities, commutator, product, chain, norm, perfect-fluid,
/// noncorotational, objectivity, conservation.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckRecord> run_suite(const std::string& suite, std::uint64_t seed);

}  // namespace corot
