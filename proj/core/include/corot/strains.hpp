/**
 * @file strains.hpp
 * @brief Seth-Hill strain family, scale functions and strain-rate pairings.
 */
#pragma once

#include "corot/kinematics.hpp"
#include "corot/spectral.hpp"
#include "corot/spins.hpp"
#include "corot/tensors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace corot {

/// E_m(B) = (B^m - I)/(2m), or log(B)/2 for m = 0. Integer m uses repeated products.
SymTensor3 seth_hill(const SymTensor3& b, double m);

/// e_m(x) = (x^m - 1)/(2m), or log(x)/2 for m = 0.
double scale_function(double m, double chi);
double scale_derivative(double m, double chi);
/// (1 - x^{-m})/(2m), or log(x)/2 for m = 0.
double mirrored_scale_function(double m, double chi);

/// e_m with derivative and a cancellation-free divided difference.
ScalarFunction seth_hill_function(double m);

/// D_B E_m(B).
Stiffness6 strain_gradient(const SymTensor3& b, double m);

/// <D°[E_m(B)], D> = <D E_m(B).(A(B).D), D>.
double strain_rate_pairing(const SpinGenerator& gen, const SymTensor3& b, const SymTensor3& d, double m);
double strain_rate_pairing(const SpinGenerator& gen, const KinematicState& state, double m);

struct PairingBatch {
  std::string generator;
  double m = 0.0;
  std::uint64_t seed = 0;
  int samples = 0;
  double mean_value = 0.0;   ///< mean of the normalized pairing <.,.>/|D|^2
  double min_value = 0.0;    ///< minimum of the normalized pairing
  int counterexamples = 0;   ///< samples with pairing <= 0
};

/// Normalized pairings over `samples` random (B, D) drawn from `seed`.
PairingBatch pairing_batch(const SpinGenerator& gen, double m, std::uint64_t seed, int samples);

}  // namespace corot
