/**
 * @file sampling.hpp
 * @brief Seeded, platform-independent random sampling of tensors and motions.
 *
 * Only the raw 64-bit output of std::mt19937_64 is used; the mapping to
 * doubles and normals is done here so that results are bit-identical across
 * standard library implementations.
 */
#pragma once

#include "corot/kinematics.hpp"
#include "corot/tensors.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace corot {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  /// Standard normal (Box-Muller).
  double normal();

  Vector3 unit_vector();
  /// Haar-distributed proper rotation.
  Tensor3 rotation();
  /// Q diag(exp u) Q^T with u uniform in [-log_range, log_range]^3.
  SymTensor3 spd(double log_range = 3.0);
  /// Symmetric tensor with independent standard normal components.
  SymTensor3 sym();
  SkewTensor3 skew();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Independent stream seed derived from a base seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Rotation(random axis) o Triaxial(exponential paths) o SimpleShear(polynomial),
/// with moderate rates so that det F stays positive on t in [-2, 2].
Motion random_motion(Rng& rng);

}  // namespace corot
