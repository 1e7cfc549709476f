#include "corot/sampling.hpp"

#include <cmath>
#include <numbers>

namespace corot {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  return r * std::cos(a);
}

Vector3 Rng::unit_vector() {
  Vector3 v;
  do {
    v = Vector3(normal(), normal(), normal());
  } while (v.norm() < 1e-12);
  return v.normalized();
}

Tensor3 Rng::rotation() {
  Eigen::Vector4d q;
  do {
    q = Eigen::Vector4d(normal(), normal(), normal(), normal());
  } while (q.norm() < 1e-12);
  q.normalize();
  const double w = q(0), x = q(1), y = q(2), z = q(3);
  Tensor3 r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
       2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
       2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y);
  return r;
}

SymTensor3 Rng::spd(double log_range) {
  const Tensor3 q = rotation();
  const Vector3 mu(std::exp(uniform(-log_range, log_range)), std::exp(uniform(-log_range, log_range)),
                   std::exp(uniform(-log_range, log_range)));
  return SymTensor3(Tensor3(q * mu.asDiagonal() * q.transpose()));
}

SymTensor3 Rng::sym() {
  const double a11 = normal(), a22 = normal(), a33 = normal();
  const double a12 = normal(), a13 = normal(), a23 = normal();
  return SymTensor3::from_components(a11, a22, a33, a12, a13, a23);
}

SkewTensor3 Rng::skew() {
  const double w12 = normal(), w13 = normal(), w23 = normal();
  return SkewTensor3::from_components(w12, w13, w23);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Motion random_motion(Rng& rng) {
  const Vector3 axis = rng.unit_vector();
  const double omega = rng.uniform(-2.0, 2.0);
  const double ka = rng.uniform(-0.8, 0.8);
  const double kb = rng.uniform(-0.8, 0.8);
  const double kc = rng.uniform(-0.8, 0.8);
  const double g0 = rng.uniform(-0.5, 0.5);
  const double g1 = rng.uniform(-1.0, 1.0);
  const double g2 = rng.uniform(-0.5, 0.5);

  Motion stretch(TriaxialDiagonal{ScalarPath::exponential(1.0, ka), ScalarPath::exponential(1.2, kb),
                                  ScalarPath::exponential(0.8, kc)});
  Motion shear(SimpleShear{ScalarPath(ScalarPath::Polynomial{{g0, g1, g2}})});
  return Motion::composite(Motion(RigidRotation{axis, omega}),
                           Motion::composite(std::move(stretch), std::move(shear)));
}

}  // namespace corot
