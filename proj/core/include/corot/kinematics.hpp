/**
 * @file kinematics.hpp
 * @brief Analytic homogeneous motions t -> F(t) and the Eulerian fields
 *        derived from them.
 */
#pragma once

#include "corot/tensors.hpp"

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace corot {

/// Scalar function of time with a closed-form derivative.
class ScalarPath {
 public:
  struct Polynomial { std::vector<double> coefficients; };  ///< c0 + c1 t + ...
  struct Exponential { double scale = 1.0; double rate = 0.0; };  ///< scale * exp(rate t)
  struct Sine { double offset = 0.0; double amplitude = 0.0; double omega = 1.0; double phase = 0.0; };
  using Kind = std::variant<Polynomial, Exponential, Sine>;

  ScalarPath() : kind_(Polynomial{{0.0}}) {}
  explicit ScalarPath(Kind k) : kind_(std::move(k)) {}

  static ScalarPath constant(double c) { return ScalarPath(Polynomial{{c}}); }
  static ScalarPath linear(double c0, double c1) { return ScalarPath(Polynomial{{c0, c1}}); }
  static ScalarPath exponential(double scale, double rate) { return ScalarPath(Exponential{scale, rate}); }
  static ScalarPath sine(double offset, double amplitude, double omega, double phase = 0.0) {
    return ScalarPath(Sine{offset, amplitude, omega, phase});
  }

  double value(double t) const;
  double rate(double t) const;
  const Kind& kind() const { return kind_; }

 private:
  Kind kind_;
};

class Motion;

struct SimpleShear { ScalarPath gamma; };               ///< F = I + gamma e1 (x) e2
struct Uniaxial { ScalarPath stretch; };                ///< F = diag(a, 1, 1)
struct RigidRotation { Vector3 axis{0.0, 0.0, 1.0}; double rate = 1.0; };  ///< F = exp(t rate [axis]x)
struct TriaxialDiagonal { ScalarPath a, b, c; };        ///< F = diag(a, b, c)
struct Composite {                                      ///< F = F_outer F_inner
  std::shared_ptr<const Motion> outer;
  std::shared_ptr<const Motion> inner;
};
struct TabulatedPolynomial { std::vector<Tensor3> coefficients; };  ///< F = sum_k C_k t^k

/// Immutable descriptor of an analytic motion; supplies F(t) and dF/dt in closed form.
class Motion {
 public:
  using Kind = std::variant<SimpleShear, Uniaxial, RigidRotation, TriaxialDiagonal, Composite,
                            TabulatedPolynomial>;

  Motion(Kind k) : kind_(std::move(k)) {}  // NOLINT(google-explicit-constructor)

  static Motion composite(Motion outer, Motion inner);

  Tensor3 F(double t) const;
  Tensor3 Fdot(double t) const;
  const Kind& kind() const { return kind_; }

  /// Short type tag used by the configuration format.
  std::string type_name() const;

 private:
  Kind kind_;
};

/// Eulerian kinematic quantities at time t.
struct KinematicState {
  double t = 0.0;
  Tensor3 F;
  Tensor3 Fdot;
  SymTensor3 B;
  SymTensor3 V;
  Tensor3 R;
  Tensor3 L;
  SymTensor3 D;
  SkewTensor3 W;
  SymTensor3 Bdot;
};

struct PolarDecomposition {
  SymTensor3 V;
  Tensor3 R;
};

/// Left polar decomposition F = V R by the scaled Newton iteration for the
/// orthogonal factor. Throws DomainError when det F <= 0.
PolarDecomposition polar_decompose(const Tensor3& f);

/// Throws DomainError when det F(t) <= 0 or F is not finite.
KinematicState state_at(const Motion& motion, double t);

/// Kinematic state of an arbitrary (F, dF/dt) pair.
KinematicState state_from(const Tensor3& f, const Tensor3& fdot, double t = 0.0);

/// Central difference (field(t + h) - field(t - h)) / (2h).
SymTensor3 material_derivative_fd(const std::function<SymTensor3(double)>& field, double t,
                                  double h = 1e-6);

/// Rotation exp(angle [axis]x) for a unit axis (Rodrigues).
Tensor3 rotation_about(const Vector3& axis, double angle);

}  // namespace corot
