#include "corot/kinematics.hpp"

#include "corot/errors.hpp"
#include "corot/spectral.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace corot {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Tensor3 cross_matrix(const Vector3& a) {
  Tensor3 k;
  k << 0.0, -a(2), a(1),
       a(2), 0.0, -a(0),
       -a(1), a(0), 0.0;
  return k;
}

Vector3 unit_axis(const Vector3& axis) {
  const double n = axis.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("rotation axis must be a nonzero finite vector");
  return axis / n;
}

}  // namespace

double ScalarPath::value(double t) const {
  return std::visit(overloaded{
      [t](const Polynomial& p) {
        double acc = 0.0;
        for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) acc = acc * t + *it;
        return acc;
      },
      [t](const Exponential& e) { return e.scale * std::exp(e.rate * t); },
      [t](const Sine& s) { return s.offset + s.amplitude * std::sin(s.omega * t + s.phase); },
  }, kind_);
}

double ScalarPath::rate(double t) const {
  return std::visit(overloaded{
      [t](const Polynomial& p) {
        double acc = 0.0;
        const auto n = p.coefficients.size();
        for (std::size_t k = n; k-- > 1;) acc = acc * t + static_cast<double>(k) * p.coefficients[k];
        return acc;
      },
      [t](const Exponential& e) { return e.scale * e.rate * std::exp(e.rate * t); },
      [t](const Sine& s) { return s.amplitude * s.omega * std::cos(s.omega * t + s.phase); },
  }, kind_);
}

Tensor3 rotation_about(const Vector3& axis, double angle) {
  const Tensor3 k = cross_matrix(unit_axis(axis));
  return Tensor3::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

Motion Motion::composite(Motion outer, Motion inner) {
  return Motion(Composite{std::make_shared<const Motion>(std::move(outer)),
                          std::make_shared<const Motion>(std::move(inner))});
}

Tensor3 Motion::F(double t) const {
  return std::visit(overloaded{
      [t](const SimpleShear& m) {
        Tensor3 f = Tensor3::Identity();
        f(0, 1) = m.gamma.value(t);
        return f;
      },
      [t](const Uniaxial& m) {
        Tensor3 f = Tensor3::Identity();
        f(0, 0) = m.stretch.value(t);
        return f;
      },
      [t](const RigidRotation& m) { return rotation_about(m.axis, m.rate * t); },
      [t](const TriaxialDiagonal& m) {
        return Tensor3(Vector3(m.a.value(t), m.b.value(t), m.c.value(t)).asDiagonal());
      },
      [t](const Composite& m) { return Tensor3(m.outer->F(t) * m.inner->F(t)); },
      [t](const TabulatedPolynomial& m) {
        Tensor3 acc = Tensor3::Zero();
        for (auto it = m.coefficients.rbegin(); it != m.coefficients.rend(); ++it) acc = acc * t + *it;
        return acc;
      },
  }, kind_);
}

Tensor3 Motion::Fdot(double t) const {
  return std::visit(overloaded{
      [t](const SimpleShear& m) {
        Tensor3 f = Tensor3::Zero();
        f(0, 1) = m.gamma.rate(t);
        return f;
      },
      [t](const Uniaxial& m) {
        Tensor3 f = Tensor3::Zero();
        f(0, 0) = m.stretch.rate(t);
        return f;
      },
      [t](const RigidRotation& m) {
        const Vector3 n = unit_axis(m.axis);
        return Tensor3(m.rate * cross_matrix(n) * rotation_about(n, m.rate * t));
      },
      [t](const TriaxialDiagonal& m) {
        return Tensor3(Vector3(m.a.rate(t), m.b.rate(t), m.c.rate(t)).asDiagonal());
      },
      [t](const Composite& m) {
        return Tensor3(m.outer->Fdot(t) * m.inner->F(t) + m.outer->F(t) * m.inner->Fdot(t));
      },
      [t](const TabulatedPolynomial& m) {
        Tensor3 acc = Tensor3::Zero();
        const auto n = m.coefficients.size();
        for (std::size_t k = n; k-- > 1;) acc = acc * t + static_cast<double>(k) * m.coefficients[k];
        return acc;
      },
  }, kind_);
}

std::string Motion::type_name() const {
  return std::visit(overloaded{
      [](const SimpleShear&) { return std::string("simple-shear"); },
      [](const Uniaxial&) { return std::string("uniaxial"); },
      [](const RigidRotation&) { return std::string("rigid-rotation"); },
      [](const TriaxialDiagonal&) { return std::string("triaxial"); },
      [](const Composite&) { return std::string("composite"); },
      [](const TabulatedPolynomial&) { return std::string("polynomial"); },
  }, kind_);
}

PolarDecomposition polar_decompose(const Tensor3& f) {
  if (!f.allFinite()) throw DomainError("polar_decompose: non-finite F");
  const double det = f.determinant();
  if (!(det > 0.0)) {
    std::ostringstream os;
    os << "polar_decompose: det F = " << det << " is not positive";
    throw DomainError(os.str());
  }

  // Newton iteration X <- (g X + X^{-T} / g) / 2 converges to the rotation factor.
  Tensor3 x = f;
  bool scaling = true;
  for (int it = 0; it < 100; ++it) {
    const Tensor3 xinv_t = x.inverse().transpose();
    double g = 1.0;
    if (scaling) g = std::sqrt(xinv_t.norm() / x.norm());
    const Tensor3 next = 0.5 * (g * x + xinv_t / g);
    const double delta = (next - x).norm();
    x = next;
    if (delta < 1e-2) scaling = false;
    if (delta <= 4.0 * std::numeric_limits<double>::epsilon()) break;
  }
  // One unscaled step after convergence tightens orthogonality to rounding level.
  x = 0.5 * (x + x.inverse().transpose());

  PolarDecomposition out;
  out.R = x;
  out.V = SymTensor3(Tensor3(f * x.transpose()));
  return out;
}

KinematicState state_from(const Tensor3& f, const Tensor3& fdot, double t) {
  if (!fdot.allFinite()) throw DomainError("state_at: non-finite dF/dt");
  const PolarDecomposition polar = polar_decompose(f);
  KinematicState s;
  s.t = t;
  s.F = f;
  s.Fdot = fdot;
  s.V = polar.V;
  s.R = polar.R;
  s.B = SymTensor3(Tensor3(f * f.transpose()));
  s.L = fdot * f.inverse();
  s.D = SymTensor3(s.L);
  s.W = SkewTensor3(s.L);
  s.Bdot = SymTensor3(Tensor3(2.0 * fdot * f.transpose()));
  return s;
}

KinematicState state_at(const Motion& motion, double t) {
  return state_from(motion.F(t), motion.Fdot(t), t);
}

SymTensor3 material_derivative_fd(const std::function<SymTensor3(double)>& field, double t,
                                  double h) {
  return (1.0 / (2.0 * h)) * (field(t + h) - field(t - h));
}

}  // namespace corot
