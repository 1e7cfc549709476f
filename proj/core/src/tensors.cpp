#include "corot/tensors.hpp"

#include "corot/errors.hpp"

#include <cmath>

namespace corot {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

}  // namespace

SymTensor3 SymTensor3::from_components(double a11, double a22, double a33,
                                       double a12, double a13, double a23) {
  Tensor3 m;
  m << a11, a12, a13,
       a12, a22, a23,
       a13, a23, a33;
  return SymTensor3(Raw{}, m);
}

SymTensor3 SymTensor3::diag(double a11, double a22, double a33) {
  return from_components(a11, a22, a33, 0.0, 0.0, 0.0);
}

SymTensor3 SymTensor3::dev() const {
  return SymTensor3(Raw{}, corot::dev(m_));
}

SkewTensor3 SkewTensor3::from_components(double w12, double w13, double w23) {
  Tensor3 m;
  m << 0.0, w12, w13,
       -w12, 0.0, w23,
       -w13, -w23, 0.0;
  return SkewTensor3(m);
}

Vector6 embed6(const SymTensor3& h) {
  Vector6 v;
  v << h(0, 0), h(1, 1), h(2, 2), kSqrt2 * h(0, 1), kSqrt2 * h(0, 2), kSqrt2 * h(1, 2);
  return v;
}

SymTensor3 extract6(const Vector6& v) {
  return SymTensor3::from_components(v(0), v(1), v(2), v(3) / kSqrt2, v(4) / kSqrt2,
                                     v(5) / kSqrt2);
}

Vector6 unweighted_vec(const SymTensor3& h) {
  Vector6 v;
  v << h(0, 0), h(1, 1), h(2, 2), h(0, 1), h(1, 2), h(2, 0);
  return v;
}

SymTensor3 mandel_basis(int k) {
  Vector6 e = Vector6::Zero();
  e(k) = 1.0;
  return extract6(e);
}

Stiffness6 Stiffness6::from_action(const Action& action) {
  Matrix6 m;
  for (int k = 0; k < 6; ++k) m.col(k) = embed6(action(mandel_basis(k)));
  return Stiffness6(m);
}

Stiffness6 Stiffness6::inverse() const {
  Eigen::FullPivLU<Matrix6> lu(m_);
  if (!lu.isInvertible()) throw DomainError("Stiffness6::inverse: singular operator");
  return Stiffness6(lu.inverse());
}

Vector6 Stiffness6::symmetric_eigenvalues() const {
  const Matrix6 s = 0.5 * (m_ + m_.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix6> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Matrix6 Stiffness6::unweighted_quadratic_matrix() const {
  // Mandel coordinates v = T h with h the unweighted vector; the shear
  // entries are reordered (12, 23, 31) -> (12, 13, 23) and scaled by sqrt 2.
  Matrix6 t = Matrix6::Zero();
  t(0, 0) = 1.0;
  t(1, 1) = 1.0;
  t(2, 2) = 1.0;
  t(3, 3) = kSqrt2;  // 12 -> 12
  t(4, 5) = kSqrt2;  // 31 -> 13
  t(5, 4) = kSqrt2;  // 23 -> 23
  return t.transpose() * m_ * t;
}

}  // namespace corot
