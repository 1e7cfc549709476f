/**
 * @file tensors.hpp
 * @brief Fixed-size 3x3 tensor values and the 6-dimensional representation
 *        of minor-symmetric fourth-order operators.
 *
 * Storage is a dense Eigen::Matrix3d throughout; SymTensor3 and SkewTensor3
 * keep the (anti)symmetry invariant by construction so that callers never
 * have to re-symmetrize.
 */
#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>

namespace corot {

using Tensor3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// Symmetric 3x3 tensor (B, D, sigma, strain measures).
class SymTensor3 {
 public:
  SymTensor3() : m_(Tensor3::Zero()) {}

  /// Symmetric part of an arbitrary matrix.
  explicit SymTensor3(const Tensor3& a) : m_(0.5 * (a + a.transpose())) {}

  static SymTensor3 from_components(double a11, double a22, double a33,
                                    double a12, double a13, double a23);
  static SymTensor3 diag(double a11, double a22, double a33);
  static SymTensor3 identity() { return diag(1.0, 1.0, 1.0); }
  static SymTensor3 zero() { return SymTensor3{}; }

  const Tensor3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace(); }
  double norm() const { return m_.norm(); }
  double determinant() const { return m_.determinant(); }
  SymTensor3 dev() const;

  SymTensor3& operator+=(const SymTensor3& o) { m_ += o.m_; return *this; }
  SymTensor3& operator-=(const SymTensor3& o) { m_ -= o.m_; return *this; }
  SymTensor3& operator*=(double s) { m_ *= s; return *this; }

  friend SymTensor3 operator+(SymTensor3 a, const SymTensor3& b) { return a += b; }
  friend SymTensor3 operator-(SymTensor3 a, const SymTensor3& b) { return a -= b; }
  friend SymTensor3 operator*(double s, SymTensor3 a) { return a *= s; }
  friend SymTensor3 operator*(SymTensor3 a, double s) { return a *= s; }
  friend SymTensor3 operator-(SymTensor3 a) { return a *= -1.0; }

 private:
  struct Raw {};
  SymTensor3(Raw, const Tensor3& a) : m_(a) {}
  Tensor3 m_;
};

/// Antisymmetric 3x3 tensor (W, spins).
class SkewTensor3 {
 public:
  SkewTensor3() : m_(Tensor3::Zero()) {}

  /// Skew part of an arbitrary matrix.
  explicit SkewTensor3(const Tensor3& a) : m_(0.5 * (a - a.transpose())) {}

  static SkewTensor3 from_components(double w12, double w13, double w23);
  static SkewTensor3 zero() { return SkewTensor3{}; }

  const Tensor3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double norm() const { return m_.norm(); }

  SkewTensor3& operator+=(const SkewTensor3& o) { m_ += o.m_; return *this; }
  SkewTensor3& operator-=(const SkewTensor3& o) { m_ -= o.m_; return *this; }
  SkewTensor3& operator*=(double s) { m_ *= s; return *this; }

  friend SkewTensor3 operator+(SkewTensor3 a, const SkewTensor3& b) { return a += b; }
  friend SkewTensor3 operator-(SkewTensor3 a, const SkewTensor3& b) { return a -= b; }
  friend SkewTensor3 operator*(double s, SkewTensor3 a) { return a *= s; }
  friend SkewTensor3 operator*(SkewTensor3 a, double s) { return a *= s; }

 private:
  Tensor3 m_;
};

inline Tensor3 sym(const Tensor3& a) { return 0.5 * (a + a.transpose()); }
inline Tensor3 skew(const Tensor3& a) { return 0.5 * (a - a.transpose()); }
inline Tensor3 dev(const Tensor3& a) { return a - (a.trace() / 3.0) * Tensor3::Identity(); }

/// Lie bracket [a, b] = a b - b a.
inline Tensor3 commutator(const Tensor3& a, const Tensor3& b) { return a * b - b * a; }

/// Frobenius inner product tr(a b^T).
inline double inner(const Tensor3& a, const Tensor3& b) { return a.cwiseProduct(b).sum(); }
inline double inner(const SymTensor3& a, const SymTensor3& b) { return inner(a.matrix(), b.matrix()); }

/// Orthonormal (Mandel) coordinates (h11, h22, h33, sqrt2 h12, sqrt2 h13, sqrt2 h23).
Vector6 embed6(const SymTensor3& h);
SymTensor3 extract6(const Vector6& v);

/// Unweighted coordinates (h11, h22, h33, h12, h23, h31) used in the
/// literature for tabulating 6x6 stiffness entries. Read-only convention.
Vector6 unweighted_vec(const SymTensor3& h);

/// Linear map Sym(3) -> Sym(3) represented in the orthonormal 6-basis.
class Stiffness6 {
 public:
  using Action = std::function<SymTensor3(const SymTensor3&)>;

  Stiffness6() : m_(Matrix6::Zero()) {}
  explicit Stiffness6(const Matrix6& m) : m_(m) {}

  static Stiffness6 identity() { return Stiffness6(Matrix6::Identity()); }
  /// Matrix of a linear action, built column by column on the basis tensors.
  static Stiffness6 from_action(const Action& action);

  const Matrix6& matrix() const { return m_; }
  SymTensor3 apply(const SymTensor3& h) const { return extract6(m_ * embed6(h)); }

  Stiffness6 transpose() const { return Stiffness6(m_.transpose()); }
  Stiffness6 inverse() const;
  double norm() const { return m_.norm(); }
  double symmetry_defect() const { return (m_ - m_.transpose()).norm(); }

  /// Eigenvalues of the symmetric part, ascending.
  Vector6 symmetric_eigenvalues() const;

  /// Matrix C~ of the quadratic form in unweighted coordinates:
  /// <C.H, H> = <C~ unweighted_vec(H), unweighted_vec(H)>.
  Matrix6 unweighted_quadratic_matrix() const;

  friend Stiffness6 operator*(const Stiffness6& a, const Stiffness6& b) {
    return Stiffness6(a.m_ * b.m_);
  }
  friend Stiffness6 operator+(const Stiffness6& a, const Stiffness6& b) {
    return Stiffness6(a.m_ + b.m_);
  }
  friend Stiffness6 operator-(const Stiffness6& a, const Stiffness6& b) {
    return Stiffness6(a.m_ - b.m_);
  }
  friend Stiffness6 operator*(double s, const Stiffness6& a) { return Stiffness6(s * a.m_); }

 private:
  Matrix6 m_;
};

/// Basis tensor k of the orthonormal 6-basis.
SymTensor3 mandel_basis(int k);

}  // namespace corot
