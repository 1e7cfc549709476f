#include "corot/spectral.hpp"

#include "corot/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace corot {

namespace {

constexpr int kMaxSweeps = 64;

void require_finite(const SymTensor3& a, const char* where) {
  if (!a.matrix().allFinite()) {
    throw DomainError(std::string(where) + ": non-finite tensor entries");
  }
}

}  // namespace

SymmetricEigen3 symmetric_eigen(const SymTensor3& sym_a) {
  require_finite(sym_a, "symmetric_eigen");
  Tensor3 a = sym_a.matrix();
  Tensor3 v = Tensor3::Identity();

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    const double diag = a(0, 0) * a(0, 0) + a(1, 1) * a(1, 1) + a(2, 2) * a(2, 2);
    if (off == 0.0 || off <= eps * eps * 1e-4 * diag) break;

    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        if (std::abs(apq) <= 0.25 * eps * std::sqrt(std::abs(a(p, p) * a(q, q))) * eps) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        const int r = 3 - p - q;
        const double arp = a(r, p);
        const double arq = a(r, q);
        a(r, p) = a(p, r) = c * arp - s * arq;
        a(r, q) = a(q, r) = s * arp + c * arq;
        for (int k = 0; k < 3; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  SymmetricEigen3 out;
  for (int k = 0; k < 3; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

SymTensor3 Spectral3::reconstruct() const {
  SymTensor3 out;
  for (int i = 0; i < m; ++i) out += eigenvalues[i] * projections[i];
  return out;
}

Spectral3 spectral_decompose(const SymTensor3& a, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw DomainError("spectral_decompose: cluster_tol must be > 0");
  const SymmetricEigen3 eig = symmetric_eigen(a);
  if (!(eig.values(0) > 0.0)) {
    std::ostringstream os;
    os << "spectral_decompose: tensor is not positive definite (min eigenvalue "
       << eig.values(0) << ")";
    throw DomainError(os.str());
  }

  Spectral3 s;
  s.raw_eigenvalues = eig.values;
  s.eigenvectors = eig.vectors;

  const double scale = eig.values(2);
  std::vector<std::vector<int>> clusters{{0}};
  for (int k = 1; k < 3; ++k) {
    if (eig.values(k) - eig.values(k - 1) <= cluster_tol * scale) {
      clusters.back().push_back(k);
    } else {
      clusters.push_back({k});
    }
  }

  s.m = static_cast<int>(clusters.size());
  for (int i = 0; i < s.m; ++i) {
    double sum = 0.0;
    Tensor3 p = Tensor3::Zero();
    for (int k : clusters[i]) {
      sum += eig.values(k);
      p += eig.vectors.col(k) * eig.vectors.col(k).transpose();
      s.cluster_of[k] = i;
    }
    const int mult = static_cast<int>(clusters[i].size());
    s.eigenvalues.push_back(sum / mult);
    s.multiplicities.push_back(mult);
    s.projections.emplace_back(p);
  }
  return s;
}

std::vector<SymTensor3> sylvester_projections(const SymTensor3& a,
                                              const std::vector<double>& distinct) {
  const auto m = distinct.size();
  if (m == 1) return {SymTensor3::identity()};
  std::vector<SymTensor3> out;
  out.reserve(m);
  const Tensor3 id = Tensor3::Identity();
  for (std::size_t i = 0; i < m; ++i) {
    Tensor3 p = id;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      p = p * (a.matrix() - distinct[j] * id) / (distinct[i] - distinct[j]);
    }
    out.emplace_back(p);
  }
  return out;
}

double ScalarFunction::divided(double a, double b, double tol) const {
  if (std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b))) {
    return derivative(0.5 * (a + b));
  }
  if (divided_difference) return divided_difference(a, b);
  return (value(a) - value(b)) / (a - b);
}

ScalarFunction log_function() {
  ScalarFunction f;
  f.value = [](double x) { return std::log(x); };
  f.derivative = [](double x) { return 1.0 / x; };
  f.divided_difference = [](double a, double b) {
    const double delta = (a - b) / b;
    if (std::abs(delta) < 0.5) return std::log1p(delta) / (a - b);
    return (std::log(a) - std::log(b)) / (a - b);
  };
  return f;
}

ScalarFunction power_function(double p) {
  ScalarFunction f;
  f.value = [p](double x) { return std::pow(x, p); };
  f.derivative = [p](double x) { return p * std::pow(x, p - 1.0); };
  f.divided_difference = [p](double a, double b) {
    const double delta = (a - b) / b;
    if (std::abs(delta) < 0.5) {
      // (a^p - b^p)/(a - b) = b^(p-1) * expm1(p log1p(delta)) / delta
      return std::pow(b, p - 1.0) * std::expm1(p * std::log1p(delta)) / delta;
    }
    return (std::pow(a, p) - std::pow(b, p)) / (a - b);
  };
  return f;
}

ScalarFunction sqrt_function() {
  ScalarFunction f;
  f.value = [](double x) { return std::sqrt(x); };
  f.derivative = [](double x) { return 0.5 / std::sqrt(x); };
  f.divided_difference = [](double a, double b) { return 1.0 / (std::sqrt(a) + std::sqrt(b)); };
  return f;
}

SymTensor3 primary_matrix_function(const Spectral3& spec, const ScalarFunction& f) {
  SymTensor3 out;
  for (int i = 0; i < spec.m; ++i) {
    const double fi = f.value(spec.eigenvalues[i]);
    if (!std::isfinite(fi)) {
      std::ostringstream os;
      os << "primary_matrix_function: f undefined at eigenvalue " << spec.eigenvalues[i];
      throw DomainError(os.str());
    }
    out += fi * spec.projections[i];
  }
  return out;
}

SymTensor3 primary_matrix_function(const SymTensor3& a, const ScalarFunction& f,
                                   double cluster_tol) {
  return primary_matrix_function(spectral_decompose(a, cluster_tol), f);
}

Stiffness6 frechet_derivative(const Spectral3& spec, const ScalarFunction& f) {
  Eigen::Matrix3d gamma;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      const int ck = spec.cluster_of[k];
      const int cl = spec.cluster_of[l];
      const double mk = spec.eigenvalues[ck];
      const double ml = spec.eigenvalues[cl];
      gamma(k, l) = (ck == cl) ? f.derivative(mk) : f.divided(mk, ml, 0.0);
      if (!std::isfinite(gamma(k, l))) {
        throw DomainError("frechet_derivative: divided difference not finite");
      }
    }
  }
  const Tensor3& q = spec.eigenvectors;
  return Stiffness6::from_action([&](const SymTensor3& h) {
    const Tensor3 local = q.transpose() * h.matrix() * q;
    return SymTensor3(Tensor3(q * gamma.cwiseProduct(local) * q.transpose()));
  });
}

Stiffness6 frechet_derivative(const SymTensor3& a, const ScalarFunction& f, double cluster_tol) {
  return frechet_derivative(spectral_decompose(a, cluster_tol), f);
}

Stiffness6 frechet_log(const SymTensor3& b, double cluster_tol) {
  return frechet_derivative(b, log_function(), cluster_tol);
}

SymTensor3 sqrt_spd(const SymTensor3& a) { return primary_matrix_function(a, sqrt_function()); }
SymTensor3 log_spd(const SymTensor3& a) { return primary_matrix_function(a, log_function()); }
SymTensor3 inverse_spd(const SymTensor3& a) {
  return primary_matrix_function(a, power_function(-1.0));
}

}  // namespace corot
