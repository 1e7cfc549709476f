#include "corot/strains.hpp"

#include "corot/errors.hpp"
#include "corot/sampling.hpp"
#include "corot/stiffness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace corot {

namespace {

bool is_small_integer(double m) { return m == std::round(m) && std::abs(m) <= 16.0; }

}  // namespace

SymTensor3 seth_hill(const SymTensor3& b, double m) {
  const Spectral3 spec = spectral_decompose(b);  // domain check
  if (m == 0.0) return 0.5 * primary_matrix_function(spec, log_function());
  if (is_small_integer(m)) {
    const Tensor3 base = m > 0.0 ? b.matrix() : Tensor3(inverse_spd(b).matrix());
    Tensor3 p = Tensor3::Identity();
    for (int k = 0; k < static_cast<int>(std::abs(m)); ++k) p = p * base;
    return (1.0 / (2.0 * m)) * SymTensor3(Tensor3(p - Tensor3::Identity()));
  }
  return primary_matrix_function(spec, seth_hill_function(m));
}

double scale_function(double m, double chi) {
  if (!(chi > 0.0)) throw DomainError("scale_function: chi must be positive");
  if (m == 0.0) return 0.5 * std::log(chi);
  return std::expm1(m * std::log(chi)) / (2.0 * m);
}

double scale_derivative(double m, double chi) {
  if (!(chi > 0.0)) throw DomainError("scale_derivative: chi must be positive");
  return 0.5 * std::pow(chi, m - 1.0);
}

double mirrored_scale_function(double m, double chi) {
  if (!(chi > 0.0)) throw DomainError("mirrored_scale_function: chi must be positive");
  if (m == 0.0) return 0.5 * std::log(chi);
  return -std::expm1(-m * std::log(chi)) / (2.0 * m);
}

ScalarFunction seth_hill_function(double m) {
  if (m == 0.0) {
    ScalarFunction lg = log_function();
    ScalarFunction f;
    f.value = [](double x) { return 0.5 * std::log(x); };
    f.derivative = [](double x) { return 0.5 / x; };
    f.divided_difference = [dd = lg.divided_difference](double a, double b) { return 0.5 * dd(a, b); };
    return f;
  }
  ScalarFunction pw = power_function(m);
  ScalarFunction f;
  f.value = [m](double x) { return scale_function(m, x); };
  f.derivative = [m](double x) { return scale_derivative(m, x); };
  f.divided_difference = [m, dd = pw.divided_difference](double a, double b) { return dd(a, b) / (2.0 * m); };
  return f;
}

Stiffness6 strain_gradient(const SymTensor3& b, double m) {
  return frechet_derivative(b, seth_hill_function(m));
}

double strain_rate_pairing(const SpinGenerator& gen, const SymTensor3& b, const SymTensor3& d, double m) {
  const Stiffness6 a = assemble_A(b, gen);
  const Stiffness6 de = strain_gradient(b, m);
  return inner(de.apply(a.apply(d)), d);
}

double strain_rate_pairing(const SpinGenerator& gen, const KinematicState& state, double m) {
  return strain_rate_pairing(gen, state.B, state.D, m);
}

PairingBatch pairing_batch(const SpinGenerator& gen, double m, std::uint64_t seed, int samples) {
  Rng rng(seed);
  PairingBatch out;
  out.generator = gen.name;
  out.m = m;
  out.seed = seed;
  out.samples = samples;
  out.min_value = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    const SymTensor3 b = rng.spd(3.0);
    const SymTensor3 d = rng.sym();
    const double v = strain_rate_pairing(gen, b, d, m) / inner(d, d);
    sum += v;
    out.min_value = std::min(out.min_value, v);
    if (!(v > 0.0)) ++out.counterexamples;
  }
  out.mean_value = samples > 0 ? sum / samples : 0.0;
  return out;
}

}  // namespace corot
