#include "corot/spins.hpp"

#include "corot/errors.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace corot {

namespace {

using detail::lower;
using detail::parse_double;
using detail::strip;

// 1/x - coth(x) for x = log(li / lj).
double g_log_impl(double li, double lj) {
  const double ratio = li / lj;
  if (std::abs(ratio - 1.0) < 1e-4) {
    const double x = std::log1p(ratio - 1.0);
    const double x2 = x * x;
    return x * (-1.0 / 3.0 + x2 * (1.0 / 45.0 + x2 * (-2.0 / 945.0 + x2 / 4725.0)));
  }
  const double x = std::log(li) - std::log(lj);
  return 1.0 / x - 1.0 / std::tanh(x);
}

std::string format_number(double v) { return detail::format_shortest(v); }

}  // namespace

Invariants invariants(const SymTensor3& b) {
  const Tensor3& m = b.matrix();
  Invariants inv;
  inv.I1 = m.trace();
  inv.I2 = 0.5 * (inv.I1 * inv.I1 - (m * m).trace());
  inv.I3 = m.determinant();
  return inv;
}

double SpinGenerator::g(double li, double lj, const Invariants& inv) const {
  if (const auto* gf = std::get_if<GForm>(&form)) return gf->g(li, lj, inv);
  return nu_to_g(std::get<NuForm>(form).nu(inv), li, lj);
}

std::optional<Vector3> SpinGenerator::nu(const Invariants& inv) const {
  if (const auto* nf = std::get_if<NuForm>(&form)) return nf->nu(inv);
  return std::nullopt;
}

bool SpinGenerator::continuous() const {
  if (const auto* gf = std::get_if<GForm>(&form)) return gf->continuous;
  return true;
}

double g_classical(ClassicalG kind, double li, double lj, double tol) {
  if (!(li > 0.0) || !(lj > 0.0)) throw DomainError("g_classical: stretches must be positive");
  switch (kind) {
    case ClassicalG::ZJ:
      return 0.0;
    case ClassicalG::GN:
      return (lj - li) / (li + lj);
    case ClassicalG::Log:
      return g_log_impl(li, lj);
    case ClassicalG::GS: {
      if (std::abs(li - lj) <= tol * std::max(li, lj)) {
        throw DiscontinuityError("Gurtin-Spear spin is undefined at coincident stretches (" +
                                 format_number(li) + ", " + format_number(lj) + ")");
      }
      const double mi = li * li;
      const double mj = lj * lj;
      return (mi + mj) / (mj - mi);
    }
  }
  return 0.0;
}

Vector3 aifantis_nu(int variant, double zeta, const Invariants& inv) {
  if (!(inv.I3 > 0.0)) throw DomainError("aifantis_nu: det B must be positive");
  const double c1 = std::cbrt(1.0 / inv.I3);
  const double c2 = c1 * c1;
  if (variant == 1) return {2.0 * zeta * c1, 0.0, 0.0};
  if (variant == 2) return {2.0 * zeta * (c1 + inv.I1 * c2), -2.0 * zeta * c2, 0.0};
  throw std::invalid_argument("aifantis variant must be 1 or 2");
}

Vector3 aifantis_nu(int variant, double zeta, const SymTensor3& b) {
  return aifantis_nu(variant, zeta, invariants(b));
}

double aifantis_g(int variant, double zeta, const Invariants& inv, double li, double lj) {
  if (!(inv.I3 > 0.0)) throw DomainError("aifantis_g: det B must be positive");
  const double c1 = std::cbrt(1.0 / inv.I3);
  const double delta = li * li - lj * lj;
  if (variant == 1) return zeta * c1 * delta;
  if (variant == 2) {
    return zeta * (c1 * delta + std::cbrt(inv.I3) * (1.0 / (lj * lj) - 1.0 / (li * li)));
  }
  throw std::invalid_argument("aifantis variant must be 1 or 2");
}

double aifantis_g(int variant, double zeta, const SymTensor3& b, double li, double lj) {
  return aifantis_g(variant, zeta, invariants(b), li, lj);
}

double nu_to_g(const Vector3& nu, double li, double lj) {
  const double mi = li * li;
  const double mj = lj * lj;
  return 0.5 * (mi - mj) * (nu(0) + nu(1) * (mi + mj) + nu(2) * mi * mj);
}

SpinGenerator zaremba_jaumann() {
  return {"zj", Classical::ZJ, 0.0,
          GForm{[](double li, double lj, const Invariants&) { return g_classical(ClassicalG::ZJ, li, lj); }, true}};
}

SpinGenerator green_naghdi() {
  return {"gn", Classical::GN, 0.0,
          GForm{[](double li, double lj, const Invariants&) { return g_classical(ClassicalG::GN, li, lj); }, true}};
}

SpinGenerator logarithmic() {
  return {"log", Classical::Log, 0.0,
          GForm{[](double li, double lj, const Invariants&) { return g_classical(ClassicalG::Log, li, lj); }, true}};
}

SpinGenerator gurtin_spear() {
  return {"gs", Classical::GS, 0.0,
          GForm{[](double li, double lj, const Invariants&) { return g_classical(ClassicalG::GS, li, lj); }, false}};
}

SpinGenerator aifantis(int variant, double zeta) {
  if (variant != 1 && variant != 2) throw std::invalid_argument("aifantis variant must be 1 or 2");
  return {"aif" + std::to_string(variant) + ":zeta=" + format_number(zeta),
          variant == 1 ? Classical::Aif1 : Classical::Aif2, zeta,
          NuForm{[variant, zeta](const Invariants& inv) { return aifantis_nu(variant, zeta, inv); }}};
}

SpinGenerator nu_constant(double nu1, double nu2, double nu3) {
  const Vector3 nu(nu1, nu2, nu3);
  return {"nu:" + format_number(nu1) + "," + format_number(nu2) + "," + format_number(nu3),
          Classical::Nu, 0.0, NuForm{[nu](const Invariants&) { return nu; }}};
}

SpinGenerator from_g(std::string name, std::function<double(double, double)> g, bool continuous) {
  return {std::move(name), Classical::Nu, 0.0,
          GForm{[g = std::move(g)](double li, double lj, const Invariants&) { return g(li, lj); },
                continuous}};
}

SpinGenerator parse_generator(const std::string& text) {
  const std::string t = lower(strip(text));
  const auto colon = t.find(':');
  const std::string head = strip(t.substr(0, colon));
  const std::string tail = colon == std::string::npos ? std::string() : strip(t.substr(colon + 1));

  if (colon == std::string::npos) {
    if (head == "zj" || head == "jaumann") return zaremba_jaumann();
    if (head == "gn" || head == "green-naghdi") return green_naghdi();
    if (head == "log" || head == "logarithmic") return logarithmic();
    if (head == "gs" || head == "gurtin-spear") return gurtin_spear();
  }
  if (head == "aif1" || head == "aif2") {
    std::string value = tail;
    const auto eq = tail.find('=');
    if (eq != std::string::npos) {
      const std::string key = strip(tail.substr(0, eq));
      if (key != "zeta" && key != "\xce\xb6") throw std::invalid_argument("unknown parameter '" + key + "' in '" + text + "'");
      value = strip(tail.substr(eq + 1));
    }
    if (value.empty()) throw std::invalid_argument("missing zeta in '" + text + "'");
    return aifantis(head == "aif1" ? 1 : 2, parse_double(value, text));
  }
  if (head == "nu") {
    std::vector<double> vals;
    for (const auto& item : detail::split(tail, ',')) vals.push_back(parse_double(item, text));
    if (vals.size() != 3) throw std::invalid_argument("nu form needs three coefficients: '" + text + "'");
    return nu_constant(vals[0], vals[1], vals[2]);
  }
  throw std::invalid_argument("unknown spin generator '" + text + "'");
}

namespace {

SkewTensor3 nu_correction(const Vector3& nu, const Tensor3& bm, const SymTensor3& d) {
  const Tensor3 bd = bm * d.matrix();
  const Tensor3 b2d = bm * bd;
  const Tensor3 b2db = b2d * bm;
  return SkewTensor3(Tensor3(nu(0) * bd + nu(1) * b2d + nu(2) * b2db));
}

}  // namespace

SkewTensor3 spin_correction(const SpinGenerator& gen, const Spectral3& spec, const SymTensor3& d) {
  const SymTensor3 b = spec.reconstruct();
  const Invariants inv = invariants(b);
  if (const auto* nf = std::get_if<NuForm>(&gen.form)) return nu_correction(nf->nu(inv), b.matrix(), d);
  const auto& gf = std::get<GForm>(gen.form);
  if (!gf.continuous && spec.m < 3) {
    throw DiscontinuityError("spin '" + gen.name + "' is discontinuous and needs three distinct eigenvalues of B");
  }
  const Tensor3& q = spec.eigenvectors;
  Tensor3 local = q.transpose() * d.matrix() * q;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      const int ck = spec.cluster_of[k];
      const int cl = spec.cluster_of[l];
      if (ck == cl) {
        local(k, l) = 0.0;
      } else {
        local(k, l) *= gf.g(std::sqrt(spec.eigenvalues[ck]), std::sqrt(spec.eigenvalues[cl]), inv);
      }
    }
  }
  return SkewTensor3(Tensor3(q * local * q.transpose()));
}

SkewTensor3 spin_correction(const SpinGenerator& gen, const SymTensor3& b, const SymTensor3& d) {
  if (const auto* nf = std::get_if<NuForm>(&gen.form)) {
    return nu_correction(nf->nu(invariants(b)), b.matrix(), d);
  }
  return spin_correction(gen, spectral_decompose(b), d);
}

SkewTensor3 spin_tensor(const SpinGenerator& gen, const KinematicState& state) {
  return state.W + spin_correction(gen, state.B, state.D);
}

}  // namespace corot
