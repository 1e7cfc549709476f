#include "corot/rates.hpp"

#include "corot/errors.hpp"
#include "corot/stiffness.hpp"
#include "corot/strains.hpp"
#include "text_util.hpp"

#include <cmath>
#include <stdexcept>

namespace corot {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

StressLaw richter(std::string name, std::function<RichterCoefficients(const Invariants&)> fn,
                  bool isochoric = false) {
  return StressLaw{std::move(name), RichterLaw{std::move(fn)}, isochoric};
}

void require_positive_det(const Invariants& inv, const char* law) {
  if (!(inv.I3 > 0.0)) throw DomainError(std::string(law) + ": det B must be positive");
}

}  // namespace

FluidPotential quadratic_potential() {
  return {"quadratic", [](double s) { return 2.0 * s; }, [](double) { return 2.0; }};
}

FluidPotential cubic_potential() {
  return {"cubic", [](double s) { return 3.0 * s * s; }, [](double s) { return 6.0 * s; }};
}

StressLaw linear_law() {
  return richter("linear", [](const Invariants&) {
    RichterCoefficients c;
    c.phi(1) = 1.0;
    return c;
  });
}

StressLaw constant_law(double c) {
  return richter("constant:" + detail::format_shortest(c), [c](const Invariants&) {
    RichterCoefficients r;
    r.phi(0) = c;
    return r;
  }, true);
}

StressLaw almansi_law() {
  return richter("almansi", [](const Invariants& inv) {
    require_positive_det(inv, "almansi");
    const double i3 = inv.I3;
    RichterCoefficients c;
    c.phi << 0.5 - inv.I2 / (2.0 * i3), inv.I1 / (2.0 * i3), -1.0 / (2.0 * i3);
    c.dphi << 0.0, -1.0 / (2.0 * i3), inv.I2 / (2.0 * i3 * i3),
              1.0 / (2.0 * i3), 0.0, -inv.I1 / (2.0 * i3 * i3),
              0.0, 0.0, 1.0 / (2.0 * i3 * i3);
    return c;
  });
}

StressLaw perfect_fluid_law(const FluidPotential& h) {
  return richter("perfect-fluid:h=" + h.name, [h](const Invariants& inv) {
    require_positive_det(inv, "perfect-fluid");
    const double s = std::sqrt(inv.I3);
    RichterCoefficients c;
    c.phi(0) = h.dh(s);
    c.dphi(0, 2) = h.d2h(s) / (2.0 * s);
    return c;
  });
}

StressLaw isochoric_neo_hookean_law() {
  return richter("isochoric-nh", [](const Invariants& inv) {
    require_positive_det(inv, "isochoric-nh");
    const double c1 = std::cbrt(1.0 / inv.I3);
    RichterCoefficients c;
    c.phi << -1.0, c1, 0.0;
    c.dphi(1, 2) = -c1 / (3.0 * inv.I3);
    return c;
  }, true);
}

StressLaw isochoric_aifantis_law() {
  return richter("isochoric-aif2", [](const Invariants& inv) {
    require_positive_det(inv, "isochoric-aif2");
    const double c1 = std::cbrt(1.0 / inv.I3);
    const double c2 = c1 * c1;
    const double i3 = inv.I3;
    RichterCoefficients c;
    c.phi << -inv.I2 * c2, c1 + inv.I1 * c2, -c2;
    c.dphi << 0.0, -c2, 2.0 * inv.I2 * c2 / (3.0 * i3),
              c2, 0.0, -c1 / (3.0 * i3) - 2.0 * inv.I1 * c2 / (3.0 * i3),
              0.0, 0.0, 2.0 * c2 / (3.0 * i3);
    return c;
  }, true);
}

StressLaw log_law() { return StressLaw{"log", PrimaryLaw{log_function()}, false}; }

StressLaw seth_hill_law(double m) {
  return StressLaw{"seth-hill:" + detail::format_shortest(m), PrimaryLaw{seth_hill_function(m)}, false};
}

StressLaw polynomial_richter_law(const Eigen::Matrix<double, 3, 4>& k, std::string name) {
  return richter(std::move(name), [k](const Invariants& inv) {
    require_positive_det(inv, "richter");
    RichterCoefficients c;
    for (int a = 0; a < 3; ++a) {
      c.phi(a) = k(a, 0) + k(a, 1) * inv.I1 + k(a, 2) * inv.I2 + k(a, 3) * std::log(inv.I3);
      c.dphi(a, 0) = k(a, 1);
      c.dphi(a, 1) = k(a, 2);
      c.dphi(a, 2) = k(a, 3) / inv.I3;
    }
    return c;
  });
}

StressLaw parse_law(const std::string& text) {
  const std::string t = detail::lower(detail::strip(text));
  const auto colon = t.find(':');
  const std::string head = detail::strip(t.substr(0, colon));
  const std::string tail = colon == std::string::npos ? std::string() : detail::strip(t.substr(colon + 1));
  if (colon == std::string::npos) {
    if (head == "linear") return linear_law();
    if (head == "identity") return constant_law(1.0);
    if (head == "almansi") return almansi_law();
    if (head == "isochoric-nh") return isochoric_neo_hookean_law();
    if (head == "isochoric-aif2") return isochoric_aifantis_law();
    if (head == "log") return log_law();
    if (head == "perfect-fluid") return perfect_fluid_law(quadratic_potential());
  }
  if (head == "constant") return constant_law(detail::parse_double(tail, text));
  if (head == "seth-hill") return seth_hill_law(detail::parse_double(tail, text));
  if (head == "perfect-fluid") {
    std::string value = tail;
    if (const auto eq = tail.find('='); eq != std::string::npos) {
      if (detail::strip(tail.substr(0, eq)) != "h") throw std::invalid_argument("unknown parameter in '" + text + "'");
      value = detail::strip(tail.substr(eq + 1));
    }
    if (value == "quadratic") return perfect_fluid_law(quadratic_potential());
    if (value == "cubic") return perfect_fluid_law(cubic_potential());
    throw std::invalid_argument("unknown fluid potential '" + value + "' (quadratic, cubic)");
  }
  throw std::invalid_argument("unknown stress law '" + text + "'");
}

StressResponse sigma_and_gradient(const StressLaw& law, const SymTensor3& b) {
  return std::visit(overloaded{
      [&](const RichterLaw& r) {
        spectral_decompose(b);  // domain check
        const Invariants inv = invariants(b);
        const RichterCoefficients c = r.coefficients(inv);
        if (!c.phi.allFinite() || !c.dphi.allFinite()) {
          throw DomainError("stress law '" + law.name + "' undefined at this B");
        }
        const Tensor3& bm = b.matrix();
        const Tensor3 id = Tensor3::Identity();
        const Tensor3 b2 = bm * bm;
        const Tensor3 grads[3] = {id, inv.I1 * id - bm, inv.I3 * bm.inverse()};
        const Tensor3 basis[3] = {id, bm, b2};

        StressResponse out;
        out.sigma = SymTensor3(Tensor3(c.phi(0) * id + c.phi(1) * bm + c.phi(2) * b2));
        out.dsigma = Stiffness6::from_action([&](const SymTensor3& h) {
          const Tensor3& hm = h.matrix();
          Vector3 dinv;
          for (int k = 0; k < 3; ++k) dinv(k) = inner(grads[k], hm);
          const Vector3 dphi = c.dphi * dinv;
          Tensor3 acc = c.phi(1) * hm + c.phi(2) * (bm * hm + hm * bm);
          for (int a = 0; a < 3; ++a) acc += dphi(a) * basis[a];
          return SymTensor3(acc);
        });
        return out;
      },
      [&](const PrimaryLaw& p) {
        const Spectral3 spec = spectral_decompose(b);
        StressResponse out;
        out.sigma = primary_matrix_function(spec, p.f);
        out.dsigma = frechet_derivative(spec, p.f);
        return out;
      },
  }, law.form);
}

SymTensor3 sigma_of(const StressLaw& law, const SymTensor3& b) {
  if (const auto* p = std::get_if<PrimaryLaw>(&law.form)) return primary_matrix_function(b, p->f);
  return sigma_and_gradient(law, b).sigma;
}

NonCorotational parse_noncorotational(const std::string& text) {
  const std::string t = detail::lower(detail::strip(text));
  if (t == "cotter-rivlin" || t == "cr") return NonCorotational::CotterRivlin;
  if (t == "oldroyd" || t == "old") return NonCorotational::Oldroyd;
  if (t == "biezeno-hencky" || t == "hencky" || t == "bh") return NonCorotational::BiezenoHencky;
  if (t == "truesdell" || t == "tr") return NonCorotational::Truesdell;
  throw std::invalid_argument("unknown non-corotational rate '" + text + "'");
}

std::string to_string(NonCorotational kind) {
  switch (kind) {
    case NonCorotational::CotterRivlin: return "cotter-rivlin";
    case NonCorotational::Oldroyd: return "oldroyd";
    case NonCorotational::BiezenoHencky: return "biezeno-hencky";
    case NonCorotational::Truesdell: return "truesdell";
  }
  return "?";
}

SymTensor3 corotational_rate_of(const SkewTensor3& omega, const SymTensor3& sigma,
                                const SymTensor3& sigma_dot) {
  const Tensor3 c = sigma.matrix() * omega.matrix() - omega.matrix() * sigma.matrix();
  return sigma_dot + SymTensor3(c);
}

SymTensor3 noncorotational_rate_of(NonCorotational kind, const KinematicState& s,
                                   const SymTensor3& sigma, const SymTensor3& sigma_dot) {
  const Tensor3& l = s.L;
  const Tensor3& sg = sigma.matrix();
  const Tensor3& w = s.W.matrix();
  const double trd = s.D.trace();
  Tensor3 extra;
  switch (kind) {
    case NonCorotational::CotterRivlin:
      extra = l.transpose() * sg + sg * l;
      break;
    case NonCorotational::Oldroyd:
      extra = -(l * sg + sg * l.transpose());
      break;
    case NonCorotational::BiezenoHencky:
      extra = sg * w - w * sg + trd * sg;
      break;
    case NonCorotational::Truesdell:
      extra = -(l * sg + sg * l.transpose()) + trd * sg;
      break;
  }
  return sigma_dot + SymTensor3(extra);
}

SymTensor3 corotational_rate(const SpinGenerator& gen, const KinematicState& state, const StressLaw& law) {
  const StressResponse r = sigma_and_gradient(law, state.B);
  return corotational_rate_of(spin_tensor(gen, state), r.sigma, r.dsigma.apply(state.Bdot));
}

SymTensor3 noncorotational_rate(NonCorotational kind, const KinematicState& state, const StressLaw& law) {
  const StressResponse r = sigma_and_gradient(law, state.B);
  return noncorotational_rate_of(kind, state, r.sigma, r.dsigma.apply(state.Bdot));
}

Stiffness6 induced_stiffness_H(const SpinGenerator& gen, const StressLaw& law, const SymTensor3& b) {
  return sigma_and_gradient(law, b).dsigma * assemble_A(b, gen);
}

SpinGenerator aifantis_spin(double zeta, const StressLaw& law) {
  const auto* r = std::get_if<RichterLaw>(&law.form);
  if (!r || !law.isochoric) {
    throw std::invalid_argument("Aifantis spin needs an isochoric Richter law, got '" + law.name + "'");
  }
  auto coefficients = r->coefficients;
  SpinGenerator gen;
  gen.name = "aifantis:" + law.name + ":zeta=" + detail::format_shortest(zeta);
  gen.kind = Classical::Nu;
  gen.zeta = zeta;
  gen.form = NuForm{[coefficients, zeta](const Invariants& inv) {
    const RichterCoefficients c = coefficients(inv);
    return Vector3(2.0 * zeta * c.phi(1), 2.0 * zeta * c.phi(2), 0.0);
  }};
  return gen;
}

}  // namespace corot
