#include "corot/verify.hpp"

#include "corot/errors.hpp"
#include "corot/sampling.hpp"
#include "corot/stiffness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corot {

namespace {

double rel(double num, double scale) { return num / std::max(1.0, scale); }

Tensor3 central(const std::function<Tensor3(double)>& f, double t, double h) {
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

SymTensor3 apply_rate(const RateSpec& rate, const KinematicState& s, const SymTensor3& sigma,
                      const SymTensor3& sigma_dot) {
  if (const auto* gen = std::get_if<SpinGenerator>(&rate)) {
    return corotational_rate_of(spin_tensor(*gen, s), sigma, sigma_dot);
  }
  return noncorotational_rate_of(std::get<NonCorotational>(rate), s, sigma, sigma_dot);
}

std::vector<SpinGenerator> classical_generators(bool with_gs) {
  std::vector<SpinGenerator> g{zaremba_jaumann(), green_naghdi(), logarithmic()};
  if (with_gs) g.push_back(gurtin_spear());
  g.push_back(aifantis(1, 0.5));
  g.push_back(aifantis(2, 0.5));
  return g;
}

StressLaw random_richter(Rng& rng) {
  Eigen::Matrix<double, 3, 4> c;
  for (int a = 0; a < 3; ++a) {
    for (int k = 0; k < 4; ++k) c(a, k) = rng.uniform(-0.5, 0.5);
  }
  return polynomial_richter_law(c, "richter-random");
}

std::vector<StressLaw> preset_laws() {
  return {linear_law(), constant_law(2.5), almansi_law(), perfect_fluid_law(quadratic_potential()),
          perfect_fluid_law(cubic_potential()), isochoric_neo_hookean_law(), isochoric_aifantis_law(),
          log_law(), seth_hill_law(0.5), seth_hill_law(-2.0)};
}

// Uniaxial stretch with tr D != 0, used to expose the non-corotational rates.
Motion designed_uniaxial() { return Motion(Uniaxial{ScalarPath::linear(1.0, 0.5)}); }

using Sink = std::vector<CheckRecord>;

void suite_commutator(Sink& out, std::uint64_t seed) {
  const auto laws = preset_laws();
  for (int k = 0; k < 40; ++k) {
    const std::uint64_t s = derive_seed(seed, 100 + k);
    Rng rng(s);
    const SymTensor3 b = rng.spd(2.0);
    const SkewTensor3 w = rng.skew();
    const StressLaw law = k < static_cast<int>(laws.size()) ? laws[k] : random_richter(rng);
    out.push_back(make_record("commutator", law.name, s, check_commutator_identity(law, b, w), 1e-10));
  }
}

void suite_product(Sink& out, std::uint64_t seed) {
  const auto gens = classical_generators(true);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t s = derive_seed(seed, 200 + 10 * g + k);
      Rng rng(s);
      const Motion m = random_motion(rng);
      const double t = rng.uniform(0.0, 1.0);
      const StressLaw l1 = random_richter(rng);
      const StressLaw l2 = k % 2 == 0 ? random_richter(rng) : almansi_law();
      out.push_back(make_record("product-rule", gens[g].name, s, check_product_rule(gens[g], m, t, l1, l2), 1e-9));
    }
  }
}

void suite_chain(Sink& out, std::uint64_t seed) {
  const auto gens = classical_generators(true);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t s = derive_seed(seed, 300 + 10 * g + k);
      Rng rng(s);
      const Motion m = random_motion(rng);
      const double t = rng.uniform(0.0, 1.0);
      const StressLaw law = k == 0 ? log_law() : (k == 1 ? almansi_law() : random_richter(rng));
      out.push_back(make_record("chain-rule", gens[g].name, s, check_chain_rule(gens[g], m, t, law), 1e-6));
    }
  }
}

void suite_norm(Sink& out, std::uint64_t seed) {
  const auto gens = classical_generators(true);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (int k = 0; k < 3; ++k) {
      const std::uint64_t s = derive_seed(seed, 400 + 10 * g + k);
      Rng rng(s);
      const Motion m = random_motion(rng);
      const double t = rng.uniform(0.0, 1.0);
      const StressLaw law = k == 0 ? isochoric_neo_hookean_law() : random_richter(rng);
      out.push_back(make_record("norm-identity", gens[g].name, s, check_norm_identity(gens[g], m, t, law), 1e-7));
    }
  }
}

void suite_perfect_fluid(Sink& out, std::uint64_t seed) {
  const std::vector<SpinGenerator> gens{zaremba_jaumann(), green_naghdi(), logarithmic()};
  for (int k = 0; k < 10; ++k) {
    const std::uint64_t s = derive_seed(seed, 500 + k);
    Rng rng(s);
    const Motion m = k == 0 ? designed_uniaxial() : random_motion(rng);
    const KinematicState st = state_at(m, rng.uniform(0.0, 1.0));
    const FluidPotential h = k % 2 == 0 ? quadratic_potential() : cubic_potential();
    out.push_back(make_record("perfect-fluid", "zj+gn+log", s, check_perfect_fluid(gens, st, h), 1e-10));
  }
}

void suite_noncorotational(Sink& out, std::uint64_t seed) {
  for (int k = 0; k < 10; ++k) {
    const std::uint64_t s = derive_seed(seed, 600 + k);
    Rng rng(s);
    const KinematicState st = state_at(random_motion(rng), rng.uniform(0.0, 1.0));
    const double c = rng.uniform(-3.0, 3.0);
    out.push_back(make_record("truesdell-constant", "truesdell", s, check_truesdell_constant(st, c), 1e-12));
    for (const auto& g : classical_generators(true)) {
      out.push_back(make_record("constant-identity", g.name, s, check_constant_identity(g, st, c), 1e-12));
    }
  }
  const Motion m = designed_uniaxial();
  const KinematicState st = state_at(m, 0.5);
  for (auto kind : {NonCorotational::CotterRivlin, NonCorotational::Oldroyd, NonCorotational::BiezenoHencky,
                    NonCorotational::Truesdell}) {
    out.push_back(make_record("constant-identity-violation", to_string(kind), seed,
                              check_constant_identity(kind, st, 1.0), 1e-3, true));
    out.push_back(make_record("product-rule-violation", to_string(kind), seed,
                              check_product_rule(kind, m, 0.5, constant_law(1.0), constant_law(1.0)), 1e-3, true));
  }
}

void suite_objectivity(Sink& out, std::uint64_t seed) {
  const auto gens = classical_generators(true);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (int k = 0; k < 4; ++k) {
      const std::uint64_t s = derive_seed(seed, 700 + 10 * g + k);
      Rng rng(s);
      const Motion m = random_motion(rng);
      Motion rot(RigidRotation{rng.unit_vector(), rng.uniform(-3.0, 3.0)});
      if (k % 2 == 1) rot = Motion::composite(rot, Motion(RigidRotation{rng.unit_vector(), rng.uniform(-3.0, 3.0)}));
      const double t = rng.uniform(0.0, 1.0);
      const ObjectivityResult r = check_objectivity(gens[g], m, rot, t, almansi_law());
      out.push_back(make_record("objectivity-spin", gens[g].name, s, r.spin_residual, 1e-8));
      out.push_back(make_record("objectivity-rate", gens[g].name, s, r.rate_residual, 1e-8));
    }
  }
}

void suite_conservation(Sink& out, std::uint64_t seed) {
  const std::vector<SpinGenerator> gens{zaremba_jaumann(), green_naghdi(), logarithmic()};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::uint64_t s = derive_seed(seed, 800 + g);
    Rng rng(s);
    const Motion m = Motion::composite(Motion(RigidRotation{rng.unit_vector(), 20.0}), random_motion(rng));
    const SymTensor3 sigma0 = rng.sym();
    const ConservationResult coarse = check_invariant_conservation(gens[g], m, sigma0, 1.0, 1e-3);
    const ConservationResult fine = check_invariant_conservation(gens[g], m, sigma0, 1.0, 5e-4);
    out.push_back(make_record("conservation-drift", gens[g].name, s, coarse.max_eigen_drift, 1e-8));
    out.push_back(make_record("conservation-norm", gens[g].name, s, coarse.max_norm_drift, 1e-8));
    const double ratio = coarse.max_eigen_drift / std::max(fine.max_eigen_drift, 1e-300);
    out.push_back(make_record("conservation-order", gens[g].name, s, ratio, 8.0, true));
  }
}

}  // namespace

std::string rate_name(const RateSpec& rate) {
  if (const auto* g = std::get_if<SpinGenerator>(&rate)) return g->name;
  return to_string(std::get<NonCorotational>(rate));
}

Tensor3 richardson_derivative(const std::function<Tensor3(double)>& f, double t, double h) {
  const Tensor3 r0 = central(f, t, h);
  const Tensor3 r1 = central(f, t, h / 2.0);
  const Tensor3 r2 = central(f, t, h / 4.0);
  const Tensor3 a0 = (4.0 * r1 - r0) / 3.0;
  const Tensor3 a1 = (4.0 * r2 - r1) / 3.0;
  return (16.0 * a1 - a0) / 15.0;
}

SymTensor3 rate_of_field(const RateSpec& rate, const Motion& motion, double t,
                         const std::function<SymTensor3(double)>& field) {
  const KinematicState s = state_at(motion, t);
  const Tensor3 dot = richardson_derivative([&](double tau) { return field(tau).matrix(); }, t);
  return apply_rate(rate, s, field(t), SymTensor3(dot));
}

double check_commutator_identity(const StressLaw& law, const SymTensor3& b, const SkewTensor3& omega) {
  const StressResponse r = sigma_and_gradient(law, b);
  const Tensor3& w = omega.matrix();
  const Tensor3 lhs = commutator(w, r.sigma.matrix());
  const SymTensor3 wb(Tensor3(commutator(w, b.matrix())));
  const Tensor3 rhs = r.dsigma.apply(wb).matrix();
  return rel((lhs - rhs).norm(), lhs.norm());
}

double check_product_rule(const RateSpec& rate, const Motion& motion, double t, const StressLaw& law1,
                          const StressLaw& law2) {
  auto s1 = [&](double tau) { return sigma_of(law1, state_at(motion, tau).B); };
  auto s2 = [&](double tau) { return sigma_of(law2, state_at(motion, tau).B); };
  auto prod = [&](double tau) { return SymTensor3(Tensor3(s1(tau).matrix() * s2(tau).matrix())); };
  const SymTensor3 lhs = rate_of_field(rate, motion, t, prod);
  const KinematicState st = state_at(motion, t);
  const StressResponse r1 = sigma_and_gradient(law1, st.B);
  const StressResponse r2 = sigma_and_gradient(law2, st.B);
  const SymTensor3 d1 = apply_rate(rate, st, r1.sigma, r1.dsigma.apply(st.Bdot));
  const SymTensor3 d2 = apply_rate(rate, st, r2.sigma, r2.dsigma.apply(st.Bdot));
  const Tensor3 rhs = d1.matrix() * r2.sigma.matrix() + r1.sigma.matrix() * d2.matrix();
  return rel((lhs.matrix() - rhs).norm(), rhs.norm());
}

double check_chain_rule(const SpinGenerator& gen, const Motion& motion, double t, const StressLaw& law, double h) {
  const KinematicState st = state_at(motion, t);
  auto field = [&](double tau) { return sigma_of(law, state_at(motion, tau).B); };
  const SymTensor3 fd = material_derivative_fd(field, t, h);
  const StressResponse r = sigma_and_gradient(law, st.B);
  const SymTensor3 lhs = corotational_rate_of(spin_tensor(gen, st), r.sigma, fd);
  const SymTensor3 rhs = r.dsigma.apply(assemble_A(st.B, gen).apply(st.D));
  return rel((lhs - rhs).norm(), rhs.norm());
}

double check_norm_identity(const SpinGenerator& gen, const Motion& motion, double t, const StressLaw& law, double h) {
  const KinematicState st = state_at(motion, t);
  const SymTensor3 sigma = sigma_of(law, st.B);
  const double lhs = 2.0 * inner(corotational_rate(gen, st, law), sigma);
  auto sq = [&](double tau) {
    const SymTensor3 s = sigma_of(law, state_at(motion, tau).B);
    return inner(s, s);
  };
  const double rhs = (sq(t + h) - sq(t - h)) / (2.0 * h);
  return rel(std::abs(lhs - rhs), inner(sigma, sigma));
}

ConservationResult check_invariant_conservation(const SpinGenerator& gen, const Motion& motion,
                                                const SymTensor3& sigma0, double horizon, double dt, double t0) {
  if (!(dt > 0.0) || !(horizon > 0.0)) throw std::invalid_argument("conservation: dt and horizon must be positive");
  auto omega = [&](double t) { return spin_tensor(gen, state_at(motion, t)).matrix(); };
  const Vector3 eig0 = symmetric_eigen(sigma0).values;
  const double norm0 = sigma0.norm();

  ConservationResult res;
  res.steps = static_cast<int>(std::llround(horizon / dt));
  Tensor3 q = Tensor3::Identity();
  Tensor3 w0 = omega(t0);
  for (int n = 0; n < res.steps; ++n) {
    const double t = t0 + n * dt;
    const Tensor3 wh = omega(t + 0.5 * dt);
    const Tensor3 w1 = omega(t + dt);
    const Tensor3 k1 = w0 * q;
    const Tensor3 k2 = wh * (q + 0.5 * dt * k1);
    const Tensor3 k3 = wh * (q + 0.5 * dt * k2);
    const Tensor3 k4 = w1 * (q + dt * k3);
    q += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    w0 = w1;

    const double defect = (q.transpose() * q - Tensor3::Identity()).norm();
    res.max_orthogonality_defect = std::max(res.max_orthogonality_defect, defect);
    if (defect > 1e-8) {
      q = polar_decompose(q).R;
      ++res.reorthonormalizations;
    }
    const SymTensor3 sigma(Tensor3(q * sigma0.matrix() * q.transpose()));
    const Vector3 eig = symmetric_eigen(sigma).values;
    res.max_eigen_drift = std::max(res.max_eigen_drift, (eig - eig0).cwiseAbs().maxCoeff());
    res.max_norm_drift = std::max(res.max_norm_drift, std::abs(sigma.norm() - norm0));
  }
  return res;
}

ObjectivityResult check_objectivity(const SpinGenerator& gen, const Motion& motion, const Motion& rotation,
                                    double t, const StressLaw& law) {
  const Motion primed = Motion::composite(rotation, motion);
  const KinematicState s = state_at(motion, t);
  const KinematicState sp = state_at(primed, t);
  const Tensor3 q = rotation.F(t);
  const Tensor3 qdot = rotation.Fdot(t);

  ObjectivityResult r;
  const Tensor3 om = spin_tensor(gen, s).matrix();
  const Tensor3 omp = spin_tensor(gen, sp).matrix();
  const Tensor3 expected = qdot * q.transpose() + q * om * q.transpose();
  r.spin_residual = rel((omp - expected).norm(), expected.norm());

  const Tensor3 rate = corotational_rate(gen, s, law).matrix();
  const Tensor3 ratep = corotational_rate(gen, sp, law).matrix();
  const Tensor3 pushed = q * rate * q.transpose();
  r.rate_residual = rel((ratep - pushed).norm(), pushed.norm());
  return r;
}

double check_perfect_fluid(const std::vector<SpinGenerator>& gens, const KinematicState& state, const FluidPotential& h) {
  const StressLaw law = perfect_fluid_law(h);
  const double s = std::sqrt(state.B.determinant());
  const SymTensor3 closed = (h.d2h(s) * s * state.D.trace()) * SymTensor3::identity();
  double worst = 0.0;
  for (const auto& g : gens) {
    worst = std::max(worst, rel((corotational_rate(g, state, law) - closed).norm(), closed.norm()));
  }
  return worst;
}

double check_constant_identity(const RateSpec& rate, const KinematicState& state, double c) {
  return apply_rate(rate, state, c * SymTensor3::identity(), SymTensor3::zero()).norm();
}

double check_truesdell_constant(const KinematicState& state, double c) {
  const SymTensor3 got = noncorotational_rate_of(NonCorotational::Truesdell, state, c * SymTensor3::identity(),
                                                 SymTensor3::zero());
  const SymTensor3 expected = c * (state.D.trace() * SymTensor3::identity() - 2.0 * state.D);
  return (got - expected).norm();
}

CheckRecord make_record(std::string check, std::string generator, std::uint64_t seed, double residual,
                        double threshold, bool expect_violation) {
  CheckRecord r;
  r.check = std::move(check);
  r.generator = std::move(generator);
  r.seed = seed;
  r.residual = residual;
  r.threshold = threshold;
  r.comparison = expect_violation ? ">=" : "<=";
  r.pass = std::isfinite(residual) && (expect_violation ? residual >= threshold : residual <= threshold);
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",   "identities",   "commutator",      "product",
                                              "chain", "norm",         "perfect-fluid",   "noncorotational",
                                              "objectivity", "conservation"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& suite, std::uint64_t seed) {
  Sink out;
  const bool all = suite == "all";
  const bool ids = all || suite == "identities";
  bool known = all || ids;
  auto want = [&](const char* name) {
    const bool w = suite == name;
    known = known || w;
    return w;
  };
  if (ids || want("commutator")) suite_commutator(out, seed);
  if (ids || want("product")) suite_product(out, seed);
  if (ids || want("chain")) suite_chain(out, seed);
  if (ids || want("norm")) suite_norm(out, seed);
  if (ids || want("perfect-fluid")) suite_perfect_fluid(out, seed);
  if (ids || want("noncorotational")) suite_noncorotational(out, seed);
  if (all || want("objectivity")) suite_objectivity(out, seed);
  if (all || want("conservation")) suite_conservation(out, seed);
  if (!known) throw std::invalid_argument("unknown verify suite '" + suite + "'");
  return out;
}

}  // namespace corot
