#include "corot/io.hpp"

#include "corot/errors.hpp"
#include "corot/spectral.hpp"
#include "text_util.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace corot {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : detail::split(text, ',')) out.push_back(detail::parse_double(item, text));
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_double(v[i]);
  }
  return s;
}

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

const std::string& require(const std::map<std::string, std::string>& keys, const std::string& key) {
  const auto it = keys.find(key);
  if (it == keys.end()) throw std::invalid_argument("motion config: missing key '" + key + "'");
  return it->second;
}

std::map<std::string, std::string> with_prefix(const std::map<std::string, std::string>& keys,
                                               const std::string& prefix) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : keys) {
    if (k.rfind(prefix, 0) == 0) out[k.substr(prefix.size())] = v;
  }
  return out;
}

void emit_config(const Motion& motion, const std::string& prefix, std::ostringstream& os) {
  os << prefix << "type = " << motion.type_name() << '\n';
  std::visit(overloaded{
      [&](const SimpleShear& m) { os << prefix << "gamma = " << path_to_string(m.gamma) << '\n'; },
      [&](const Uniaxial& m) { os << prefix << "stretch = " << path_to_string(m.stretch) << '\n'; },
      [&](const RigidRotation& m) {
        os << prefix << "axis = " << join({m.axis(0), m.axis(1), m.axis(2)}) << '\n';
        os << prefix << "rate = " << format_double(m.rate) << '\n';
      },
      [&](const TriaxialDiagonal& m) {
        os << prefix << "a = " << path_to_string(m.a) << '\n';
        os << prefix << "b = " << path_to_string(m.b) << '\n';
        os << prefix << "c = " << path_to_string(m.c) << '\n';
      },
      [&](const Composite& m) {
        emit_config(*m.outer, prefix + "outer.", os);
        emit_config(*m.inner, prefix + "inner.", os);
      },
      [&](const TabulatedPolynomial& m) {
        for (std::size_t k = 0; k < m.coefficients.size(); ++k) {
          std::vector<double> v;
          for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) v.push_back(m.coefficients[k](i, j));
          }
          os << prefix << 'c' << k << " = " << join(v) << '\n';
        }
      },
  }, motion.kind());
}

}  // namespace

std::string format_double(double v) { return detail::format_shortest(v); }

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), columns_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::logic_error("CsvWriter: wrong number of cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os_ << ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      os_ << c;
      continue;
    }
    os_ << '"';
    for (char ch : c) {
      if (ch == '"') os_ << '"';
      os_ << ch;
    }
    os_ << '"';
  }
  os_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  row(cells);
}

SymTensor3 parse_b_spec(const std::string& text) {
  const std::vector<double> v = parse_list(text);
  SymTensor3 b;
  if (v.size() == 3) {
    b = SymTensor3::diag(v[0], v[1], v[2]);
  } else if (v.size() == 6) {
    b = SymTensor3::from_components(v[0], v[1], v[2], v[3], v[4], v[5]);
  } else {
    throw std::invalid_argument("B spec needs 3 eigenvalues or 6 components (a11,a22,a33,a12,a13,a23): '" +
                                text + "'");
  }
  spectral_decompose(b);
  return b;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 3 && parts.size() != 4) throw std::invalid_argument("grid must be start:stop:steps[:log]");
  const double start = detail::parse_double(parts[0], text);
  const double stop = detail::parse_double(parts[1], text);
  const double steps_d = detail::parse_double(parts[2], text);
  if (steps_d < 1.0 || steps_d != std::floor(steps_d) || steps_d > 1e7) {
    throw std::invalid_argument("grid steps must be a positive integer: '" + text + "'");
  }
  const bool geometric = parts.size() == 4;
  if (geometric && parts[3] != "log") throw std::invalid_argument("grid spacing must be 'log': '" + text + "'");
  if (geometric && !(start > 0.0 && stop > 0.0)) throw std::invalid_argument("log grid needs positive bounds");
  const auto n = static_cast<std::size_t>(steps_d);
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double f = n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(n - 1);
    out[k] = geometric ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                       : start + f * (stop - start);
  }
  if (n > 1) out.back() = stop;
  return out;
}

ScalarPath parse_path(const std::string& text) {
  const std::string t = detail::strip(text);
  const auto colon = t.find(':');
  if (colon == std::string::npos) return ScalarPath::constant(detail::parse_double(t, text));
  const std::string head = detail::lower(detail::strip(t.substr(0, colon)));
  const std::vector<double> v = parse_list(t.substr(colon + 1));
  if (head == "poly") {
    return ScalarPath(ScalarPath::Polynomial{v});
  }
  if (head == "exp") {
    if (v.size() != 2) throw std::invalid_argument("exp path needs scale,rate: '" + text + "'");
    return ScalarPath::exponential(v[0], v[1]);
  }
  if (head == "sin") {
    if (v.size() != 3 && v.size() != 4) throw std::invalid_argument("sin path needs offset,amplitude,omega[,phase]");
    return ScalarPath::sine(v[0], v[1], v[2], v.size() == 4 ? v[3] : 0.0);
  }
  throw std::invalid_argument("unknown path kind '" + head + "'");
}

std::string path_to_string(const ScalarPath& path) {
  return std::visit(overloaded{
      [](const ScalarPath::Polynomial& p) { return "poly:" + join(p.coefficients); },
      [](const ScalarPath::Exponential& e) { return "exp:" + join({e.scale, e.rate}); },
      [](const ScalarPath::Sine& s) { return "sin:" + join({s.offset, s.amplitude, s.omega, s.phase}); },
  }, path.kind());
}

Motion parse_motion_config(const std::map<std::string, std::string>& keys) {
  const std::string type = detail::lower(require(keys, "type"));
  if (type == "simple-shear") return Motion(SimpleShear{parse_path(require(keys, "gamma"))});
  if (type == "uniaxial") return Motion(Uniaxial{parse_path(require(keys, "stretch"))});
  if (type == "rigid-rotation") {
    const std::vector<double> axis = parse_list(require(keys, "axis"));
    if (axis.size() != 3) throw std::invalid_argument("rigid-rotation axis needs 3 components");
    return Motion(RigidRotation{Vector3(axis[0], axis[1], axis[2]),
                                detail::parse_double(require(keys, "rate"), "rate")});
  }
  if (type == "triaxial") {
    return Motion(TriaxialDiagonal{parse_path(require(keys, "a")), parse_path(require(keys, "b")),
                                   parse_path(require(keys, "c"))});
  }
  if (type == "composite") {
    return Motion::composite(parse_motion_config(with_prefix(keys, "outer.")),
                             parse_motion_config(with_prefix(keys, "inner.")));
  }
  if (type == "polynomial") {
    TabulatedPolynomial p;
    for (int k = 0;; ++k) {
      const auto it = keys.find("c" + std::to_string(k));
      if (it == keys.end()) break;
      const std::vector<double> v = parse_list(it->second);
      if (v.size() != 9) throw std::invalid_argument("polynomial coefficient c" + std::to_string(k) + " needs 9 numbers");
      Tensor3 c;
      c << v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8];
      p.coefficients.push_back(c);
    }
    if (p.coefficients.empty()) throw std::invalid_argument("polynomial motion needs c0");
    return Motion(p);
  }
  throw std::invalid_argument("unknown motion type '" + type + "'");
}

Motion parse_motion_config(const std::string& text) {
  std::map<std::string, std::string> keys;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("motion config line " + std::to_string(lineno) + ": expected key = value");
    }
    keys[detail::lower(detail::strip(line.substr(0, eq)))] = detail::strip(line.substr(eq + 1));
  }
  return parse_motion_config(keys);
}

std::string motion_to_config(const Motion& motion) {
  std::ostringstream os;
  emit_config(motion, "", os);
  return os.str();
}

nlohmann::json to_json(const Tensor3& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) rows.push_back({number(t(i, 0)), number(t(i, 1)), number(t(i, 2))});
  return rows;
}

nlohmann::json to_json(const SymTensor3& t) { return to_json(t.matrix()); }

nlohmann::json to_json(const RateClassification& c) {
  nlohmann::json j;
  j["positive"] = c.positive;
  j["invertible"] = c.invertible;
  j["totally_positive"] = c.totally_positive ? nlohmann::json(*c.totally_positive) : nlohmann::json(nullptr);
  j["degenerate"] = c.degenerate;
  j["eigenindex"] = c.eigenindex;
  j["min_z"] = c.min_z ? number(*c.min_z) : nlohmann::json(nullptr);
  j["min_eig_A"] = number(c.min_eig_A);
  j["eps_pos"] = number(c.eps_pos);
  j["witness_D"] = c.witness_D ? to_json(*c.witness_D) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const ZTable& t) {
  nlohmann::json j;
  j["stretches"] = t.stretches;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : t.entries) {
    rows.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"lambda_i", number(e.lambda_i)},
                    {"lambda_j", number(e.lambda_j)}, {"g", number(e.g)}, {"z", number(e.z)}});
  }
  j["entries"] = rows;
  return j;
}

nlohmann::json to_json(const CheckRecord& r) {
  return {{"check", r.check},         {"generator", r.generator}, {"seed", r.seed},
          {"residual", number(r.residual)}, {"threshold", r.threshold}, {"comparison", r.comparison},
          {"pass", r.pass}};
}

nlohmann::json to_json(const std::vector<CheckRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& r : records) {
    arr.push_back(to_json(r));
    if (!r.pass) ++failed;
  }
  return {{"checks", arr}, {"total", records.size()}, {"failed", failed}};
}

nlohmann::json to_json(const A44Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"mu", {r.mu(0), r.mu(1), r.mu(2)}},
                    {"nu", {r.nu(0), r.nu(1), r.nu(2)}},
                    {"pair", {r.pair_i + 1, r.pair_j + 1}},
                    {"tabulated", number(r.tabulated)},
                    {"two_z", number(r.two_z)},
                    {"direct", number(r.direct)}});
  }
  return {{"rows", rows},
          {"max_rel_tabulated_vs_direct", number(report.max_rel_tabulated_vs_direct)},
          {"max_rel_two_z_vs_direct", number(report.max_rel_two_z_vs_direct)},
          {"max_rel_tabulated_vs_direct_nu1_only", number(report.max_rel_tabulated_vs_direct_nu1_only)},
          {"verdict", report.verdict}};
}

nlohmann::json to_json(const KinematicState& s) {
  return {{"t", s.t},           {"F", to_json(s.F)}, {"B", to_json(s.B)}, {"V", to_json(s.V)},
          {"R", to_json(s.R)},  {"L", to_json(s.L)}, {"D", to_json(s.D)}, {"W", to_json(s.W.matrix())},
          {"Bdot", to_json(s.Bdot)}};
}

}  // namespace corot
