#include "cli.hpp"

#include "corot/errors.hpp"
#include "corot/io.hpp"
#include "corot/kinematics.hpp"
#include "corot/sampling.hpp"
#include "corot/spins.hpp"
#include "corot/stiffness.hpp"
#include "corot/strains.hpp"
#include "corot/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace corot::cli {

namespace {

struct Common {
  std::string out_file;
  std::string format;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split_list(text)) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("cannot parse number '" + s + "'");
    out.push_back(v);
  }
  return out;
}

SpinGenerator resolve_rate(const std::string& rate, const std::optional<double>& zeta) {
  if ((rate == "aif1" || rate == "aif2")) {
    if (!zeta) throw std::invalid_argument("rate '" + rate + "' needs --zeta or the form " + rate + ":zeta=VALUE");
    return aifantis(rate == "aif1" ? 1 : 2, *zeta);
  }
  return parse_generator(rate);
}

// Two values a,b describe diag(a, b, b), i.e. a single distinct pair.
SymTensor3 resolve_b(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() == 2) return parse_b_spec(parts[0] + "," + parts[1] + "," + parts[1]);
  return parse_b_spec(text);
}

class Output {
 public:
  Output(const std::string& file, std::ostream& fallback) : stream_(&fallback) {
    if (!file.empty()) {
      file_.open(file, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open output file '" + file + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void write_json(std::ostream& os, const nlohmann::json& j) { os << j.dump(2) << '\n'; }

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--out", c.out_file, "Write output to FILE instead of stdout");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corotational stress rates: classification tables, characteristic functions and identity checks",
               "corot"};
  app.require_subcommand(1);

  // classify
  Common classify_c;
  std::string classify_b, classify_rate = "gn";
  std::optional<double> classify_zeta;
  auto* classify_cmd = app.add_subcommand("classify", "Positivity / invertibility of the rate at B (exit 0 iff positive)");
  classify_cmd->add_option("--B", classify_b, "Eigenvalues a,b,c or components a11,a22,a33,a12,a13,a23")->required();
  classify_cmd->add_option("--rate", classify_rate, "zj, gn, log, gs, aif1:zeta=Z, aif2:zeta=Z, nu:a,b,c");
  classify_cmd->add_option("--zeta", classify_zeta, "Aifantis parameter when --rate is aif1 or aif2");
  add_common(classify_cmd, classify_c, "json");

  // ztable
  Common ztable_c;
  std::string ztable_b, ztable_rate = "gn";
  std::optional<double> ztable_zeta;
  auto* ztable_cmd = app.add_subcommand("ztable", "Characteristic values z_ij for each distinct eigenvalue pair");
  ztable_cmd->add_option("--B", ztable_b, "Eigenvalues (2 or 3 values) or 6 components")->required();
  ztable_cmd->add_option("--rate", ztable_rate, "Spin generator");
  ztable_cmd->add_option("--zeta", ztable_zeta, "Aifantis parameter");
  add_common(ztable_cmd, ztable_c, "csv");

  // sweep-gbar
  Common gbar_c;
  std::string gbar_grid = "0.05:20:1000", gbar_rates = "zj,gn,log,gs";
  auto* sweep_gbar = app.add_subcommand("sweep-gbar", "Characteristic functions gbar(Z) on a grid");
  sweep_gbar->add_option("--grid", gbar_grid, "start:stop:steps[:log]");
  sweep_gbar->add_option("--rate", gbar_rates, "Comma-separated subset of zj,gn,log,gs");
  add_common(sweep_gbar, gbar_c, "csv");

  // sweep-scale
  Common scale_c;
  std::string scale_grid = "0.05:4:80", scale_m = "0.25,0.5,1,2";
  auto* sweep_scale = app.add_subcommand("sweep-scale", "Seth-Hill scale functions e_m and their mirrored family");
  sweep_scale->add_option("--grid", scale_grid, "start:stop:steps[:log]");
  sweep_scale->add_option("--m", scale_m, "Comma-separated exponents (use --m=-1,0 for negative values)");
  add_common(sweep_scale, scale_c, "csv");

  // sweep-pairing
  Common pairing_c;
  std::string pairing_rates = "zj,gn,log", pairing_m = "-2,-1,0,0.5,1,2";
  std::uint64_t pairing_seed = 42;
  int pairing_samples = 1000, pairing_batches = 1;
  auto* sweep_pairing = app.add_subcommand("sweep-pairing", "Positivity search for <D°[E_m(B)], D> over random samples");
  sweep_pairing->add_option("--rate", pairing_rates, "Comma-separated generators");
  sweep_pairing->add_option("--m", pairing_m, "Comma-separated exponents (use --m=-2,-1 for negative values)");
  sweep_pairing->add_option("--seed", pairing_seed, "Base seed");
  sweep_pairing->add_option("--samples", pairing_samples, "Samples per batch")->check(CLI::PositiveNumber);
  sweep_pairing->add_option("--batches", pairing_batches, "Batches per (rate, m)")->check(CLI::PositiveNumber);
  add_common(sweep_pairing, pairing_c, "csv");

  // verify
  Common verify_c;
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity-check suite and emit a JSON report");
  verify_cmd->add_option("suite", verify_suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", verify_seed, "Seed");
  add_common(verify_cmd, verify_c, "json");

  // nu-report
  Common nu_c;
  int nu_samples = 100;
  std::uint64_t nu_seed = 7;
  auto* nu_report = app.add_subcommand("nu-report", "Compare tabulated shear entries with 2 z_ij and the direct 6x6 assembly");
  nu_report->add_option("--samples", nu_samples, "Random (B, nu) samples")->check(CLI::PositiveNumber);
  nu_report->add_option("--seed", nu_seed, "Seed");
  add_common(nu_report, nu_c, "json");

  // state
  Common state_c;
  std::string state_motion;
  double state_t = 0.0;
  auto* state_cmd = app.add_subcommand("state", "Kinematic state of a motion configuration file at time t");
  state_cmd->add_option("--motion", state_motion, "Motion configuration file (key = value)")->required()->check(CLI::ExistingFile);
  state_cmd->add_option("--t", state_t, "Time");
  add_common(state_cmd, state_c, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) {
      const SymTensor3 b = resolve_b(classify_b);
      const SpinGenerator gen = resolve_rate(classify_rate, classify_zeta);
      const RateClassification c = classify(b, gen);
      Output o(classify_c.out_file, out);
      if (classify_c.format == "csv") {
        CsvWriter w(o.stream(), {"generator", "positive", "invertible", "totally_positive", "degenerate", "min_z",
                                 "min_eig_A"});
        w.row(std::vector<std::string>{gen.name, c.positive ? "true" : "false", c.invertible ? "true" : "false",
                                       c.totally_positive ? (*c.totally_positive ? "true" : "false") : "",
                                       c.degenerate ? "true" : "false", c.min_z ? format_double(*c.min_z) : "",
                                       format_double(c.min_eig_A)});
      } else {
        nlohmann::json j = to_json(c);
        j["generator"] = gen.name;
        j["B"] = to_json(b);
        write_json(o.stream(), j);
      }
      return c.positive ? kOk : kNegative;
    }

    if (*ztable_cmd) {
      const SymTensor3 b = resolve_b(ztable_b);
      const SpinGenerator gen = resolve_rate(ztable_rate, ztable_zeta);
      const ZTable t = z_table(b, gen);
      Output o(ztable_c.out_file, out);
      if (ztable_c.format == "json") {
        nlohmann::json j = to_json(t);
        j["generator"] = gen.name;
        write_json(o.stream(), j);
      } else {
        CsvWriter w(o.stream(), {"i", "j", "lambda_i", "lambda_j", "g", "z"});
        for (const auto& e : t.entries) {
          w.row(std::vector<std::string>{std::to_string(e.i + 1), std::to_string(e.j + 1), format_double(e.lambda_i),
                                         format_double(e.lambda_j), format_double(e.g), format_double(e.z)});
        }
      }
      return kOk;
    }

    if (*sweep_gbar) {
      const std::vector<double> grid = parse_grid(gbar_grid);
      std::vector<GbarKind> kinds;
      std::vector<std::string> header{"Z"};
      for (const auto& r : split_list(gbar_rates)) {
        kinds.push_back(parse_gbar_kind(r));
        header.push_back("gbar_" + r);
      }
      for (double z : grid) {
        if (!(z > 0.0)) throw std::invalid_argument("gbar grid must be positive");
      }
      Output o(gbar_c.out_file, out);
      if (gbar_c.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (double z : grid) {
          nlohmann::json row{{"Z", z}};
          for (std::size_t k = 0; k < kinds.size(); ++k) row[header[k + 1]] = gbar(kinds[k], z);
          rows.push_back(row);
        }
        write_json(o.stream(), rows);
      } else {
        CsvWriter w(o.stream(), header);
        for (double z : grid) {
          std::vector<double> row{z};
          for (auto k : kinds) row.push_back(gbar(k, z));
          w.row(row);
        }
      }
      return kOk;
    }

    if (*sweep_scale) {
      const std::vector<double> grid = parse_grid(scale_grid);
      const std::vector<double> ms = parse_numbers(scale_m);
      std::vector<std::string> header{"chi"};
      for (double m : ms) header.push_back("e_" + format_double(m));
      for (double m : ms) header.push_back("mirrored_" + format_double(m));
      Output o(scale_c.out_file, out);
      CsvWriter w(o.stream(), header);
      for (double chi : grid) {
        std::vector<double> row{chi};
        for (double m : ms) row.push_back(scale_function(m, chi));
        for (double m : ms) row.push_back(mirrored_scale_function(m, chi));
        w.row(row);
      }
      return kOk;
    }

    if (*sweep_pairing) {
      const std::vector<double> ms = parse_numbers(pairing_m);
      Output o(pairing_c.out_file, out);
      CsvWriter w(o.stream(), {"generator", "m", "seed", "pairing_value", "min_over_batch"});
      int counterexamples = 0;
      std::uint64_t stream = 0;
      for (const auto& r : split_list(pairing_rates)) {
        const SpinGenerator gen = parse_generator(r);
        for (double m : ms) {
          for (int b = 0; b < pairing_batches; ++b) {
            const std::uint64_t s = derive_seed(pairing_seed, stream++);
            const PairingBatch batch = pairing_batch(gen, m, s, pairing_samples);
            counterexamples += batch.counterexamples;
            w.row(std::vector<std::string>{gen.name, format_double(m), std::to_string(s),
                                           format_double(batch.mean_value), format_double(batch.min_value)});
          }
        }
      }
      if (counterexamples > 0) {
        err << "sweep-pairing: " << counterexamples << " counterexample(s) with pairing <= 0\n";
        return kNegative;
      }
      return kOk;
    }

    if (*verify_cmd) {
      const std::vector<CheckRecord> records = run_suite(verify_suite, verify_seed);
      nlohmann::json j = to_json(records);
      j["suite"] = verify_suite;
      j["seed"] = verify_seed;
      Output o(verify_c.out_file, out);
      if (verify_c.format == "csv") {
        CsvWriter w(o.stream(), {"check", "generator", "seed", "residual", "threshold", "comparison", "pass"});
        for (const auto& r : records) {
          w.row(std::vector<std::string>{r.check, r.generator, std::to_string(r.seed), format_double(r.residual),
                                         format_double(r.threshold), r.comparison, r.pass ? "true" : "false"});
        }
      } else {
        write_json(o.stream(), j);
      }
      return j["failed"].get<std::size_t>() == 0 ? kOk : kNegative;
    }

    if (*nu_report) {
      const A44Report rep = a44_report(nu_samples, nu_seed);
      Output o(nu_c.out_file, out);
      if (nu_c.format == "csv") {
        CsvWriter w(o.stream(), {"mu1", "mu2", "mu3", "nu1", "nu2", "nu3", "i", "j", "tabulated", "two_z", "direct"});
        for (const auto& r : rep.rows) {
          w.row(std::vector<std::string>{format_double(r.mu(0)), format_double(r.mu(1)), format_double(r.mu(2)),
                                         format_double(r.nu(0)), format_double(r.nu(1)), format_double(r.nu(2)),
                                         std::to_string(r.pair_i + 1), std::to_string(r.pair_j + 1),
                                         format_double(r.tabulated), format_double(r.two_z), format_double(r.direct)});
        }
      } else {
        write_json(o.stream(), to_json(rep));
      }
      return kOk;
    }

    if (*state_cmd) {
      std::ifstream in(state_motion);
      std::stringstream buf;
      buf << in.rdbuf();
      const Motion motion = parse_motion_config(buf.str());
      Output o(state_c.out_file, out);
      write_json(o.stream(), to_json(state_at(motion, state_t)));
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace corot::cli
