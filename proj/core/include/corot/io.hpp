/**
 * @file io.hpp
 * @brief Text formats: locale-independent numbers, CSV rows, JSON views of
 *        results, B specifications, grids and motion configuration files.
 */
#pragma once

#include "corot/kinematics.hpp"
#include "corot/stiffness.hpp"
#include "corot/strains.hpp"
#include "corot/tensors.hpp"
#include "corot/verify.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace corot {

/// Shortest round-trip representation with '.' as decimal separator.
std::string format_double(double v);

/// Writes a header on construction and LF-terminated rows. Fields containing a
/// comma, quote or newline are quoted with doubled inner quotes.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);
  void row(const std::vector<double>& values);

 private:
  std::ostream& os_;
  std::size_t columns_;
};

/// "a,b,c" -> diag(a, b, c); "a11,a22,a33,a12,a13,a23" -> symmetric tensor.
/// Throws std::invalid_argument on malformed input and DomainError if not SPD.
SymTensor3 parse_b_spec(const std::string& text);

/// "start:stop:steps" (linear) or "start:stop:steps:log" (geometric), steps >= 1 points.
std::vector<double> parse_grid(const std::string& text);

/// "poly:c0,c1,...", "exp:scale,rate", "sin:offset,amplitude,omega[,phase]" or a constant.
ScalarPath parse_path(const std::string& text);
std::string path_to_string(const ScalarPath& path);

/// key = value lines; '#' starts a comment. Composite motions use outer./inner. prefixes.
Motion parse_motion_config(const std::string& text);
Motion parse_motion_config(const std::map<std::string, std::string>& keys);
std::string motion_to_config(const Motion& motion);

nlohmann::json to_json(const SymTensor3& t);
nlohmann::json to_json(const Tensor3& t);
nlohmann::json to_json(const RateClassification& c);
nlohmann::json to_json(const ZTable& t);
nlohmann::json to_json(const CheckRecord& r);
nlohmann::json to_json(const std::vector<CheckRecord>& records);
nlohmann::json to_json(const A44Report& report);
nlohmann::json to_json(const KinematicState& s);

}  // namespace corot
