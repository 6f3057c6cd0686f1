#pragma once

/**
 * @file report.hpp
 * @brief Named tolerances and the machine-readable report printed by the CLI.
 */

#include <map>
#include <string>
#include <string_view>

#include "qframe/io.hpp"
#include "qframe/spectrum.hpp"

namespace qframe {

/// Named tolerances with their defaults. The "strict" profile divides every
/// default by 10.
class ToleranceSet {
 public:
  static ToleranceSet defaults();
  static ToleranceSet strict();
  /// Profile from QFRAME_TOL_PROFILE ("default" when unset). Unknown
  /// profiles throw ValidationError.
  static ToleranceSet from_environment();

  /// Applies "name=value"; unknown names or malformed values throw ValidationError.
  void assign(std::string_view assignment);
  [[nodiscard]] double operator[](const std::string& name) const;
  [[nodiscard]] const std::map<std::string, double>& values() const { return values_; }
  [[nodiscard]] Json to_json() const;

 private:
  std::map<std::string, double> values_;
};

struct Report {
  std::string command;
  Json inputs = Json::object();   // role -> {"path", "fnv1a64"}
  Json verdict = nullptr;         // bool for decision commands
  Json metrics = Json::object();
  Json witness = nullptr;
  Json output = nullptr;          // produced artifact when no -o was given
  Json tolerances = Json::object();

  /// Records a file input by its path and the digest of its bytes.
  void add_input(const std::string& role, const std::string& path, std::string_view bytes);
  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string render() const { return canonical_dump(to_json()); }
};

Json spectrum_to_json(const SSpectrum& s);

}  // namespace qframe
