#include "qframe/report.hpp"

#include <cmath>
#include <cstdlib>

#include "qframe/errors.hpp"

namespace qframe {

ToleranceSet ToleranceSet::defaults() {
  ToleranceSet t;
  t.values_ = {
      {"bounds", 1e-9},     // frame inequality slack, relative to M
      {"dual", 1e-8},       // dual vectors against A^-1 eta
      {"equiv", 1e-7},      // kernel equivalence witness relations
      {"gauge", 1e-8},      // S(q) agreement and recovered-gauge unitarity
      {"invariance", 1e-9}, // A and S(q) under a gauge transform
      {"involution", 1e-9}, // dual of the dual
      {"isometry", 1e-9},   // RKHS norm of an analysed vector
      {"kernel", 1e-8},     // kernel properties and kernel comparisons
      {"operator", 1e-8},   // frame operator identities
      {"relative", 1e-7},   // relative bound comparisons
      {"self_dual", 1e-8},
      {"tight", 1e-8},
      {"unitary", 1e-10},   // user-supplied unitaries
      {"width", 1e-9},
  };
  return t;
}

ToleranceSet ToleranceSet::strict() {
  ToleranceSet t = defaults();
  for (auto& [name, value] : t.values_) value /= 10.0;
  return t;
}

ToleranceSet ToleranceSet::from_environment() {
  const char* profile = std::getenv("QFRAME_TOL_PROFILE");
  if (profile == nullptr || std::string_view(profile).empty() ||
      std::string_view(profile) == "default") {
    return defaults();
  }
  if (std::string_view(profile) == "strict") return strict();
  throw ValidationError(std::string("QFRAME_TOL_PROFILE must be 'strict' or 'default', got '") +
                        profile + "'");
}

void ToleranceSet::assign(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ValidationError("tolerance override must look like name=value: " + std::string(assignment));
  }
  const std::string name(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));
  const auto it = values_.find(name);
  if (it == values_.end()) throw ValidationError("unknown tolerance '" + name + "'");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v) || v < 0.0) {
    throw ValidationError("tolerance '" + name + "' needs a finite nonnegative value, got '" +
                          text + "'");
  }
  it->second = v;
}

double ToleranceSet::operator[](const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw ValidationError("unknown tolerance '" + name + "'");
  return it->second;
}

Json ToleranceSet::to_json() const {
  Json j = Json::object();
  for (const auto& [name, value] : values_) j[name] = value;
  return j;
}

void Report::add_input(const std::string& role, const std::string& path, std::string_view bytes) {
  inputs[role] = {{"path", path}, {"fnv1a64", fnv1a64_hex(bytes)}};
}

Json Report::to_json() const {
  Json j = {{"command", command},   {"inputs", inputs},   {"verdict", verdict},
            {"metrics", metrics},   {"witness", witness}, {"tolerances", tolerances}};
  if (!output.is_null()) j["output"] = output;
  return j;
}

Json spectrum_to_json(const SSpectrum& s) {
  Json spheres = Json::array();
  for (const auto& sp : s.spheres) spheres.push_back(Json::array({sp.a, sp.b}));
  return {{"spheres", std::move(spheres)}, {"is_real", s.is_real}, {"s_radius", s_radius(s)}};
}

}  // namespace qframe
