#include "hill4/core_types.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "hill4/error.hpp"
#include "hill4/hill_model.hpp"

namespace hill4 {

PhysicalInputs hektor_inputs() {
  PhysicalInputs in;
  in.mass_primary_kg = 1.989e30;
  in.mass_secondary_kg = 1.898e27;
  in.mass_tertiary_kg = 7.91e18;
  in.distance_primary_secondary_km = 778.5e6;
  in.equivalent_radius_tertiary_km = 92.0;
  in.c20 = -0.476775;
  in.spin_period_hours = 6.92;
  return in;
}

namespace {

void validate(const PhysicalInputs& in) {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(in.mass_primary_kg) || !positive(in.mass_secondary_kg) ||
      !positive(in.mass_tertiary_kg)) {
    throw Error(Errc::invalid_physical_input, "masses must be finite and positive");
  }
  if (!(in.mass_primary_kg >= in.mass_secondary_kg &&
        in.mass_secondary_kg >= in.mass_tertiary_kg)) {
    throw Error(Errc::invalid_physical_input, "masses must satisfy m1 >= m2 >= m3");
  }
  if (!positive(in.distance_primary_secondary_km)) {
    throw Error(Errc::invalid_physical_input, "d12_km must be positive");
  }
  if (!positive(in.equivalent_radius_tertiary_km)) {
    throw Error(Errc::invalid_physical_input, "radius_km must be positive");
  }
  if (!std::isfinite(in.c20)) {
    throw Error(Errc::invalid_physical_input, "c20 must be finite");
  }
  if (in.c20 > 0.0) {
    throw Error(Errc::prolate_unsupported, "c20 > 0 describes a prolate tertiary");
  }
}

}  // namespace

SystemParams normalize_system(const PhysicalInputs& inputs) {
  validate(inputs);

  SystemParams p;
  p.physical = inputs;

  const double total = inputs.mass_primary_kg + inputs.mass_secondary_kg + inputs.mass_tertiary_kg;
  p.mu = inputs.mass_secondary_kg / (inputs.mass_primary_kg + inputs.mass_secondary_kg);
  p.m1 = inputs.mass_primary_kg / total;
  p.m2 = inputs.mass_secondary_kg / total;
  p.m3 = inputs.mass_tertiary_kg / total;

  p.r3 = inputs.equivalent_radius_tertiary_km / inputs.distance_primary_secondary_km;
  p.c20 = inputs.c20;
  const double cbrt_m3 = std::cbrt(p.m3);
  p.rho3 = p.r3 / cbrt_m3;
  p.c_prime = p.r3 * p.r3 * p.c20 / 2.0;
  p.big_c = -p.c_prime;
  p.little_c = p.rho3 * p.rho3 * p.c20 / 2.0;

  // (1 + 3C)^(-1/3) - 1 is ~1e-15 for Hektor; keep the defect exact.
  const double three_c = 3.0 * p.big_c;
  p.v_defect = std::expm1(-std::log1p(three_c) / 3.0);
  p.v = 1.0 + p.v_defect;
  p.omega_sq = 1.0 + three_c;
  p.omega = std::sqrt(p.omega_sq);

  const auto eig = hill::rotation_eigenvalues(p.mu, p.v);
  p.lambda1 = eig.lambda1;
  p.lambda2 = eig.lambda2;

  p.hill_length_km = cbrt_m3 * inputs.distance_primary_secondary_km;
  return p;
}

double hill_to_km(const SystemParams& params, double length_hill) {
  return length_hill * params.hill_length_km;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view text, int line_no) {
  const std::string value(text);
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw Error(Errc::config_error, "line " + std::to_string(line_no) + ": key '" +
                                        std::string(key) + "' has non-numeric value '" + value +
                                        "'");
  }
  return x;
}

}  // namespace

PhysicalInputs parse_config(std::istream& in) {
  PhysicalInputs out = hektor_inputs();
  const std::map<std::string, double PhysicalInputs::*, std::less<>> fields = {
      {"m1_kg", &PhysicalInputs::mass_primary_kg},
      {"m2_kg", &PhysicalInputs::mass_secondary_kg},
      {"m3_kg", &PhysicalInputs::mass_tertiary_kg},
      {"d12_km", &PhysicalInputs::distance_primary_secondary_km},
      {"radius_km", &PhysicalInputs::equivalent_radius_tertiary_km},
      {"c20", &PhysicalInputs::c20},
      {"spin_hours", &PhysicalInputs::spin_period_hours},
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::config_error,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = fields.find(key);
    if (it == fields.end()) {
      throw Error(Errc::config_error,
                  "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
    out.*(it->second) = parse_number(key, value, line_no);
  }
  return out;
}

PhysicalInputs load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(Errc::config_error, "cannot open config file '" + path + "'");
  return parse_config(file);
}

}  // namespace hill4
