#pragma once

#include <iosfwd>
#include <string>

namespace hill4 {

// Physical description of the primary / secondary / oblate tertiary triple.
struct PhysicalInputs {
  double mass_primary_kg = 0.0;
  double mass_secondary_kg = 0.0;
  double mass_tertiary_kg = 0.0;
  double distance_primary_secondary_km = 0.0;
  double equivalent_radius_tertiary_km = 0.0;
  double c20 = 0.0;                 // zonal coefficient, <= 0
  double spin_period_hours = 0.0;   // informational only
};

// Sun, Jupiter and Hektor.
PhysicalInputs hektor_inputs();

// Every normalized scalar of the model. Units: total mass = 1, primary-secondary
// distance = 1, angular velocity of the configuration rescaled to 1.
struct SystemParams {
  PhysicalInputs physical;

  double mu = 0.0;         // m2 / (m1 + m2)
  double m1 = 0.0;         // normalized masses, m1 + m2 + m3 = 1
  double m2 = 0.0;
  double m3 = 0.0;
  double r3 = 0.0;         // normalized tertiary radius
  double rho3 = 0.0;       // m3^(-1/3) r3
  double c20 = 0.0;
  double big_c = 0.0;      // -r3^2 c20 / 2 >= 0
  double little_c = 0.0;   // m3^(-2/3) r3^2 c20 / 2 <= 0
  double c_prime = 0.0;    // r3^2 c20 / 2, oblateness coefficient of the full model
  double v = 1.0;          // short side r12 of the isosceles configuration (u = 1)
  double v_defect = 0.0;   // v - 1 evaluated without cancellation
  double omega_sq = 1.0;   // 1 + 3 big_c
  double omega = 1.0;
  double lambda1 = 0.0;    // rotated-frame curvatures, lambda1 + lambda2 = 3
  double lambda2 = 3.0;
  double hill_length_km = 0.0;  // m3^(1/3) * distance_primary_secondary
};

// Throws Error(invalid_physical_input) or Error(prolate_unsupported).
SystemParams normalize_system(const PhysicalInputs& inputs);

double hill_to_km(const SystemParams& params, double length_hill);

// Flat `key = value` configuration with `#` comments. Keys: m1_kg, m2_kg,
// m3_kg, d12_km, radius_km, c20, spin_hours. Missing keys keep the Hektor
// defaults; unknown keys and malformed values throw Error(config_error).
PhysicalInputs parse_config(std::istream& in);
PhysicalInputs load_config(const std::string& path);

}  // namespace hill4
